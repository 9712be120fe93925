#ifndef RACSIM_GENERATORS_HPP_
#define RACSIM_GENERATORS_HPP_

#include <cstdint>
#include <span>

#include "racsim/config.hpp"
#include "racsim/trace.hpp"

namespace racsim {

// Synthetic workloads, all loads, block ids scaled to byte addresses by
// block_size_bytes. uniform/cyclic/single_set use only integer arithmetic on
// the shared RNG and are bit-exact across implementations; zipf goes through
// floating-point inverse-CDF sampling and is only deterministic per build.

TraceStream gen_uniform(std::uint64_t n_blocks, std::size_t length, std::uint64_t seed,
                        std::uint32_t block_size_bytes = 64);

// Block popularity ~ rank^(-s) with rank 1 (block id 0) hottest; s = 0
// degenerates to the uniform distribution.
TraceStream gen_zipf(std::uint64_t n_blocks, double s, std::size_t length, std::uint64_t seed,
                     std::uint32_t block_size_bytes = 64);

TraceStream gen_cyclic(std::span<const std::uint64_t> blocks, std::size_t passes,
                       std::uint32_t block_size_bytes = 64);

// `distinct` blocks that all map to set_index under cfg's geometry, cycled
// `passes` times: the non-uniform set-utilization stress pattern.
TraceStream gen_single_set(const SimConfig& cfg, std::uint32_t set_index, std::uint32_t distinct,
                           std::size_t passes);

} // namespace racsim

#endif
