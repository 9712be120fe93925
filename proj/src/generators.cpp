#include "racsim/generators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "racsim/rng.hpp"

namespace racsim {

namespace {

Access load_of_block(std::uint64_t block, std::uint32_t block_size_bytes) {
    return {AccessKind::load, block * block_size_bytes};
}

} // namespace

TraceStream gen_uniform(std::uint64_t n_blocks, std::size_t length, std::uint64_t seed,
                        std::uint32_t block_size_bytes) {
    if (n_blocks == 0) throw ConfigError("gen_uniform: n_blocks must be >= 1");
    TraceStream stream;
    stream.accesses.reserve(length);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < length; ++i) {
        stream.accesses.push_back(load_of_block(rng.next() % n_blocks, block_size_bytes));
    }
    return stream;
}

TraceStream gen_zipf(std::uint64_t n_blocks, double s, std::size_t length, std::uint64_t seed,
                     std::uint32_t block_size_bytes) {
    if (n_blocks == 0) throw ConfigError("gen_zipf: n_blocks must be >= 1");
    if (!(s >= 0.0)) throw ConfigError("gen_zipf: exponent s must be >= 0");

    // Weights normalized once; sampling is inverse-CDF by binary search.
    std::vector<double> cdf(n_blocks);
    double total = 0.0;
    for (std::uint64_t rank = 1; rank <= n_blocks; ++rank) {
        total += std::pow(static_cast<double>(rank), -s);
        cdf[rank - 1] = total;
    }
    for (double& c : cdf) c /= total;

    TraceStream stream;
    stream.accesses.reserve(length);
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < length; ++i) {
        double u = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;  // [0, 1)
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t block = it == cdf.end() ? n_blocks - 1
                                              : static_cast<std::uint64_t>(it - cdf.begin());
        stream.accesses.push_back(load_of_block(block, block_size_bytes));
    }
    return stream;
}

TraceStream gen_cyclic(std::span<const std::uint64_t> blocks, std::size_t passes,
                       std::uint32_t block_size_bytes) {
    if (blocks.empty()) throw ConfigError("gen_cyclic: block list must be nonempty");
    TraceStream stream;
    stream.accesses.reserve(blocks.size() * passes);
    for (std::size_t p = 0; p < passes; ++p) {
        for (std::uint64_t block : blocks) {
            stream.accesses.push_back(load_of_block(block, block_size_bytes));
        }
    }
    return stream;
}

TraceStream gen_single_set(const SimConfig& cfg, std::uint32_t set_index, std::uint32_t distinct,
                           std::size_t passes) {
    cfg.validate();
    if (set_index >= cfg.num_sets)
        throw ConfigError("gen_single_set: set_index " + std::to_string(set_index) +
                          " out of range for " + std::to_string(cfg.num_sets) + " sets");
    if (distinct == 0) throw ConfigError("gen_single_set: distinct must be >= 1");
    TraceStream stream;
    stream.accesses.reserve(static_cast<std::size_t>(distinct) * passes);
    for (std::size_t p = 0; p < passes; ++p) {
        for (std::uint32_t i = 0; i < distinct; ++i) {
            std::uint64_t block = static_cast<std::uint64_t>(i) * cfg.num_sets + set_index;
            stream.accesses.push_back(load_of_block(block, cfg.block_size_bytes));
        }
    }
    return stream;
}

} // namespace racsim
