#ifndef RACSIM_ADDRESS_HPP_
#define RACSIM_ADDRESS_HPP_

#include <cstdint>

#include "racsim/config.hpp"

namespace racsim {

// Block-aligned decomposition: set index from the low block-address bits,
// tag from the remaining high bits. block_addr == tag * num_sets + set_index.
struct AddressParts {
    std::uint64_t block_addr = 0;
    std::uint32_t set_index = 0;
    std::uint64_t tag = 0;
};

inline AddressParts map_address(std::uint32_t num_sets, std::uint32_t block_size_bytes,
                                std::uint64_t address) {
    AddressParts parts;
    parts.block_addr = address / block_size_bytes;
    parts.set_index = static_cast<std::uint32_t>(parts.block_addr % num_sets);
    parts.tag = parts.block_addr / num_sets;
    return parts;
}

inline AddressParts map_address(const SimConfig& cfg, std::uint64_t address) {
    return map_address(cfg.num_sets, cfg.block_size_bytes, address);
}

inline AddressParts map_address(const BaselineConfig& cfg, std::uint64_t address) {
    return map_address(cfg.num_sets, cfg.block_size_bytes, address);
}

} // namespace racsim

#endif
