#include "racsim/config.hpp"

namespace racsim {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

const char* to_string(Case4Mode mode) {
    return mode == Case4Mode::reuse ? "reuse" : "literal";
}

Case4Mode case4_mode_from_string(const std::string& name) {
    if (name == "reuse") return Case4Mode::reuse;
    if (name == "literal") return Case4Mode::literal;
    throw ConfigError("unknown case4 mode '" + name + "' (expected reuse|literal)");
}

void SimConfig::validate() const {
    if (!is_pow2(num_sets))
        throw ConfigError("num_sets must be a power of two, got " + std::to_string(num_sets));
    if (!is_pow2(block_size_bytes))
        throw ConfigError("block_size_bytes must be a power of two, got " +
                          std::to_string(block_size_bytes));
    if (tag_ways == 0) throw ConfigError("tag_ways must be >= 1");
    if (data_ways == 0) throw ConfigError("data_ways must be >= 1");
    if (tag_ways < data_ways)
        throw ConfigError("tag_ways (" + std::to_string(tag_ways) +
                          ") must be >= data_ways (" + std::to_string(data_ways) + ")");
}

void BaselineConfig::validate() const {
    if (!is_pow2(num_sets))
        throw ConfigError("num_sets must be a power of two, got " + std::to_string(num_sets));
    if (!is_pow2(block_size_bytes))
        throw ConfigError("block_size_bytes must be a power of two, got " +
                          std::to_string(block_size_bytes));
    if (ways == 0) throw ConfigError("ways must be >= 1");
}

} // namespace racsim
