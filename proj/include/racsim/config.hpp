#ifndef RACSIM_CONFIG_HPP_
#define RACSIM_CONFIG_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace racsim {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// What to do in fill case 4 (tag set full AND data store full).
//   reuse   - evict the set's LRU tag and reuse its frame in place; no RNG draw.
//   literal - evict the LRU tag, free its frame, then additionally evict a
//             random frame and place the new data there. Shrinks occupancy
//             by one line per event.
enum class Case4Mode : std::uint8_t { reuse, literal };

const char* to_string(Case4Mode mode);
Case4Mode case4_mode_from_string(const std::string& name);

// Geometry and run parameters for the decoupled-tag engines (rac, vway).
struct SimConfig {
    std::uint32_t num_sets = 2048;        // power of two
    std::uint32_t tag_ways = 32;          // per-set tag directory ways
    std::uint32_t data_ways = 16;         // frames per set worth of global data store
    std::uint32_t block_size_bytes = 64;  // power of two
    std::uint64_t seed = 0;
    Case4Mode case4_mode = Case4Mode::reuse;

    std::uint64_t total_frames() const {
        return static_cast<std::uint64_t>(num_sets) * data_ways;
    }

    // Tag-to-data ratio; 2 with the default 32/16 split.
    double tdr() const {
        return static_cast<double>(num_sets) * tag_ways / static_cast<double>(total_frames());
    }

    // Throws ConfigError on any violated field constraint.
    void validate() const;

    bool operator==(const SimConfig&) const = default;
};

// Geometry for the conventional set-associative baselines (lru, random).
// Defaults match the rac data capacity: 2048 sets x 16 ways x 64 B = 2 MiB.
struct BaselineConfig {
    std::uint32_t num_sets = 2048;        // power of two
    std::uint32_t ways = 16;
    std::uint32_t block_size_bytes = 64;  // power of two
    std::uint64_t seed = 0;

    void validate() const;

    bool operator==(const BaselineConfig&) const = default;
};

} // namespace racsim

#endif
