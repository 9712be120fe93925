#ifndef RACSIM_SNAPSHOT_HPP_
#define RACSIM_SNAPSHOT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace racsim {

// Structural view of an engine (or oracle) state, uniform across policies so
// one invariant checker covers them all. Set-associative baselines report
// their line slots as frames with identity links.
struct StateSnapshot {
    std::uint32_t num_sets = 0;
    std::uint32_t tag_ways = 0;
    std::uint64_t total_frames = 0;

    struct Entry {
        bool valid = false;
        std::uint64_t tag = 0;
        std::uint32_t fwd = 0;  // frame index; meaningful only when valid
    };
    struct Frame {
        bool valid = false;
        std::uint32_t back_set = 0;  // owning tag location; meaningful only when valid
        std::uint32_t back_way = 0;
        bool dirty = false;
        std::uint8_t reuse_count = 0;
    };

    std::vector<std::vector<Entry>> sets;           // [num_sets][tag_ways]
    std::vector<std::vector<std::uint32_t>> recency;  // per set, MRU first
    std::vector<Frame> frames;                      // [total_frames]
    std::vector<std::uint32_t> free_frames;         // as reported by the engine

    std::uint64_t valid_tag_count() const;
    std::uint64_t valid_frame_count() const;
};

// Checks the structural invariants:
//   I1 valid tags and valid frames correspond one-to-one via fwd/back links
//   I2 per-set and global capacity respected
//   I3 each recency list is a permutation of exactly its set's valid ways
//   I4 the free list is exactly the set of invalid frame indices
//   I8 no two valid entries of one set carry the same tag
// Returns one description per violation; empty means clean.
std::vector<std::string> check_invariants(const StateSnapshot& s);

} // namespace racsim

#endif
