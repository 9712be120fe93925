#ifndef RACSIM_RAC_ENGINE_HPP_
#define RACSIM_RAC_ENGINE_HPP_

#include <cstdint>
#include <vector>

#include "racsim/engine.hpp"
#include "racsim/frame_pool.hpp"
#include "racsim/rng.hpp"

namespace racsim {

// How a decoupled engine picks the frame victim when the data store is full:
// rac draws one uniformly, vway runs the reuse-counter clock scan.
enum class GlobalVictim : std::uint8_t { random_frame, reuse_scan };

// Decoupled-store engine: a per-set tag directory (tag_ways wide, LRU order)
// over one global pool of data frames. Tag entries and frames are linked both
// ways; any set may claim any frame.
class RacEngine final : public Engine {
public:
    explicit RacEngine(const SimConfig& cfg, GlobalVictim victim = GlobalVictim::random_frame);

    AccessOutcome access(const Access& access) override;
    StateSnapshot snapshot() const override;
    std::uint64_t rng_state() const override { return rng_.state(); }
    Policy policy() const override {
        return victim_ == GlobalVictim::reuse_scan ? Policy::vway : Policy::rac;
    }

    // Uniform draw over the valid frames: r = next() mod k, then the r-th
    // valid frame in ascending index order. Exactly one RNG draw.
    std::uint32_t select_random_victim();

    const SimConfig& config() const { return cfg_; }
    std::uint64_t valid_frame_count() const { return pool_.valid_count(); }
    std::uint64_t valid_tag_count() const { return valid_tags_; }
    std::uint64_t reuse_scan_cursor() const { return scan_cursor_; }

private:
    struct TagEntry {
        bool valid = false;
        std::uint64_t tag = 0;
        std::uint32_t fwd = 0;
    };
    struct TagSet {
        std::vector<TagEntry> entries;
        std::vector<std::uint32_t> recency;  // MRU first
    };
    struct Frame {
        bool valid = false;
        std::uint32_t back_set = 0;
        std::uint32_t back_way = 0;
        bool dirty = false;
        std::uint8_t reuse_count = 0;  // vway only; rac keeps it zero
    };

    std::uint32_t lowest_invalid_way(const TagSet& set) const;
    std::uint32_t select_victim_frame();
    std::uint32_t select_reuse_victim();
    void touch_mru(TagSet& set, std::uint32_t way);
    void remove_from_recency(TagSet& set, std::uint32_t way);
    // Invalidates the tag entry, records the eviction. Frame disposal is the
    // caller's business.
    void evict_tag(std::uint32_t set_index, std::uint32_t way, AccessOutcome& out);
    void install(std::uint32_t set_index, std::uint32_t way, std::uint64_t tag,
                 std::uint32_t frame, bool is_store);

    SimConfig cfg_;
    GlobalVictim victim_;
    std::vector<TagSet> sets_;
    std::vector<Frame> frames_;
    FramePool pool_;
    SplitMix64 rng_;
    std::uint64_t scan_cursor_ = 0;
    std::uint64_t valid_tags_ = 0;
};

} // namespace racsim

#endif
