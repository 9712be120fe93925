#ifndef RACSIM_ORACLE_HPP_
#define RACSIM_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "racsim/engine.hpp"
#include "racsim/rng.hpp"

namespace racsim {

// Brute-force replay of every policy's semantics, kept deliberately naive so
// it can certify the engines: no free list, no recency list, no rank/select
// structure. Every "lowest", "r-th valid" and "least recently used" question
// is answered by a fresh linear scan; LRU order comes from per-entry logical
// timestamps instead of an ordered list. Shares only the type contracts and
// the RNG recurrence with the engines.
class ReferenceOracle final : public Engine {
public:
    ReferenceOracle(Policy policy, const SimConfig& cfg);

    AccessOutcome access(const Access& access) override;
    StateSnapshot snapshot() const override;
    std::uint64_t rng_state() const override { return rng_.state(); }
    Policy policy() const override { return policy_; }

private:
    struct TagEntry {
        bool valid = false;
        std::uint64_t tag = 0;
        std::uint64_t fwd = 0;
        std::uint64_t last_used = 0;
    };
    struct Frame {
        bool valid = false;
        std::uint64_t back_set = 0;
        std::uint64_t back_way = 0;
        bool dirty = false;
        std::uint8_t reuse_count = 0;
    };

    AccessOutcome access_decoupled(const Access& access);
    AccessOutcome access_set_assoc(const Access& access);

    std::uint64_t lru_way(std::uint64_t set_index) const;
    std::uint64_t lowest_invalid_way(std::uint64_t set_index) const;
    std::uint64_t count_valid_frames() const;
    std::uint64_t nth_valid_frame(std::uint64_t r) const;
    std::uint64_t pick_victim_frame();
    void evict_tag(std::uint64_t set_index, std::uint64_t way, AccessOutcome& out);
    void install(std::uint64_t set_index, std::uint64_t way, std::uint64_t tag,
                 std::uint64_t frame, bool is_store);

    Policy policy_;
    SimConfig cfg_;
    std::uint32_t ways_ = 0;          // tag ways (decoupled) or set ways (baseline)
    std::uint64_t frame_count_ = 0;
    std::vector<std::vector<TagEntry>> sets_;
    std::vector<Frame> frames_;       // decoupled policies only
    SplitMix64 rng_;
    std::uint64_t clock_ = 0;
    std::uint64_t scan_cursor_ = 0;
};

std::vector<AccessOutcome> oracle_replay(Policy policy, const SimConfig& cfg,
                                         std::span<const Access> trace);

} // namespace racsim

#endif
