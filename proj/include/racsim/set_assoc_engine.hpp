#ifndef RACSIM_SET_ASSOC_ENGINE_HPP_
#define RACSIM_SET_ASSOC_ENGINE_HPP_

#include <cstdint>
#include <vector>

#include "racsim/engine.hpp"
#include "racsim/rng.hpp"

namespace racsim {

enum class ReplacePolicy : std::uint8_t { lru, random_way };

// Conventional set-associative cache: tags and data live together, victim
// chosen within the set. Misses report c1 when an invalid way is filled and
// c2 when a resident line is evicted; c3/c4 cannot occur.
class SetAssocEngine final : public Engine {
public:
    SetAssocEngine(const BaselineConfig& cfg, ReplacePolicy policy);

    AccessOutcome access(const Access& access) override;
    StateSnapshot snapshot() const override;
    std::uint64_t rng_state() const override { return rng_.state(); }
    Policy policy() const override {
        return policy_ == ReplacePolicy::lru ? Policy::lru : Policy::random;
    }

    const BaselineConfig& config() const { return cfg_; }

private:
    struct Line {
        bool valid = false;
        std::uint64_t tag = 0;
        bool dirty = false;
    };
    struct Set {
        std::vector<Line> lines;
        std::vector<std::uint32_t> recency;  // MRU first
    };

    void touch_mru(Set& set, std::uint32_t way);

    BaselineConfig cfg_;
    ReplacePolicy policy_;
    std::vector<Set> sets_;
    SplitMix64 rng_;
};

} // namespace racsim

#endif
