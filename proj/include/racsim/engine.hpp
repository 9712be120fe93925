#ifndef RACSIM_ENGINE_HPP_
#define RACSIM_ENGINE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "racsim/config.hpp"
#include "racsim/snapshot.hpp"

namespace racsim {

// Violated engine precondition; unreachable from the public access path.
struct EngineError : std::logic_error {
    explicit EngineError(const std::string& what) : std::logic_error(what) {}
};

enum class AccessKind : std::uint8_t { load, store };

struct Access {
    AccessKind kind = AccessKind::load;
    std::uint64_t address = 0;

    bool operator==(const Access&) const = default;
};

// Which fill/eviction case a miss took. Determined by table state at access
// time: c1 = tag room + free frame, c2 = set full + free frame,
// c3 = tag room + frames full, c4 = both full.
enum class FillCase : std::uint8_t { none, c1, c2, c3, c4 };

const char* to_string(FillCase c);

struct Eviction {
    std::uint64_t block_addr = 0;
    bool was_dirty = false;

    bool operator==(const Eviction&) const = default;
};

struct AccessOutcome {
    bool hit = false;
    FillCase fill_case = FillCase::none;  // none iff hit
    std::vector<Eviction> evicted;        // at most two entries (case 4, literal mode)
    // Frame (or slot, for the set-associative baselines) holding the block
    // after the access.
    std::optional<std::uint32_t> frame_used;

    bool operator==(const AccessOutcome&) const = default;
};

enum class Policy : std::uint8_t { rac, lru, random, vway };

const char* to_string(Policy p);
Policy policy_from_string(const std::string& name);
bool is_set_assoc_policy(Policy p);

class Engine {
public:
    virtual ~Engine() = default;

    virtual AccessOutcome access(const Access& access) = 0;
    virtual StateSnapshot snapshot() const = 0;
    virtual std::uint64_t rng_state() const = 0;
    virtual Policy policy() const = 0;

    std::vector<std::string> check_invariants() const {
        return racsim::check_invariants(snapshot());
    }
};

// Baselines derive their geometry from the rac config: ways = data_ways, so
// every policy runs at identical data capacity.
BaselineConfig baseline_config_from(const SimConfig& cfg);

std::unique_ptr<Engine> make_engine(Policy policy, const SimConfig& cfg);

} // namespace racsim

#endif
