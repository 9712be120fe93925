#include "racsim/engine.hpp"

#include "racsim/rac_engine.hpp"
#include "racsim/set_assoc_engine.hpp"

namespace racsim {

const char* to_string(FillCase c) {
    switch (c) {
        case FillCase::none: return "none";
        case FillCase::c1: return "c1";
        case FillCase::c2: return "c2";
        case FillCase::c3: return "c3";
        case FillCase::c4: return "c4";
    }
    return "?";
}

const char* to_string(Policy p) {
    switch (p) {
        case Policy::rac: return "rac";
        case Policy::lru: return "lru";
        case Policy::random: return "random";
        case Policy::vway: return "vway";
    }
    return "?";
}

Policy policy_from_string(const std::string& name) {
    if (name == "rac") return Policy::rac;
    if (name == "lru") return Policy::lru;
    if (name == "random") return Policy::random;
    if (name == "vway") return Policy::vway;
    throw ConfigError("unknown policy '" + name + "' (expected rac|lru|random|vway)");
}

bool is_set_assoc_policy(Policy p) { return p == Policy::lru || p == Policy::random; }

BaselineConfig baseline_config_from(const SimConfig& cfg) {
    BaselineConfig b;
    b.num_sets = cfg.num_sets;
    b.ways = cfg.data_ways;
    b.block_size_bytes = cfg.block_size_bytes;
    b.seed = cfg.seed;
    return b;
}

std::unique_ptr<Engine> make_engine(Policy policy, const SimConfig& cfg) {
    switch (policy) {
        case Policy::rac:
            return std::make_unique<RacEngine>(cfg, GlobalVictim::random_frame);
        case Policy::vway:
            return std::make_unique<RacEngine>(cfg, GlobalVictim::reuse_scan);
        case Policy::lru:
            return std::make_unique<SetAssocEngine>(baseline_config_from(cfg), ReplacePolicy::lru);
        case Policy::random:
            return std::make_unique<SetAssocEngine>(baseline_config_from(cfg),
                                                    ReplacePolicy::random_way);
    }
    throw ConfigError("unhandled policy");
}

} // namespace racsim
