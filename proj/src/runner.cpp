#include "racsim/runner.hpp"

#include "racsim/oracle.hpp"

namespace racsim {

StatsReport run_trace(Policy policy, const SimConfig& cfg, std::span<const Access> trace,
                      std::uint64_t warmup, const std::string& trace_desc, bool use_oracle) {
    std::unique_ptr<Engine> engine;
    if (use_oracle) {
        engine = std::make_unique<ReferenceOracle>(policy, cfg);
    } else {
        engine = make_engine(policy, cfg);
    }
    RunStats stats;
    std::uint64_t index = 0;
    for (const Access& a : trace) {
        AccessOutcome outcome = engine->access(a);
        if (index >= warmup) stats.record(a, outcome);
        ++index;
    }
    return finalize(stats, policy, cfg, warmup, trace_desc);
}

} // namespace racsim
