#ifndef RACSIM_STATS_HPP_
#define RACSIM_STATS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "racsim/config.hpp"
#include "racsim/engine.hpp"

namespace racsim {

// Per-run counter accumulator. Conservation holds after every record call:
// hits + misses = accesses, loads + stores = accesses, sum(fills) = misses.
struct RunStats {
    std::uint64_t accesses = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t loads = 0;
    std::uint64_t stores = 0;
    std::uint64_t writebacks = 0;
    std::array<std::uint64_t, 4> fills_by_case{};  // index 0 = c1

    void record(const Access& access, const AccessOutcome& outcome);
};

struct StatsReport {
    std::string policy;
    SimConfig config;  // for lru/random, data_ways carries the baseline ways
    std::uint64_t warmup = 0;
    std::string trace;

    std::uint64_t accesses = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t loads = 0;
    std::uint64_t stores = 0;
    std::uint64_t writebacks = 0;
    std::array<std::uint64_t, 4> fills_by_case{};
    double hit_rate = 0.0;  // hits/accesses; 0 when there were no accesses

    bool operator==(const StatsReport&) const = default;
};

StatsReport finalize(const RunStats& stats, Policy policy, const SimConfig& cfg,
                     std::uint64_t warmup, const std::string& trace_desc);

std::string to_json(const StatsReport& report);
StatsReport report_from_json(const std::string& text);

// One header row, then one row per report; column order is fixed. Baselines
// leave tag_ways/case4_mode blank and report their ways under data_ways.
std::string to_csv(std::span<const StatsReport> reports);

std::string human_report(const StatsReport& report);

// Policies as rows, {accesses, hits, misses, hit_rate} as columns.
std::string compare_table(std::span<const StatsReport> reports);

// "60.77%" style from a [0,1] ratio: two decimals, truncated (not rounded).
std::string format_percent(double ratio);

} // namespace racsim

#endif
