#ifndef RACSIM_RUNNER_HPP_
#define RACSIM_RUNNER_HPP_

#include <span>
#include <string>

#include "racsim/engine.hpp"
#include "racsim/stats.hpp"

namespace racsim {

// Streams a trace through one engine. The first `warmup` accesses mutate
// cache state but are left out of the stats.
StatsReport run_trace(Policy policy, const SimConfig& cfg, std::span<const Access> trace,
                      std::uint64_t warmup = 0, const std::string& trace_desc = "<memory>",
                      bool use_oracle = false);

} // namespace racsim

#endif
