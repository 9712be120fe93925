#include "racsim/stats.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace racsim {

void RunStats::record(const Access& access, const AccessOutcome& outcome) {
    ++accesses;
    if (access.kind == AccessKind::load) {
        ++loads;
    } else {
        ++stores;
    }
    if (outcome.hit) {
        ++hits;
    } else {
        ++misses;
        ++fills_by_case[static_cast<std::size_t>(outcome.fill_case) - 1];
    }
    for (const Eviction& e : outcome.evicted) {
        if (e.was_dirty) ++writebacks;
    }
}

StatsReport finalize(const RunStats& stats, Policy policy, const SimConfig& cfg,
                     std::uint64_t warmup, const std::string& trace_desc) {
    StatsReport r;
    r.policy = to_string(policy);
    r.config = cfg;
    r.warmup = warmup;
    r.trace = trace_desc;
    r.accesses = stats.accesses;
    r.hits = stats.hits;
    r.misses = stats.misses;
    r.loads = stats.loads;
    r.stores = stats.stores;
    r.writebacks = stats.writebacks;
    r.fills_by_case = stats.fills_by_case;
    r.hit_rate = stats.accesses == 0
                     ? 0.0
                     : static_cast<double>(stats.hits) / static_cast<double>(stats.accesses);
    return r;
}

namespace {

bool report_is_baseline(const StatsReport& r) { return r.policy == "lru" || r.policy == "random"; }

nlohmann::ordered_json config_echo(const StatsReport& r) {
    nlohmann::ordered_json cfg;
    cfg["num_sets"] = r.config.num_sets;
    if (report_is_baseline(r)) {
        cfg["ways"] = r.config.data_ways;
        cfg["block_size_bytes"] = r.config.block_size_bytes;
    } else {
        cfg["tag_ways"] = r.config.tag_ways;
        cfg["data_ways"] = r.config.data_ways;
        cfg["block_size_bytes"] = r.config.block_size_bytes;
        cfg["case4_mode"] = to_string(r.config.case4_mode);
    }
    cfg["warmup"] = r.warmup;
    return cfg;
}

nlohmann::ordered_json to_json_obj(const StatsReport& r) {
    nlohmann::ordered_json j;
    j["policy"] = r.policy;
    j["config"] = config_echo(r);
    j["seed"] = r.config.seed;
    j["trace"] = r.trace;
    j["accesses"] = r.accesses;
    j["loads"] = r.loads;
    j["stores"] = r.stores;
    j["hits"] = r.hits;
    j["misses"] = r.misses;
    j["writebacks"] = r.writebacks;
    j["fills_by_case"] = {{"c1", r.fills_by_case[0]},
                          {"c2", r.fills_by_case[1]},
                          {"c3", r.fills_by_case[2]},
                          {"c4", r.fills_by_case[3]}};
    j["hit_rate"] = r.hit_rate;
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Shortest round-trip double representation, same as the JSON emitter's.
std::string format_double(double v) { return nlohmann::json(v).dump(); }

} // namespace

std::string to_json(const StatsReport& report) { return to_json_obj(report).dump(2); }

StatsReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    StatsReport r;
    r.policy = j.at("policy").get<std::string>();
    const auto& cfg = j.at("config");
    r.config.num_sets = cfg.at("num_sets").get<std::uint32_t>();
    r.config.block_size_bytes = cfg.at("block_size_bytes").get<std::uint32_t>();
    if (cfg.contains("ways")) {
        r.config.data_ways = cfg.at("ways").get<std::uint32_t>();
        r.config.tag_ways = r.config.data_ways;
    } else {
        r.config.tag_ways = cfg.at("tag_ways").get<std::uint32_t>();
        r.config.data_ways = cfg.at("data_ways").get<std::uint32_t>();
        r.config.case4_mode = case4_mode_from_string(cfg.at("case4_mode").get<std::string>());
    }
    r.warmup = cfg.at("warmup").get<std::uint64_t>();
    r.config.seed = j.at("seed").get<std::uint64_t>();
    r.trace = j.at("trace").get<std::string>();
    r.accesses = j.at("accesses").get<std::uint64_t>();
    r.loads = j.at("loads").get<std::uint64_t>();
    r.stores = j.at("stores").get<std::uint64_t>();
    r.hits = j.at("hits").get<std::uint64_t>();
    r.misses = j.at("misses").get<std::uint64_t>();
    r.writebacks = j.at("writebacks").get<std::uint64_t>();
    const auto& fills = j.at("fills_by_case");
    r.fills_by_case = {fills.at("c1").get<std::uint64_t>(), fills.at("c2").get<std::uint64_t>(),
                       fills.at("c3").get<std::uint64_t>(), fills.at("c4").get<std::uint64_t>()};
    r.hit_rate = j.at("hit_rate").get<double>();
    return r;
}

std::string to_csv(std::span<const StatsReport> reports) {
    std::ostringstream out;
    out << "policy,seed,trace,num_sets,tag_ways,data_ways,block_size_bytes,case4_mode,warmup,"
           "accesses,loads,stores,hits,misses,writebacks,fills_c1,fills_c2,fills_c3,fills_c4,"
           "hit_rate\n";
    for (const StatsReport& r : reports) {
        bool baseline = report_is_baseline(r);
        out << csv_escape(r.policy) << ',' << r.config.seed << ',' << csv_escape(r.trace) << ','
            << r.config.num_sets << ',';
        if (baseline) {
            out << ',' << r.config.data_ways << ',' << r.config.block_size_bytes << ",,";
        } else {
            out << r.config.tag_ways << ',' << r.config.data_ways << ','
                << r.config.block_size_bytes << ',' << to_string(r.config.case4_mode) << ',';
        }
        out << r.warmup << ',' << r.accesses << ',' << r.loads << ',' << r.stores << ','
            << r.hits << ',' << r.misses << ',' << r.writebacks;
        for (std::uint64_t fills : r.fills_by_case) out << ',' << fills;
        out << ',' << format_double(r.hit_rate) << '\n';
    }
    return out.str();
}

std::string format_percent(double ratio) {
    // Two decimals by truncation, not rounding: 0.607767… renders as 60.77%.
    // Render at six decimals first so representation noise (~1e-14) cannot
    // pull an exactly-representable ratio below its decimal boundary.
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", ratio * 100.0);
    std::string s(buf);
    return s.substr(0, s.find('.') + 3) + "%";
}

std::string human_report(const StatsReport& r) {
    std::ostringstream out;
    out << "policy:      " << r.policy << '\n';
    out << "trace:       " << r.trace << '\n';
    out << "config:      " << r.config.num_sets << " sets, ";
    if (report_is_baseline(r)) {
        out << r.config.data_ways << " ways, ";
    } else {
        out << r.config.tag_ways << " tag ways, " << r.config.data_ways << " data ways, ";
    }
    out << r.config.block_size_bytes << " B blocks";
    if (!report_is_baseline(r)) out << ", case4 " << to_string(r.config.case4_mode);
    out << '\n';
    out << "seed:        " << r.config.seed << '\n';
    if (r.warmup > 0) out << "warmup:      " << r.warmup << " accesses discarded\n";
    out << "accesses:    " << r.accesses << " (" << r.loads << " loads, " << r.stores
        << " stores)\n";
    out << "hits:        " << r.hits << '\n';
    out << "misses:      " << r.misses << " (c1 " << r.fills_by_case[0] << ", c2 "
        << r.fills_by_case[1] << ", c3 " << r.fills_by_case[2] << ", c4 " << r.fills_by_case[3]
        << ")\n";
    out << "writebacks:  " << r.writebacks << '\n';
    out << "hit rate:    " << format_percent(r.hit_rate) << '\n';
    return out.str();
}

std::string compare_table(std::span<const StatsReport> reports) {
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof(line), "%-8s %12s %12s %12s %10s\n", "policy", "accesses", "hits",
                  "misses", "hit_rate");
    out << line;
    for (const StatsReport& r : reports) {
        std::snprintf(line, sizeof(line), "%-8s %12llu %12llu %12llu %10s\n", r.policy.c_str(),
                      static_cast<unsigned long long>(r.accesses),
                      static_cast<unsigned long long>(r.hits),
                      static_cast<unsigned long long>(r.misses),
                      format_percent(r.hit_rate).c_str());
        out << line;
    }
    return out.str();
}

} // namespace racsim
