#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "racsim/config.hpp"
#include "racsim/engine.hpp"
#include "racsim/generators.hpp"
#include "racsim/runner.hpp"
#include "racsim/stats.hpp"
#include "racsim/trace.hpp"

namespace {

using namespace racsim;

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

TraceStream load_trace(const std::string& path, const std::string& format_name) {
    TraceFormat format = trace_format_from_string(format_name);
    if (path == "-") return read_trace(std::cin, format);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open trace file '" + path + "'");
    return read_trace(in, format);
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing to '" + path + "'");
}

// "--blocks 0x0,0x40" style comma-separated block ids, hex or decimal.
std::vector<std::uint64_t> parse_block_list(const std::string& spec) {
    if (spec.empty()) throw ConfigError("cyclic pattern requires --blocks id[,id...]");
    std::vector<std::uint64_t> ids;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        std::uint64_t id = 0;
        try {
            id = std::stoull(token, &used, 0);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != token.size())
            throw ConfigError("bad block id '" + token + "' in --blocks");
        ids.push_back(id);
    }
    if (ids.empty()) throw ConfigError("cyclic pattern requires --blocks id[,id...]");
    return ids;
}

// Shared geometry/seed flags for run and compare.
struct ConfigFlags {
    SimConfig cfg;
    std::uint64_t warmup = 0;

    void attach(CLI::App* app) {
        app->add_option("--sets", cfg.num_sets, "Number of cache sets (power of two)")
            ->capture_default_str();
        app->add_option("--tag-ways", cfg.tag_ways, "Tag directory ways per set")
            ->capture_default_str();
        app->add_option("--data-ways", cfg.data_ways,
                        "Data frames per set of capacity; also the baseline associativity")
            ->capture_default_str();
        app->add_option("--block", cfg.block_size_bytes, "Block size in bytes (power of two)")
            ->capture_default_str();
        app->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        app->add_option("--warmup", warmup, "Accesses that run but are not counted")
            ->capture_default_str();
        app->add_option_function<std::string>(
               "--case4",
               [this](const std::string& name) { cfg.case4_mode = case4_mode_from_string(name); },
               "Fill-case-4 handling: reuse|literal")
            ->default_str("reuse");
    }
};

struct RunArgs {
    std::string trace_path;
    std::string format = "text";
    std::string policy = "rac";
    std::string emit = "json";
    std::string out = "-";
    bool oracle = false;
    ConfigFlags flags;
};

struct GenArgs {
    std::string pattern;
    std::string fmt = "text";
    std::string out = "-";
    std::uint64_t n_blocks = 1024;
    double s = 1.0;
    std::uint64_t length = 10000;
    std::string blocks;
    std::uint64_t passes = 1;
    std::uint32_t sets = 2048;
    std::uint32_t set_index = 0;
    std::uint32_t distinct = 1;
    std::uint32_t block_size = 64;
    std::uint64_t seed = 0;
};

struct CompareArgs {
    std::string trace_path;
    std::string format = "text";
    std::string policies = "rac,lru";
    std::string emit = "human";
    std::string out = "-";
    ConfigFlags flags;
};

int do_run(const RunArgs& args) {
    Policy policy = policy_from_string(args.policy);
    args.flags.cfg.validate();
    TraceStream trace = load_trace(args.trace_path, args.format);
    StatsReport report = run_trace(policy, args.flags.cfg, trace.accesses, args.flags.warmup,
                                   args.trace_path, args.oracle);
    std::string payload;
    if (args.emit == "json") {
        payload = to_json(report) + "\n";
    } else if (args.emit == "csv") {
        payload = to_csv(std::vector<StatsReport>{report});
    } else if (args.emit == "human") {
        payload = human_report(report);
    } else {
        throw ConfigError("unknown emit format '" + args.emit + "' (expected human|json|csv)");
    }
    write_output(args.out, payload);
    return 0;
}

int do_gen(const GenArgs& args) {
    TraceStream stream;
    if (args.pattern == "uniform") {
        stream = gen_uniform(args.n_blocks, args.length, args.seed, args.block_size);
    } else if (args.pattern == "zipf") {
        stream = gen_zipf(args.n_blocks, args.s, args.length, args.seed, args.block_size);
    } else if (args.pattern == "cyclic") {
        stream = gen_cyclic(parse_block_list(args.blocks), args.passes, args.block_size);
    } else if (args.pattern == "single-set") {
        SimConfig cfg;
        cfg.num_sets = args.sets;
        cfg.block_size_bytes = args.block_size;
        stream = gen_single_set(cfg, args.set_index, args.distinct, args.passes);
    } else {
        throw ConfigError("unknown pattern '" + args.pattern +
                          "' (expected uniform|zipf|cyclic|single-set)");
    }

    std::ostringstream buf;
    if (args.fmt == "text") {
        write_text_trace(buf, stream.accesses);
    } else if (args.fmt == "bin" || args.fmt == "binary") {
        encode_canonical_binary(buf, stream.accesses);
    } else {
        throw ConfigError("unknown output format '" + args.fmt + "' (expected text|bin)");
    }
    write_output(args.out, buf.str());
    return 0;
}

int do_compare(const CompareArgs& args) {
    std::vector<Policy> policies;
    std::stringstream names(args.policies);
    std::string name;
    while (std::getline(names, name, ',')) {
        if (!name.empty()) policies.push_back(policy_from_string(name));
    }
    if (policies.size() < 2)
        throw ConfigError("compare needs at least two policies, got '" + args.policies + "'");
    args.flags.cfg.validate();

    TraceStream trace = load_trace(args.trace_path, args.format);
    std::vector<StatsReport> reports;
    reports.reserve(policies.size());
    for (Policy p : policies) {
        reports.push_back(
            run_trace(p, args.flags.cfg, trace.accesses, args.flags.warmup, args.trace_path));
    }

    std::string payload;
    if (args.emit == "human") {
        payload = compare_table(reports);
    } else if (args.emit == "csv") {
        payload = to_csv(reports);
    } else if (args.emit == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const StatsReport& r : reports) arr.push_back(nlohmann::ordered_json::parse(to_json(r)));
        payload = arr.dump(2) + "\n";
    } else {
        throw ConfigError("unknown emit format '" + args.emit + "' (expected human|json|csv)");
    }
    write_output(args.out, payload);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"racsim: trace-driven cache simulator with a randomly backed tag directory"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Simulate one policy over a trace");
    run->add_option("--trace", run_args.trace_path, "Trace file path, or - for stdin")->required();
    run->add_option("--format", run_args.format, "Trace format: text|bin|champsim")
        ->capture_default_str();
    run->add_option("--policy", run_args.policy, "Policy: rac|lru|random|vway")
        ->capture_default_str();
    run->add_option("--emit", run_args.emit, "Output format: human|json|csv")
        ->capture_default_str();
    run->add_option("--out", run_args.out, "Output path, or - for stdout")->capture_default_str();
    run->add_flag("--oracle", run_args.oracle, "Run on the linear-scan reference model")
        ->group("");  // maintenance hatch, hidden from help
    run_args.flags.attach(run);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Emit a synthetic trace");
    gen->add_option("--pattern", gen_args.pattern, "uniform|zipf|cyclic|single-set")->required();
    gen->add_option("--fmt", gen_args.fmt, "Output trace format: text|bin")->capture_default_str();
    gen->add_option("--out", gen_args.out, "Output path, or - for stdout")->capture_default_str();
    gen->add_option("--n-blocks", gen_args.n_blocks, "Distinct blocks (uniform/zipf)")
        ->capture_default_str();
    gen->add_option("--s", gen_args.s, "Zipf exponent")->capture_default_str();
    gen->add_option("--length", gen_args.length, "Accesses to generate (uniform/zipf)")
        ->capture_default_str();
    gen->add_option("--blocks", gen_args.blocks, "Comma-separated block ids (cyclic)");
    gen->add_option("--passes", gen_args.passes, "Passes over the block list (cyclic/single-set)")
        ->capture_default_str();
    gen->add_option("--sets", gen_args.sets, "Geometry for single-set mapping")
        ->capture_default_str();
    gen->add_option("--set", gen_args.set_index, "Target set index (single-set)")
        ->capture_default_str();
    gen->add_option("--distinct", gen_args.distinct, "Distinct blocks in the set (single-set)")
        ->capture_default_str();
    gen->add_option("--block", gen_args.block_size, "Block size in bytes")->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "RNG seed (uniform/zipf)")->capture_default_str();

    CompareArgs cmp_args;
    CLI::App* cmp = app.add_subcommand("compare", "Run several policies over one trace");
    cmp->add_option("--trace", cmp_args.trace_path, "Trace file path, or - for stdin")->required();
    cmp->add_option("--format", cmp_args.format, "Trace format: text|bin|champsim")
        ->capture_default_str();
    cmp->add_option("--policies", cmp_args.policies, "Comma-separated list, at least two")
        ->capture_default_str();
    cmp->add_option("--emit", cmp_args.emit, "Output format: human|json|csv")
        ->capture_default_str();
    cmp->add_option("--out", cmp_args.out, "Output path, or - for stdout")->capture_default_str();
    cmp_args.flags.attach(cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ConfigError& e) {
        // Bad enum values raised from option callbacks are usage errors too.
        std::cerr << "racsim: " << e.what() << '\n';
        return 1;
    }

    try {
        if (run->parsed()) return do_run(run_args);
        if (gen->parsed()) return do_gen(gen_args);
        if (cmp->parsed()) return do_compare(cmp_args);
        std::cerr << "racsim: no subcommand\n";
        return 1;
    } catch (const TraceError& e) {
        std::cerr << "racsim: malformed trace: " << e.what() << '\n';
        return 3;
    } catch (const IoError& e) {
        std::cerr << "racsim: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "racsim: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "racsim: " << e.what() << '\n';
        return 1;
    }
}
