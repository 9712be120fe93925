#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "racsim/config.hpp"
#include "racsim/engine.hpp"
#include "racsim/generators.hpp"
#include "racsim/oracle.hpp"
#include "racsim/rng.hpp"
#include "racsim/runner.hpp"
#include "racsim/stats.hpp"
#include "racsim/trace.hpp"

namespace py = pybind11;
using namespace racsim;

namespace {

TraceStream read_trace_file(const std::string& path, const std::string& format_name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open trace file '" + path + "'");
    return read_trace(in, trace_format_from_string(format_name));
}

StatsReport simulate(const std::string& policy_name, const SimConfig& cfg,
                     const std::vector<Access>& trace, std::uint64_t warmup,
                     const std::string& trace_desc, bool use_oracle) {
    return run_trace(policy_from_string(policy_name), cfg, trace, warmup, trace_desc, use_oracle);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trace-driven cache simulation: decoupled tag directory over a "
              "randomly managed global data store, plus conventional baselines";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<TraceError>(m, "TraceError", PyExc_ValueError);

    py::enum_<AccessKind>(m, "AccessKind")
        .value("load", AccessKind::load)
        .value("store", AccessKind::store);

    py::class_<Access>(m, "Access")
        .def(py::init([](AccessKind kind, std::uint64_t address) {
                 return Access{kind, address};
             }),
             py::arg("kind"), py::arg("address"))
        .def_readwrite("kind", &Access::kind)
        .def_readwrite("address", &Access::address)
        .def("__eq__", [](const Access& a, const Access& b) { return a == b; })
        .def("__repr__", [](const Access& a) {
            std::ostringstream out;
            out << "Access(" << (a.kind == AccessKind::load ? "load" : "store") << ", 0x"
                << std::hex << a.address << ")";
            return out.str();
        });

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("num_sets", &SimConfig::num_sets)
        .def_readwrite("tag_ways", &SimConfig::tag_ways)
        .def_readwrite("data_ways", &SimConfig::data_ways)
        .def_readwrite("block_size_bytes", &SimConfig::block_size_bytes)
        .def_readwrite("seed", &SimConfig::seed)
        .def_property(
            "case4_mode", [](const SimConfig& c) { return std::string(to_string(c.case4_mode)); },
            [](SimConfig& c, const std::string& name) {
                c.case4_mode = case4_mode_from_string(name);
            })
        .def("total_frames", &SimConfig::total_frames)
        .def("tdr", &SimConfig::tdr)
        .def("validate", &SimConfig::validate);

    py::class_<StatsReport>(m, "StatsReport")
        .def_readonly("policy", &StatsReport::policy)
        .def_readonly("trace", &StatsReport::trace)
        .def_readonly("warmup", &StatsReport::warmup)
        .def_readonly("accesses", &StatsReport::accesses)
        .def_readonly("hits", &StatsReport::hits)
        .def_readonly("misses", &StatsReport::misses)
        .def_readonly("loads", &StatsReport::loads)
        .def_readonly("stores", &StatsReport::stores)
        .def_readonly("writebacks", &StatsReport::writebacks)
        .def_readonly("hit_rate", &StatsReport::hit_rate)
        .def_property_readonly("fills_by_case",
                               [](const StatsReport& r) {
                                   py::dict d;
                                   d["c1"] = r.fills_by_case[0];
                                   d["c2"] = r.fills_by_case[1];
                                   d["c3"] = r.fills_by_case[2];
                                   d["c4"] = r.fills_by_case[3];
                                   return d;
                               })
        .def("to_json", [](const StatsReport& r) { return to_json(r); })
        .def("__repr__", [](const StatsReport& r) {
            std::ostringstream out;
            out << "StatsReport(policy=" << r.policy << ", accesses=" << r.accesses
                << ", hit_rate=" << r.hit_rate << ")";
            return out.str();
        });

    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &SplitMix64::next)
        .def_property_readonly("state", &SplitMix64::state);

    m.def("simulate", &simulate, py::arg("policy"), py::arg("config"), py::arg("trace"),
          py::arg("warmup") = 0, py::arg("trace_desc") = "<memory>",
          py::arg("use_oracle") = false,
          "Run one policy over a list of accesses and return its stats report");

    m.def(
        "read_trace",
        [](const std::string& path, const std::string& format) {
            return read_trace_file(path, format).accesses;
        },
        py::arg("path"), py::arg("format") = "text",
        "Load a trace file (text|bin|champsim) into a list of accesses");

    m.def(
        "gen_uniform",
        [](std::uint64_t n_blocks, std::size_t length, std::uint64_t seed,
           std::uint32_t block_size) {
            return gen_uniform(n_blocks, length, seed, block_size).accesses;
        },
        py::arg("n_blocks"), py::arg("length"), py::arg("seed") = 0, py::arg("block_size") = 64);
    m.def(
        "gen_zipf",
        [](std::uint64_t n_blocks, double s, std::size_t length, std::uint64_t seed,
           std::uint32_t block_size) {
            return gen_zipf(n_blocks, s, length, seed, block_size).accesses;
        },
        py::arg("n_blocks"), py::arg("s"), py::arg("length"), py::arg("seed") = 0,
        py::arg("block_size") = 64);
    m.def(
        "gen_cyclic",
        [](const std::vector<std::uint64_t>& blocks, std::size_t passes,
           std::uint32_t block_size) { return gen_cyclic(blocks, passes, block_size).accesses; },
        py::arg("blocks"), py::arg("passes") = 1, py::arg("block_size") = 64);
    m.def(
        "gen_single_set",
        [](const SimConfig& cfg, std::uint32_t set_index, std::uint32_t distinct,
           std::size_t passes) { return gen_single_set(cfg, set_index, distinct, passes).accesses; },
        py::arg("config"), py::arg("set_index"), py::arg("distinct"), py::arg("passes") = 1);
}
