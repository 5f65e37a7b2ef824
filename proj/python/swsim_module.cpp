#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swsim/behavioral.hpp"
#include "swsim/cells.hpp"
#include "swsim/characterize.hpp"
#include "swsim/config.hpp"
#include "swsim/engine.hpp"
#include "swsim/error.hpp"
#include "swsim/metrics.hpp"
#include "swsim/netlist.hpp"
#include "swsim/stimulus.hpp"
#include "swsim/testbench.hpp"
#include "swsim/trace.hpp"
#include "swsim/vcd.hpp"
#include "swsim/verify.hpp"

namespace py = pybind11;
using namespace swsim;

PYBIND11_MODULE(swsim, m) {
  m.doc() = "switch-level transistor netlist simulator";

  py::register_exception<Error>(m, "SwsimError");

  py::enum_<LogicValue>(m, "LogicValue")
      .value("Zero", LogicValue::Zero)
      .value("One", LogicValue::One)
      .value("X", LogicValue::X);

  py::enum_<Strength>(m, "Strength")
      .value("Stored", Strength::Stored)
      .value("Weak", Strength::Weak)
      .value("Strong", Strength::Strong);

  py::class_<SignalState>(m, "SignalState")
      .def_readonly("value", &SignalState::value)
      .def_readonly("strength", &SignalState::strength)
      .def("__repr__", [](const SignalState& s) {
        return std::string("SignalState(") + logic_char(s.value) + ", " +
               strength_name(s.strength) + ")";
      });

  py::class_<Netlist>(m, "Netlist")
      .def_property_readonly("net_count", &Netlist::net_count)
      .def_property_readonly("transistor_count", &Netlist::transistor_count)
      .def("net_name", [](const Netlist& n, NetId id) { return n.net_name(id); })
      .def("find_net",
           [](const Netlist& n, const std::string& name) { return n.find_net(name); })
      .def("is_flat", &Netlist::is_flat);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("vdd_v", &SimConfig::vdd_v)
      .def_readwrite("duration_ps", &SimConfig::duration_ps)
      .def_readwrite("resolution_ps", &SimConfig::resolution_ps);

  py::class_<Stimulus>(m, "Stimulus").def(py::init<>());

  py::class_<TraceSample>(m, "TraceSample")
      .def_readonly("time_ps", &TraceSample::time_ps)
      .def_readonly("state", &TraceSample::state);

  py::class_<Trace>(m, "Trace")
      .def("value_at", &Trace::value_at)
      .def("history", &Trace::history, py::return_value_policy::copy)
      .def("total_toggles", &Trace::total_toggles)
      .def("toggles_in_window", &Trace::toggles_in_window)
      .def_property_readonly("end_time_ps", &Trace::end_time_ps);

  py::class_<CellPorts>(m, "CellPorts")
      .def_readonly("data_in", &CellPorts::data_in)
      .def_readonly("clock", &CellPorts::clock)
      .def_readonly("out", &CellPorts::out);

  py::class_<Cell>(m, "Cell")
      .def_readonly("name", &Cell::name)
      .def_readonly("netlist", &Cell::netlist)
      .def_readonly("ports", &Cell::ports)
      .def_readonly("inputs", &Cell::inputs)
      .def_readonly("outputs", &Cell::outputs)
      .def_readonly("clock_nets", &Cell::clock_nets)
      .def_readonly("clocked_devices", &Cell::clocked_devices);

  py::class_<TestbenchSpec>(m, "TestbenchSpec")
      .def_readwrite("name", &TestbenchSpec::name)
      .def_readwrite("data_pattern", &TestbenchSpec::data_pattern)
      .def_readwrite("clock_freq_hz", &TestbenchSpec::clock_freq_hz)
      .def_readwrite("duration_ps", &TestbenchSpec::duration_ps)
      .def_readwrite("load_cap_ff", &TestbenchSpec::load_cap_ff)
      .def_readwrite("vdd_v", &TestbenchSpec::vdd_v);

  py::class_<CellMetrics>(m, "CellMetrics")
      .def_readonly("avg_power_uw", &CellMetrics::avg_power_uw)
      .def_readonly("min_clk_to_q_ps", &CellMetrics::min_clk_to_q_ps)
      .def_readonly("pdp_fj", &CellMetrics::pdp_fj)
      .def_readonly("transistor_count", &CellMetrics::transistor_count)
      .def_readonly("clocked_transistor_count",
                    &CellMetrics::clocked_transistor_count)
      .def_readonly("layout_area_um2", &CellMetrics::layout_area_um2);

  py::class_<MetricsRow>(m, "MetricsRow")
      .def_readonly("name", &MetricsRow::name)
      .def_readonly("metrics", &MetricsRow::metrics);

  py::class_<ComparisonEntry>(m, "ComparisonEntry")
      .def_readonly("baseline", &ComparisonEntry::baseline)
      .def_readonly("power_improvement_pct",
                    &ComparisonEntry::power_improvement_pct)
      .def_readonly("pdp_improvement_pct", &ComparisonEntry::pdp_improvement_pct)
      .def_readonly("area_improvement_pct",
                    &ComparisonEntry::area_improvement_pct)
      .def_readonly("delay_increase_pct", &ComparisonEntry::delay_increase_pct);

  py::class_<Comparison>(m, "Comparison")
      .def_readonly("rows", &Comparison::rows)
      .def_readonly("entries", &Comparison::entries);

  py::class_<CharacterizeResult>(m, "CharacterizeResult")
      .def_readonly("row", &CharacterizeResult::row)
      .def_readonly("clock_network_power_uw",
                    &CharacterizeResult::clock_network_power_uw);

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("oracle", &VerifyOptions::oracle)
      .def_readwrite("cycles", &VerifyOptions::cycles)
      .def_readwrite("seed", &VerifyOptions::seed)
      .def_readwrite("exhaustive_bits", &VerifyOptions::exhaustive_bits);

  py::class_<VerifyResult>(m, "VerifyResult")
      .def_readonly("passed", &VerifyResult::passed)
      .def_readonly("edges_checked", &VerifyResult::edges_checked);

  m.def("parse_netlist",
        [](const std::string& text) { return parse_netlist(text); },
        "Parse netlist source text");
  m.def("serialize_netlist", &serialize_netlist);
  m.def("flatten", &flatten, "Expand subcircuit instances into a flat netlist");
  m.def("parse_stimulus",
        [](const std::string& text) { return parse_stimulus(text); });
  m.def("cell_names", [] { return cell_names(); });
  m.def("build_cell",
        [](const std::string& name) { return build_cell(name); });
  m.def("builtin_testbench", &builtin_testbench);
  m.def("run", &run, py::arg("netlist"), py::arg("stimulus"), py::arg("config"),
        "Event-driven switch-level simulation");
  m.def("write_vcd", &write_vcd, py::arg("trace"), py::arg("netlist"),
        py::arg("resolution_ps") = 1);
  m.def("characterize_cell", &characterize_cell);
  m.def("verify_cell", &verify_cell);
  m.def("reference_rows", [] { return reference_rows(); });
  m.def("build_comparison", &build_comparison);
  m.def("format_comparison_table", &format_comparison_table);
  m.def("comparison_csv", &comparison_csv);
}
