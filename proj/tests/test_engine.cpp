#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "swsim/cells.hpp"
#include "swsim/engine.hpp"
#include "swsim/error.hpp"
#include "swsim/metrics.hpp"
#include "swsim/testbench.hpp"

using namespace swsim;

namespace {

const char* kInverter = R"(
.input a
.output y
mp1 y a vdd vdd PMOS W=600n L=180n
mn1 y a gnd gnd NMOS W=600n L=180n
)";

// Baseline net states: rails driven, everything else floating unknown.
std::vector<SignalState> initial_states(const Netlist& nl) {
  std::vector<SignalState> s(nl.net_count(), {LogicValue::X, Strength::Stored});
  s[nl.vdd()] = {LogicValue::One, Strength::Strong};
  s[nl.gnd()] = {LogicValue::Zero, Strength::Strong};
  return s;
}

const Component& component_of(const ComponentGraph& graph, NetId net) {
  REQUIRE(graph.member_component.at(net) >= 0);
  return graph.components.at(static_cast<std::size_t>(graph.member_component.at(net)));
}

MemberState solved_state(const Netlist& nl, const ComponentGraph& graph,
                         const std::vector<SignalState>& states, NetId net,
                         const SimConfig& cfg = {}) {
  const Component& comp = component_of(graph, net);
  SolveResult r = solve_component(nl, comp, states, cfg);
  auto it = std::find(comp.members.begin(), comp.members.end(), net);
  REQUIRE(it != comp.members.end());
  return r.members.at(static_cast<std::size_t>(it - comp.members.begin()));
}

}  // namespace

TEST_CASE("device resistance scales with geometry") {
  SimConfig cfg;
  Transistor n;
  n.kind = DeviceKind::Nmos;
  n.width_nm = 600;
  n.length_nm = 180;
  CHECK(device_resistance_ohm(n, cfg) == doctest::Approx(3000.0));
  n.width_nm = 1200;
  CHECK(device_resistance_ohm(n, cfg) == doctest::Approx(1500.0));
  Transistor p = n;
  p.kind = DeviceKind::Pmos;
  p.width_nm = 600;
  CHECK(device_resistance_ohm(p, cfg) == doctest::Approx(6000.0));
}

TEST_CASE("gate level decides conduction") {
  CHECK(conduction_state(DeviceKind::Nmos, LogicValue::Zero) == Conduction::Off);
  CHECK(conduction_state(DeviceKind::Nmos, LogicValue::One) == Conduction::On);
  CHECK(conduction_state(DeviceKind::Nmos, LogicValue::X) == Conduction::Unknown);
  CHECK(conduction_state(DeviceKind::Pmos, LogicValue::Zero) == Conduction::On);
  CHECK(conduction_state(DeviceKind::Pmos, LogicValue::One) == Conduction::Off);
  CHECK(conduction_state(DeviceKind::Pmos, LogicValue::X) == Conduction::Unknown);
}

TEST_CASE("partitioning the flip-flop yields the expected islands") {
  Cell cell = build_detff();
  ComponentGraph graph = partition_components(cell.netlist);
  REQUIRE(graph.components.size() == 5);

  std::set<std::set<std::string>> groups;
  for (const Component& c : graph.components) {
    std::set<std::string> names;
    for (NetId m : c.members) names.insert(cell.netlist.net_name(m));
    groups.insert(names);
  }
  std::set<std::set<std::string>> expected{
      {"clkb"}, {"nl_in"}, {"pl_in"}, {"nl_out", "pl_out", "mo"}, {"q"}};
  CHECK(groups == expected);

  // membership map agrees with the component list; boundaries are not members
  for (std::size_t i = 0; i < graph.components.size(); ++i) {
    for (NetId m : graph.components[i].members) {
      CHECK(graph.member_component[m] == static_cast<int>(i));
    }
    for (NetId b : graph.components[i].boundaries) {
      CHECK(graph.member_component[b] == -1);
    }
  }
  CHECK(graph.member_component[cell.netlist.vdd()] == -1);
  CHECK(graph.member_component[*cell.netlist.find_net("d")] == -1);

  // every device hangs off a member net through its channel
  for (const Component& c : graph.components) {
    for (std::size_t di : c.devices) {
      const Transistor& t = cell.netlist.transistors()[di];
      bool touches = false;
      for (NetId m : c.members) touches |= (t.drain == m || t.source == m);
      CHECK(touches);
    }
  }

  // the inverted clock gates the pass networks of three other islands
  NetId clkb = *cell.netlist.find_net("clkb");
  std::set<int> fanout(graph.gate_fanout[clkb].begin(), graph.gate_fanout[clkb].end());
  CHECK(fanout.count(graph.member_component[*cell.netlist.find_net("nl_in")]) == 1);
  CHECK(fanout.count(graph.member_component[*cell.netlist.find_net("pl_in")]) == 1);
  CHECK(fanout.count(graph.member_component[*cell.netlist.find_net("mo")]) == 1);
}

TEST_CASE("partitioning needs a flat netlist") {
  Netlist nl = parse_netlist(R"(
.subckt pair a b
m1 b a gnd gnd NMOS W=600n L=180n
.ends
.input i
.output o
x1 i o pair
)");
  CHECK_THROWS_AS(partition_components(nl), Error);
}

TEST_CASE("solving an inverter") {
  Netlist nl = parse_netlist(kInverter);
  ComponentGraph graph = partition_components(nl);
  auto states = initial_states(nl);
  NetId a = *nl.find_net("a"), y = *nl.find_net("y");

  states[a] = {LogicValue::Zero, Strength::Strong};
  MemberState up = solved_state(nl, graph, states, y);
  CHECK(up.state == SignalState{LogicValue::One, Strength::Strong});
  CHECK(up.path_r_ohm == doctest::Approx(6000.0));

  states[a] = {LogicValue::One, Strength::Strong};
  MemberState down = solved_state(nl, graph, states, y);
  CHECK(down.state == SignalState{LogicValue::Zero, Strength::Strong});
  CHECK(down.path_r_ohm == doctest::Approx(3000.0));

  states[a] = {LogicValue::X, Strength::Strong};
  CHECK(solved_state(nl, graph, states, y).state.value == LogicValue::X);
}

TEST_CASE("transmission gate conducts through its cheapest channel") {
  Netlist nl = parse_netlist(R"(
.input d g gb
.output s
mtn s g d d NMOS W=600n L=180n
mtp s gb d d PMOS W=600n L=180n
)");
  ComponentGraph graph = partition_components(nl);
  auto states = initial_states(nl);
  NetId d = *nl.find_net("d"), g = *nl.find_net("g"), gb = *nl.find_net("gb");
  NetId s = *nl.find_net("s");

  states[d] = {LogicValue::One, Strength::Strong};
  states[g] = {LogicValue::One, Strength::Strong};
  states[gb] = {LogicValue::Zero, Strength::Strong};
  MemberState on = solved_state(nl, graph, states, s);
  CHECK(on.state == SignalState{LogicValue::One, Strength::Strong});
  // cheapest single conducting path wins; parallel channels are not merged
  CHECK(on.path_r_ohm == doctest::Approx(3000.0));

  // gate off: the node keeps its last value as stored charge
  states[s] = {LogicValue::One, Strength::Strong};
  states[g] = {LogicValue::Zero, Strength::Strong};
  states[gb] = {LogicValue::One, Strength::Strong};
  MemberState held = solved_state(nl, graph, states, s);
  CHECK(held.state == SignalState{LogicValue::One, Strength::Stored});
  CHECK(held.path_r_ohm == doctest::Approx(0.0));
}

TEST_CASE("weak devices drive with keeper strength") {
  Netlist nl = parse_netlist(R"(
.input a
.output y
mp1 y a vdd vdd PMOS W=600n L=180n WEAK
mn1 y a gnd gnd NMOS W=600n L=180n WEAK
)");
  ComponentGraph graph = partition_components(nl);
  auto states = initial_states(nl);
  NetId a = *nl.find_net("a"), y = *nl.find_net("y");
  states[a] = {LogicValue::Zero, Strength::Strong};
  CHECK(solved_state(nl, graph, states, y).state ==
        SignalState{LogicValue::One, Strength::Weak});
}

TEST_CASE("unknown gates are enumerated, not smeared") {
  // complementary pair from the same rail: either gate level conducts, so the
  // output is known even though the select is not
  Netlist nl = parse_netlist(R"(
.input g
.output z
mp1 z g vdd vdd PMOS W=600n L=180n
mn1 z g vdd vdd NMOS W=600n L=180n
)");
  ComponentGraph graph = partition_components(nl);
  auto states = initial_states(nl);
  states[*nl.find_net("g")] = {LogicValue::X, Strength::Strong};
  MemberState z = solved_state(nl, graph, states, *nl.find_net("z"));
  CHECK(z.state.value == LogicValue::One);
  CHECK(z.state.strength == Strength::Strong);
}

TEST_CASE("enumeration gives up past twelve unknown selects") {
  auto make = [](int pairs) {
    std::string text = ".input";
    for (int i = 1; i <= pairs; ++i) text += " g" + std::to_string(i);
    text += "\n.output z\n";
    for (int i = 1; i <= pairs; ++i) {
      std::string gi = "g" + std::to_string(i);
      text += "mp" + std::to_string(i) + " z " + gi + " vdd vdd PMOS W=600n L=180n\n";
      text += "mn" + std::to_string(i) + " z " + gi + " vdd vdd NMOS W=600n L=180n\n";
    }
    return parse_netlist(text);
  };

  Netlist ok = make(12);
  ComponentGraph g_ok = partition_components(ok);
  auto states = initial_states(ok);
  for (int i = 1; i <= 12; ++i) {
    states[*ok.find_net("g" + std::to_string(i))] = {LogicValue::X, Strength::Strong};
  }
  CHECK(solved_state(ok, g_ok, states, *ok.find_net("z")).state.value ==
        LogicValue::One);

  Netlist big = make(13);
  ComponentGraph g_big = partition_components(big);
  auto big_states = initial_states(big);
  for (int i = 1; i <= 13; ++i) {
    big_states[*big.find_net("g" + std::to_string(i))] = {LogicValue::X,
                                                          Strength::Strong};
  }
  CHECK(solved_state(big, g_big, big_states, *big.find_net("z")).state.value ==
        LogicValue::X);
}

TEST_CASE("solve is a fixed point of itself") {
  Cell cell = build_detff();
  const Netlist& nl = cell.netlist;
  ComponentGraph graph = partition_components(nl);
  auto states = initial_states(nl);
  states[*nl.find_net("d")] = {LogicValue::One, Strength::Strong};
  states[*nl.find_net("clk")] = {LogicValue::Zero, Strength::Strong};

  SimConfig cfg;
  for (int pass = 0; pass < 4; ++pass) {
    for (const Component& comp : graph.components) {
      SolveResult r = solve_component(nl, comp, states, cfg);
      for (std::size_t i = 0; i < comp.members.size(); ++i) {
        states[comp.members[i]] = r.members[i].state;
      }
    }
  }
  // settled: re-solving any island reproduces the current states
  for (const Component& comp : graph.components) {
    SolveResult r = solve_component(nl, comp, states, cfg);
    for (std::size_t i = 0; i < comp.members.size(); ++i) {
      CHECK(r.members[i].state == states[comp.members[i]]);
    }
  }
}

TEST_CASE("event run of an inverter with rc delays") {
  Netlist nl = parse_netlist(kInverter);
  Stimulus stim = parse_stimulus("at 0ps a = 0\nat 1ns a = 1\n");
  SimConfig cfg;
  cfg.duration_ps = 3000;

  Trace trace = run(nl, stim, cfg);
  NetId y = *nl.find_net("y");
  // y carries two attachments -> 2fF; rise through 6k = 12ps, fall through 3k = 6ps
  CHECK(trace.value_at(y, 11) == LogicValue::X);
  CHECK(trace.value_at(y, 12) == LogicValue::One);
  CHECK(trace.value_at(y, 1005) == LogicValue::One);
  CHECK(trace.value_at(y, 1006) == LogicValue::Zero);
  CHECK(trace.total_toggles(y) == 1);  // the x->1 settle does not count
}

TEST_CASE("coarse resolution quantizes delays but keeps them nonzero") {
  Netlist nl = parse_netlist(kInverter);
  Stimulus stim = parse_stimulus("at 0ps a = 0\nat 1ns a = 1\n");
  SimConfig cfg;
  cfg.duration_ps = 3000;
  cfg.resolution_ps = 10;

  Trace trace = run(nl, stim, cfg);
  NetId y = *nl.find_net("y");
  CHECK(trace.value_at(y, 9) == LogicValue::X);
  CHECK(trace.value_at(y, 10) == LogicValue::One);   // 12ps rounds to one tick
  CHECK(trace.value_at(y, 1009) == LogicValue::One);
  CHECK(trace.value_at(y, 1010) == LogicValue::Zero);
}

TEST_CASE("pulses shorter than the output delay are swallowed") {
  Netlist nl = parse_netlist(kInverter);
  Stimulus stim = parse_stimulus(
      "at 0ps a = 0\n"
      "at 2ns a = 1\n"
      "at 2.001ns a = 0\n");
  SimConfig cfg;
  cfg.duration_ps = 4000;

  Trace trace = run(nl, stim, cfg);
  NetId y = *nl.find_net("y");
  CHECK(trace.total_toggles(y) == 0);
  for (std::int64_t t = 2000; t <= 3000; t += 100) {
    CHECK(trace.value_at(y, t) == LogicValue::One);
  }
}

TEST_CASE("inputs changing together are applied before any solve") {
  // closing edge and fresh data in the same instant: the latch must keep the
  // old value, not race against the closing gate
  Cell cell = build_tg_latch();
  Stimulus stim = parse_stimulus(
      "at 0ps d = 0\n"
      "at 0ps clk = 1\n"
      "at 5ns clk = 0\n"
      "at 5ns d = 1\n");
  SimConfig cfg;
  cfg.duration_ps = 10000;

  Trace trace = run(cell.netlist, stim, cfg);
  NetId q = *cell.netlist.find_net("q");
  NetId s = *cell.netlist.find_net("s");
  CHECK(trace.value_at(q, 4999) == LogicValue::One);  // latched inverse of d=0
  CHECK(trace.value_at(q, 9999) == LogicValue::One);  // unchanged by late d
  CHECK(trace.value_at(s, 9999) == LogicValue::Zero);
}

TEST_CASE("missing input coverage fails the run") {
  Netlist nl = parse_netlist(kInverter);
  SimConfig cfg;
  cfg.duration_ps = 1000;
  try {
    run(nl, Stimulus{}, cfg);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UncoveredInput);
  }
}

TEST_CASE("stimulus must name real input nets") {
  Netlist nl = parse_netlist(kInverter);
  SimConfig cfg;
  cfg.duration_ps = 1000;

  Stimulus internal = parse_stimulus("at 0ps a = 0\nat 0ps y = 1\n");
  try {
    run(nl, internal, cfg);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidStimulus);
  }

  Stimulus unknown = parse_stimulus("at 0ps a = 0\nat 0ps nope = 1\n");
  CHECK_THROWS_AS(run(nl, unknown, cfg), Error);
}

TEST_CASE("a kicked ring oscillator trips the oscillation guard") {
  // y1 = nor(r, y3); releasing r leaves a three-stage loop with definite
  // values and no stable point
  Netlist nl = parse_netlist(R"(
.input r
mnr1 y1 r gnd gnd NMOS W=600n L=180n
mnr2 y1 y3 gnd gnd NMOS W=600n L=180n
mpra mid r vdd vdd PMOS W=600n L=180n
mprb y1 y3 mid mid PMOS W=600n L=180n
m2p y2 y1 vdd vdd PMOS W=600n L=180n
m2n y2 y1 gnd gnd NMOS W=600n L=180n
m3p y3 y2 vdd vdd PMOS W=600n L=180n
m3n y3 y2 gnd gnd NMOS W=600n L=180n
)");
  Stimulus stim = parse_stimulus("at 0ps r = 1\nat 100ps r = 0\n");
  SimConfig cfg;
  cfg.duration_ps = 1000000;
  try {
    run(nl, stim, cfg);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OscillationDetected);
  }
}

TEST_CASE("flip-flop output times under the reference workload") {
  Cell cell = build_detff();
  TestbenchSpec tb = builtin_testbench("paper-sec3");
  apply_load(tb, cell);
  Stimulus stim = make_stimulus(tb, cell);
  SimConfig cfg = testbench_config(tb);

  Trace trace = run(cell.netlist, stim, cfg);
  const Netlist& nl = cell.netlist;
  NetId q = *nl.find_net("q");

  std::vector<std::int64_t> q_changes;
  LogicValue prev = LogicValue::X;
  bool first = true;
  for (const TraceSample& s : trace.history(q)) {
    if (!first && s.state.value != prev) q_changes.push_back(s.time_ps);
    prev = s.state.value;
    first = false;
  }
  std::vector<std::int64_t> expected{4198,  32135, 40192, 48135,
                                     56192, 68141, 84198, 92141};
  CHECK(q_changes == expected);

  DelayStats delays = measure_clk_to_q(trace, *nl.find_net("clk"), q, tb.settle_ps());
  CHECK(delays.min_ps == 135);
  CHECK(delays.max_ps == 198);

  auto toggles = [&](const char* name) {
    return trace.toggles_in_window(*nl.find_net(name), 0, cfg.duration_ps);
  };
  CHECK(toggles("d") == 7);
  CHECK(toggles("clk") == 29);
  CHECK(toggles("clkb") == 29);
  CHECK(toggles("nl_in") == 7);
  CHECK(toggles("nl_out") == 7);
  CHECK(toggles("pl_in") == 7);
  CHECK(toggles("pl_out") == 7);
  CHECK(toggles("mo") == 7);
  CHECK(toggles("q") == 7);

  int total = 0;
  for (NetId id = 0; id < nl.net_count(); ++id) {
    total += trace.toggles_in_window(id, 0, cfg.duration_ps);
  }
  CHECK(total == 107);
}
