#include "swsim/cells.hpp"

#include <algorithm>
#include <set>

#include "swsim/error.hpp"

namespace swsim {

namespace {

constexpr double kLengthNm = 180.0;

Transistor device(std::string name, DeviceKind kind, NetId d, NetId g, NetId s,
                  NetId body, double width_nm, bool weak = false) {
  Transistor t;
  t.name = std::move(name);
  t.kind = kind;
  t.drain = d;
  t.gate = g;
  t.source = s;
  t.body = body;
  t.width_nm = width_nm;
  t.length_nm = kLengthNm;
  t.weak = weak;
  return t;
}

void require_distinct(std::initializer_list<NetId> ids, const char* what) {
  std::set<NetId> seen;
  for (NetId id : ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::BadArgument,
                  std::string(what) + " needs distinct nets");
    }
  }
}

void fill_clocked_devices(Cell& cell) {
  std::set<NetId> clock_ids;
  for (const std::string& name : cell.clock_nets) {
    if (auto id = cell.netlist.find_net(name)) clock_ids.insert(*id);
  }
  for (const Transistor& t : cell.netlist.transistors()) {
    if (clock_ids.count(t.gate)) cell.clocked_devices.push_back(t.name);
  }
}

}  // namespace

void add_inverter(Netlist& nl, std::string_view prefix, NetId in, NetId out,
                  double width_nm, bool weak) {
  require_distinct({in, out}, "inverter");
  std::string p(prefix);
  nl.add_transistor(device(p + "p", DeviceKind::Pmos, out, in, nl.vdd(),
                           nl.vdd(), width_nm, weak));
  nl.add_transistor(device(p + "n", DeviceKind::Nmos, out, in, nl.gnd(),
                           nl.gnd(), width_nm, weak));
}

void add_transmission_gate(Netlist& nl, std::string_view prefix, NetId a,
                           NetId b, NetId ctrl, NetId ctrl_bar,
                           double width_nm) {
  require_distinct({a, b}, "transmission gate");
  std::string p(prefix);
  nl.add_transistor(device(p + "n", DeviceKind::Nmos, a, ctrl, b, nl.gnd(),
                           width_nm));
  nl.add_transistor(device(p + "p", DeviceKind::Pmos, a, ctrl_bar, b, nl.vdd(),
                           width_nm));
}

void add_mux2(Netlist& nl, std::string_view prefix, NetId in0, NetId in1,
              NetId sel_bar, NetId out, double width_nm) {
  require_distinct({in0, out}, "mux2");
  require_distinct({in1, out}, "mux2");
  std::string p(prefix);
  nl.add_transistor(device(p + "p", DeviceKind::Pmos, in0, sel_bar, out,
                           nl.vdd(), width_nm));
  nl.add_transistor(device(p + "n", DeviceKind::Nmos, in1, sel_bar, out,
                           nl.gnd(), width_nm));
}

Cell build_inverter() {
  Cell cell;
  cell.name = "inverter";
  Netlist& nl = cell.netlist;
  NetId a = nl.net("a"), y = nl.net("y");
  nl.set_net_kind(a, NetKind::Input);
  nl.set_net_kind(y, NetKind::Output);
  add_inverter(nl, "m", a, y);
  nl.finalize();
  cell.ports = {a, kNoNet, y, nl.vdd(), nl.gnd()};
  cell.inputs = {"a"};
  cell.outputs = {"y"};
  cell.data_input = "a";
  return cell;
}

Cell build_tg_latch() {
  Cell cell;
  cell.name = "tg_latch";
  Netlist& nl = cell.netlist;
  NetId d = nl.net("d"), clk = nl.net("clk"), clkb = nl.net("clkb");
  NetId s = nl.net("s"), q = nl.net("q");
  nl.set_net_kind(d, NetKind::Input);
  nl.set_net_kind(clk, NetKind::Input);
  nl.set_net_kind(q, NetKind::Output);
  add_inverter(nl, "mc", clk, clkb);
  add_transmission_gate(nl, "mt", d, s, clk, clkb);  // open while clk = 1
  add_inverter(nl, "mf", s, q);
  add_inverter(nl, "mk", q, s, 600.0, /*weak=*/true);
  nl.finalize();
  cell.ports = {d, clk, q, nl.vdd(), nl.gnd()};
  cell.inputs = {"d", "clk"};
  cell.outputs = {"q"};
  cell.clock_nets = {"clk", "clkb"};
  cell.clock_input = "clk";
  cell.data_input = "d";
  fill_clocked_devices(cell);
  return cell;
}

Cell build_mux2() {
  Cell cell;
  cell.name = "mux2";
  Netlist& nl = cell.netlist;
  NetId a = nl.net("a"), b = nl.net("b"), selb = nl.net("selb");
  NetId y = nl.net("y");
  nl.set_net_kind(a, NetKind::Input);
  nl.set_net_kind(b, NetKind::Input);
  nl.set_net_kind(selb, NetKind::Input);
  nl.set_net_kind(y, NetKind::Output);
  add_mux2(nl, "m", a, b, selb, y);
  nl.finalize();
  cell.ports = {a, kNoNet, y, nl.vdd(), nl.gnd()};
  cell.inputs = {"a", "b", "selb"};
  cell.outputs = {"y"};
  cell.data_input = "a";
  return cell;
}

Cell build_detff() {
  Cell cell;
  cell.name = "detff_proposed";
  Netlist& nl = cell.netlist;
  const NetId d = nl.net("d"), clk = nl.net("clk"), clkb = nl.net("clkb");
  const NetId nl_in = nl.net("nl_in"), nl_out = nl.net("nl_out");
  const NetId pl_in = nl.net("pl_in"), pl_out = nl.net("pl_out");
  const NetId mo = nl.net("mo"), q = nl.net("q");
  const NetId vdd = nl.vdd(), gnd = nl.gnd();
  nl.set_net_kind(d, NetKind::Input);
  nl.set_net_kind(clk, NetKind::Input);
  nl.set_net_kind(q, NetKind::Output);

  const double w = 600.0;
  // Local clock inversion.
  nl.add_transistor(device("m1", DeviceKind::Pmos, clkb, clk, vdd, vdd, w));
  nl.add_transistor(device("m2", DeviceKind::Nmos, clkb, clk, gnd, gnd, w));
  // Low-phase latch gate: open while clk is low, so the rising clock edge is
  // the moment it stops following d.
  nl.add_transistor(device("m3", DeviceKind::Nmos, d, clkb, nl_in, gnd, w));
  nl.add_transistor(device("m4", DeviceKind::Pmos, d, clk, nl_in, vdd, w));
  // High-phase latch gate, the mirror image.
  nl.add_transistor(device("m5", DeviceKind::Nmos, d, clk, pl_in, gnd, w));
  nl.add_transistor(device("m6", DeviceKind::Pmos, d, clkb, pl_in, vdd, w));
  // Forward inverter and weak keeper of the low-phase latch.
  nl.add_transistor(device("m7", DeviceKind::Pmos, nl_out, nl_in, vdd, vdd, w));
  nl.add_transistor(device("m8", DeviceKind::Nmos, nl_out, nl_in, gnd, gnd, w));
  nl.add_transistor(device("m9", DeviceKind::Pmos, nl_in, nl_out, vdd, vdd, w, true));
  nl.add_transistor(device("m10", DeviceKind::Nmos, nl_in, nl_out, gnd, gnd, w, true));
  // Forward inverter and weak keeper of the high-phase latch.
  nl.add_transistor(device("m11", DeviceKind::Pmos, pl_out, pl_in, vdd, vdd, w));
  nl.add_transistor(device("m12", DeviceKind::Nmos, pl_out, pl_in, gnd, gnd, w));
  nl.add_transistor(device("m13", DeviceKind::Pmos, pl_in, pl_out, vdd, vdd, w, true));
  nl.add_transistor(device("m14", DeviceKind::Nmos, pl_in, pl_out, gnd, gnd, w, true));
  // Output inverter.
  nl.add_transistor(device("m15", DeviceKind::Pmos, q, mo, vdd, vdd, w));
  nl.add_transistor(device("m16", DeviceKind::Nmos, q, mo, gnd, gnd, w));
  // Output multiplexer: each clock phase routes the just-closed latch to q.
  nl.add_transistor(device("m17", DeviceKind::Pmos, nl_out, clkb, mo, vdd, w));
  nl.add_transistor(device("m18", DeviceKind::Nmos, pl_out, clkb, mo, gnd, w));

  nl.finalize();
  cell.ports = {d, clk, q, vdd, gnd};
  cell.inputs = {"d", "clk"};
  cell.outputs = {"q"};
  cell.clock_nets = {"clk", "clkb"};
  cell.clock_input = "clk";
  cell.data_input = "d";
  fill_clocked_devices(cell);
  return cell;
}

const std::vector<std::string>& cell_names() {
  static const std::vector<std::string> names{"detff_proposed", "inverter",
                                              "mux2", "tg_latch"};
  return names;
}

Cell build_cell(std::string_view name) {
  if (name == "detff_proposed") return build_detff();
  if (name == "inverter") return build_inverter();
  if (name == "mux2") return build_mux2();
  if (name == "tg_latch") return build_tg_latch();
  throw Error(ErrorCode::BadArgument,
              "unknown cell '" + std::string(name) + "'");
}

}  // namespace swsim
