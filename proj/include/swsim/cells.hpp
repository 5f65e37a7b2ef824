#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "swsim/netlist.hpp"

namespace swsim {

// Port handles every sequential cell exposes.
struct CellPorts {
  NetId data_in = kNoNet;
  NetId clock = kNoNet;
  NetId out = kNoNet;
  NetId supply = 0;
  NetId ground = 1;
};

// A ready-to-simulate flat circuit plus the bookkeeping the characterization
// flow needs.
struct Cell {
  std::string name;
  Netlist netlist;
  CellPorts ports;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> clock_nets;        // clock tree nets, for power splits
  std::vector<std::string> clocked_devices;   // gates tied to a clock net
  std::string clock_input;                    // empty for combinational cells
  std::string data_input;
};

// Device count of the dual-edge flip-flop builder, kept as a regression
// constant next to the topology it describes.
inline constexpr int kDetffTransistorCount = 18;

// Fragment helpers for assembling cells; device names get `prefix` + p/n.
void add_inverter(Netlist& nl, std::string_view prefix, NetId in, NetId out,
                  double width_nm = 600.0, bool weak = false);
void add_transmission_gate(Netlist& nl, std::string_view prefix, NetId a,
                           NetId b, NetId ctrl, NetId ctrl_bar,
                           double width_nm = 600.0);
// Two pass devices sharing one select: the PMOS passes in0 when sel_bar is
// low, the NMOS passes in1 when sel_bar is high.
void add_mux2(Netlist& nl, std::string_view prefix, NetId in0, NetId in1,
              NetId sel_bar, NetId out, double width_nm = 600.0);

Cell build_inverter();
Cell build_tg_latch();  // level latch, transparent while clk is high
Cell build_mux2();
// Dual-edge flip-flop: two level latches of opposite phase feeding the
// two-device output multiplexer steered by the inverted clock.
Cell build_detff();

const std::vector<std::string>& cell_names();
Cell build_cell(std::string_view name);  // throws BadArgument when unknown

}  // namespace swsim
