#include "swsim/testbench.hpp"

#include <cmath>

#include "swsim/error.hpp"

namespace swsim {

std::int64_t TestbenchSpec::clock_period_ps() const {
  if (clock_freq_hz <= 0.0) {
    throw Error(ErrorCode::BadArgument, "workload has no clock frequency");
  }
  return std::llround(1e12 / clock_freq_hz);
}

std::int64_t TestbenchSpec::settle_ps() const { return 2 * clock_period_ps(); }

TestbenchSpec builtin_testbench(const std::string& name) {
  if (name == "paper-sec3") {
    TestbenchSpec tb;
    tb.name = name;
    tb.data_pattern = "1111010110010000";
    tb.bit_width_ps = 7500;
    tb.clock_freq_hz = 125e6;
    tb.duty_pct = 50.0;
    tb.phase_ps = 0;
    tb.duration_ps = 120000;
    tb.load_cap_ff = 21.0;
    tb.vdd_v = 1.8;
    return tb;
  }
  throw Error(ErrorCode::BadArgument, "unknown testbench '" + name + "'");
}

std::vector<std::string> builtin_testbench_names() { return {"paper-sec3"}; }

Stimulus make_stimulus(const TestbenchSpec& spec, const Cell& cell) {
  Stimulus stim;
  if (!cell.data_input.empty() && !spec.data_pattern.empty()) {
    for (std::size_t i = 0; i < spec.data_pattern.size(); ++i) {
      char bit = spec.data_pattern[i];
      if (bit != '0' && bit != '1') {
        throw Error(ErrorCode::BadArgument,
                    "data pattern may only contain 0 and 1");
      }
      StimulusEvent ev;
      ev.time_ps = static_cast<std::int64_t>(i) * spec.bit_width_ps;
      ev.net = cell.data_input;
      ev.value = bit == '1' ? LogicValue::One : LogicValue::Zero;
      stim.events.push_back(ev);
    }
  }
  if (!cell.clock_input.empty() && spec.clock_freq_hz > 0.0) {
    ClockSpec clk;
    clk.net = cell.clock_input;
    clk.period_ps = spec.clock_period_ps();
    clk.duty_pct = spec.duty_pct;
    clk.phase_ps = spec.phase_ps;
    stim.clocks.push_back(clk);
  }
  stim.validate();
  return stim;
}

void apply_load(const TestbenchSpec& spec, Cell& cell) {
  if (spec.load_cap_ff <= 0.0 || cell.ports.out == kNoNet) return;
  Capacitor load;
  load.name = "cload";
  load.net_a = cell.ports.out;
  load.net_b = cell.netlist.gnd();
  load.value_ff = spec.load_cap_ff;
  cell.netlist.add_capacitor(load);
  cell.netlist.finalize();
}

SimConfig testbench_config(const TestbenchSpec& spec) {
  SimConfig cfg;
  cfg.vdd_v = spec.vdd_v;
  cfg.duration_ps = spec.duration_ps;
  return cfg;
}

}  // namespace swsim
