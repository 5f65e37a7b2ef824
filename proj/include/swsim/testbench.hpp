#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swsim/cells.hpp"
#include "swsim/config.hpp"
#include "swsim/stimulus.hpp"

namespace swsim {

// A self-contained characterization workload: a data pattern replayed at a
// fixed bit rate against a free-running clock, with a lumped output load.
struct TestbenchSpec {
  std::string name;
  std::string data_pattern;  // one '0'/'1' per bit
  std::int64_t bit_width_ps = 0;
  double clock_freq_hz = 0.0;
  double duty_pct = 50.0;
  std::int64_t phase_ps = 0;
  std::int64_t duration_ps = 0;
  double load_cap_ff = 0.0;
  double vdd_v = 1.8;

  std::int64_t clock_period_ps() const;
  // Measurement windows skip the first two clock periods so start-up
  // transients never pollute averages.
  std::int64_t settle_ps() const;
};

// Named frozen workloads addressable from the command line.
TestbenchSpec builtin_testbench(const std::string& name);
std::vector<std::string> builtin_testbench_names();

// Events driving the cell's data and clock inputs for the whole run.
Stimulus make_stimulus(const TestbenchSpec& spec, const Cell& cell);

// Attach the workload's output load between the cell output and ground.
void apply_load(const TestbenchSpec& spec, Cell& cell);

// Simulator settings the workload implies.
SimConfig testbench_config(const TestbenchSpec& spec);

}  // namespace swsim
