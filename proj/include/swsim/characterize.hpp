#pragma once

#include <cstdint>

#include "swsim/cells.hpp"
#include "swsim/metrics.hpp"
#include "swsim/testbench.hpp"
#include "swsim/trace.hpp"

namespace swsim {

// Full characterization of one cell under one workload: simulate, then
// measure power over the post-settle window, clk-to-Q delay and PDP.
struct CharacterizeResult {
  MetricsRow row;
  double clock_network_power_uw = 0.0;  // clock tree nets only
  std::int64_t window_begin_ps = 0;
  std::int64_t window_end_ps = 0;
  Trace trace;
};

CharacterizeResult characterize_cell(const Cell& cell,
                                     const TestbenchSpec& testbench);

}  // namespace swsim
