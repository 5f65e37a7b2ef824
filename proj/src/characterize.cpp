#include "swsim/characterize.hpp"

#include <optional>
#include <set>

#include "swsim/engine.hpp"
#include "swsim/error.hpp"

namespace swsim {

CharacterizeResult characterize_cell(const Cell& cell,
                                     const TestbenchSpec& testbench) {
  Cell loaded = cell;
  apply_load(testbench, loaded);

  const Stimulus stim = make_stimulus(testbench, loaded);
  const SimConfig cfg = testbench_config(testbench);
  Trace trace = run(loaded.netlist, stim, cfg);

  const std::int64_t begin = testbench.settle_ps();
  const std::int64_t end = cfg.duration_ps;
  const double p_dyn = dynamic_power_w(trace, loaded.netlist, cfg.vdd_v, begin,
                                       end, cfg.cnode_default_ff);

  std::set<NetId> clock_nets;
  for (const std::string& name : loaded.clock_nets) {
    if (auto id = loaded.netlist.find_net(name)) clock_nets.insert(*id);
  }
  double p_clk = 0.0;
  if (!clock_nets.empty()) {
    p_clk = dynamic_power_w(trace, loaded.netlist, cfg.vdd_v, begin, end,
                            cfg.cnode_default_ff, &clock_nets);
  }

  if (loaded.clock_input.empty() || loaded.ports.out == kNoNet) {
    throw Error(ErrorCode::BadArgument,
                "cell '" + cell.name + "' has no clock or output to measure");
  }
  const NetId clk = *loaded.netlist.find_net(loaded.clock_input);
  const DelayStats delays =
      measure_clk_to_q(trace, clk, loaded.ports.out, begin);

  CharacterizeResult result;
  result.row.name = loaded.name;
  result.row.metrics.avg_power_uw = p_dyn * 1e6;
  result.row.metrics.min_clk_to_q_ps = static_cast<double>(delays.min_ps);
  result.row.metrics.pdp_fj =
      pdp_j(p_dyn, static_cast<double>(delays.min_ps) * 1e-12) * 1e15;
  result.row.metrics.transistor_count =
      static_cast<int>(loaded.netlist.transistor_count());
  result.row.metrics.clocked_transistor_count =
      static_cast<int>(loaded.clocked_devices.size());
  result.clock_network_power_uw = p_clk * 1e6;
  result.window_begin_ps = begin;
  result.window_end_ps = end;
  result.trace = std::move(trace);
  return result;
}

}  // namespace swsim
