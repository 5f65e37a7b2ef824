#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swsim/netlist.hpp"
#include "swsim/trace.hpp"

namespace swsim {

struct PowerParams {
  double vdd_v = 1.8;
  double i_sc_a = 0.0;       // short-circuit current constant
  double i_leakage_a = 0.0;  // leakage current constant
  // Per-net expected transitions per clock cycle; when set these replace
  // trace-derived toggle counts (combined with a clock frequency).
  std::map<std::string, double> activity_overrides;
};

// Average switching power over [window_begin, window_end): each full-swing
// transition costs half C V^2, with C the lumped node capacitance. Restrict
// to `only_nets` when given (e.g. the clock tree). Throws EmptyWindow.
double dynamic_power_w(const Trace& trace, const Netlist& netlist, double vdd_v,
                       std::int64_t window_begin_ps, std::int64_t window_end_ps,
                       double cnode_default_ff,
                       const std::set<NetId>* only_nets = nullptr);

// Switching power from externally supplied per-net activity factors.
double activity_power_w(const Netlist& netlist,
                        const std::map<std::string, double>& activity_pt,
                        double f_clk_hz, double vdd_v,
                        double cnode_default_ff);

double total_power_w(double p_dyn_w, const PowerParams& params);

struct EdgeDelay {
  std::int64_t edge_time_ps = 0;
  std::int64_t delay_ps = 0;
};

struct DelayStats {
  std::int64_t min_ps = 0;
  std::int64_t max_ps = 0;
  std::vector<EdgeDelay> per_edge;
};

// Clock-edge-to-output delays: for every full-swing clock transition at or
// after `settle_exclusion_ps`, the first full-swing q transition before the
// next edge counts; edges that leave q alone contribute nothing. Throws
// NoTransitions when no edge produces one.
DelayStats measure_clk_to_q(const Trace& trace, NetId clk_net, NetId q_net,
                            std::int64_t settle_exclusion_ps);

double pdp_j(double avg_power_w, double delay_s);

// Percent change relative to base; positive means better when
// lower_is_better, worse otherwise. Throws ZeroBaseline.
double improvement_pct(double base, double now, bool lower_is_better);

struct CellMetrics {
  double avg_power_uw = 0.0;
  double min_clk_to_q_ps = 0.0;
  double pdp_fj = 0.0;
  int transistor_count = 0;
  std::optional<int> clocked_transistor_count;
  std::optional<double> layout_area_um2;  // pass-through published data only
};

struct MetricsRow {
  std::string name;
  CellMetrics metrics;
};

// The four published 180nm post-layout rows used by `compare --table paper`.
const std::vector<MetricsRow>& reference_rows();

struct ComparisonEntry {
  std::string baseline;
  double power_improvement_pct = 0.0;
  double pdp_improvement_pct = 0.0;
  std::optional<double> area_improvement_pct;
  double delay_increase_pct = 0.0;
};

struct Comparison {
  std::vector<MetricsRow> rows;           // subject row last
  std::vector<ComparisonEntry> entries;   // subject vs every earlier row
};

Comparison build_comparison(const std::vector<MetricsRow>& rows);

std::string format_comparison_table(const Comparison& cmp);
std::string comparison_csv(const Comparison& cmp);

// Rows file: optional "name,..." header, then one row per line:
// name, area_um2 (blank allowed), transistors, min_clk_to_q_ps,
// avg_power_uw, pdp_fj. Throws BadArgument on malformed content.
std::vector<MetricsRow> parse_rows_csv(std::string_view text);

}  // namespace swsim
