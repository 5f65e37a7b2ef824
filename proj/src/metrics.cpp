#include "swsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "swsim/error.hpp"

namespace swsim {

double dynamic_power_w(const Trace& trace, const Netlist& netlist, double vdd_v,
                       std::int64_t window_begin_ps, std::int64_t window_end_ps,
                       double cnode_default_ff, const std::set<NetId>* only_nets) {
  if (window_end_ps <= window_begin_ps) {
    throw Error(ErrorCode::EmptyWindow, "power window is empty");
  }
  const double window_s = static_cast<double>(window_end_ps - window_begin_ps) * 1e-12;
  double energy_j = 0.0;
  for (NetId id = 0; id < netlist.net_count(); ++id) {
    if (only_nets && !only_nets->count(id)) continue;
    int toggles = trace.toggles_in_window(id, window_begin_ps, window_end_ps);
    if (toggles == 0) continue;
    const double c_f = netlist.net_info(id).lumped_cap_ff(cnode_default_ff) * 1e-15;
    energy_j += toggles * 0.5 * c_f * vdd_v * vdd_v;
  }
  return energy_j / window_s;
}

double activity_power_w(const Netlist& netlist,
                        const std::map<std::string, double>& activity_pt,
                        double f_clk_hz, double vdd_v,
                        double cnode_default_ff) {
  double power = 0.0;
  for (const auto& [name, pt] : activity_pt) {
    auto id = netlist.find_net(name);
    if (!id) {
      throw Error(ErrorCode::BadArgument,
                  "activity names unknown net '" + name + "'");
    }
    const double c_f = netlist.net_info(*id).lumped_cap_ff(cnode_default_ff) * 1e-15;
    power += pt * f_clk_hz * 0.5 * c_f * vdd_v * vdd_v;
  }
  return power;
}

double total_power_w(double p_dyn_w, const PowerParams& params) {
  return p_dyn_w + params.i_sc_a * params.vdd_v + params.i_leakage_a * params.vdd_v;
}

DelayStats measure_clk_to_q(const Trace& trace, NetId clk_net, NetId q_net,
                            std::int64_t settle_exclusion_ps) {
  // Full-swing transition times of both signals.
  auto transitions = [&](NetId net) {
    std::vector<std::int64_t> times;
    LogicValue prev = LogicValue::X;
    bool have_prev = false;
    for (const TraceSample& s : trace.history(net)) {
      if (have_prev && is_full_swing(prev, s.state.value)) {
        times.push_back(s.time_ps);
      }
      if (s.state.value != prev || !have_prev) {
        prev = s.state.value;
        have_prev = true;
      }
    }
    return times;
  };
  const std::vector<std::int64_t> edges = transitions(clk_net);
  const std::vector<std::int64_t> q_times = transitions(q_net);

  DelayStats stats;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::int64_t edge = edges[i];
    if (edge < settle_exclusion_ps) continue;
    const std::int64_t next_edge =
        i + 1 < edges.size() ? edges[i + 1] : INT64_MAX;
    auto it = std::upper_bound(q_times.begin(), q_times.end(), edge);
    if (it == q_times.end() || *it >= next_edge) continue;
    stats.per_edge.push_back({edge, *it - edge});
  }
  if (stats.per_edge.empty()) {
    throw Error(ErrorCode::NoTransitions,
                "output never switches after a clock edge");
  }
  stats.min_ps = stats.max_ps = stats.per_edge.front().delay_ps;
  for (const EdgeDelay& d : stats.per_edge) {
    stats.min_ps = std::min(stats.min_ps, d.delay_ps);
    stats.max_ps = std::max(stats.max_ps, d.delay_ps);
  }
  return stats;
}

double pdp_j(double avg_power_w, double delay_s) { return avg_power_w * delay_s; }

double improvement_pct(double base, double now, bool lower_is_better) {
  if (base == 0.0) {
    throw Error(ErrorCode::ZeroBaseline, "baseline metric is zero");
  }
  return lower_is_better ? (base - now) / base * 100.0
                         : (now - base) / base * 100.0;
}

const std::vector<MetricsRow>& reference_rows() {
  static const std::vector<MetricsRow> rows = [] {
    auto row = [](std::string name, double area, int devices, double delay,
                  double power, double pdp) {
      MetricsRow r;
      r.name = std::move(name);
      r.metrics.layout_area_um2 = area;
      r.metrics.transistor_count = devices;
      r.metrics.min_clk_to_q_ps = delay;
      r.metrics.avg_power_uw = power;
      r.metrics.pdp_fj = pdp;
      return r;
    };
    return std::vector<MetricsRow>{
        row("SCDFF", 682.2, 29, 234.5, 41.97, 9.80),
        row("DEPFF", 578.3, 29, 230.2, 37.05, 8.53),
        row("SEDNIFF", 497.7, 29, 217.7, 34.44, 7.49),
        row("Proposed DETFF", 183.06, 24, 259.6, 21.75, 5.64),
    };
  }();
  return rows;
}

Comparison build_comparison(const std::vector<MetricsRow>& rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::BadArgument, "comparison needs at least one row");
  }
  Comparison cmp;
  cmp.rows = rows;
  const MetricsRow& subject = rows.back();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const MetricsRow& base = rows[i];
    ComparisonEntry e;
    e.baseline = base.name;
    e.power_improvement_pct = improvement_pct(
        base.metrics.avg_power_uw, subject.metrics.avg_power_uw, true);
    e.pdp_improvement_pct =
        improvement_pct(base.metrics.pdp_fj, subject.metrics.pdp_fj, true);
    if (base.metrics.layout_area_um2 && subject.metrics.layout_area_um2) {
      e.area_improvement_pct = improvement_pct(
          *base.metrics.layout_area_um2, *subject.metrics.layout_area_um2, true);
    }
    e.delay_increase_pct = improvement_pct(
        base.metrics.min_clk_to_q_ps, subject.metrics.min_clk_to_q_ps, false);
    cmp.entries.push_back(std::move(e));
  }
  return cmp;
}

namespace {

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  return buf;
}

std::string pad(std::string s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

std::string format_comparison_table(const Comparison& cmp) {
  std::vector<std::vector<std::string>> grid;
  grid.push_back({"design", "area_um2", "transistors", "clocked",
                  "min_clk_to_q_ps", "power_uW", "pdp_fJ"});
  for (const MetricsRow& r : cmp.rows) {
    const CellMetrics& m = r.metrics;
    grid.push_back({
        r.name,
        m.layout_area_um2 ? fixed(*m.layout_area_um2, 2) : "-",
        std::to_string(m.transistor_count),
        m.clocked_transistor_count ? std::to_string(*m.clocked_transistor_count)
                                   : "-",
        fixed(m.min_clk_to_q_ps, 1),
        fixed(m.avg_power_uw, 2),
        fixed(m.pdp_fj, 2),
    });
  }
  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += pad(row[c], widths[c], c != 0);
    }
    out += "\n";
  }

  if (!cmp.entries.empty()) {
    const std::string& subject = cmp.rows.back().name;
    out += "\nimprovements of '" + subject + "':\n";
    for (const ComparisonEntry& e : cmp.entries) {
      out += "  vs " + pad(e.baseline, 16, false);
      out += "power " + fixed(e.power_improvement_pct, 2) + "%";
      out += "  pdp " + fixed(e.pdp_improvement_pct, 2) + "%";
      if (e.area_improvement_pct) {
        out += "  area " + fixed(*e.area_improvement_pct, 2) + "%";
      }
      out += "  delay increase " + fixed(e.delay_increase_pct, 2) + "%";
      out += "\n";
    }
  }

  out += "\nnote: switching power counts half C V^2 per full-swing transition"
         " (swing = supply voltage, hence quadratic in it).\n";
  out += "note: reference rows are published post-layout 180nm results;"
         " rows measured by this tool use its switch-level model and are not"
         " comparable to them in absolute terms.\n";
  return out;
}

std::string comparison_csv(const Comparison& cmp) {
  std::string out =
      "name,area_um2,transistors,clocked,min_clk_to_q_ps,power_uW,pdp_fJ\n";
  for (const MetricsRow& r : cmp.rows) {
    const CellMetrics& m = r.metrics;
    out += r.name + ",";
    out += (m.layout_area_um2 ? fixed(*m.layout_area_um2, 2) : "") + ",";
    out += std::to_string(m.transistor_count) + ",";
    out += (m.clocked_transistor_count
                ? std::to_string(*m.clocked_transistor_count)
                : "") +
           ",";
    out += fixed(m.min_clk_to_q_ps, 1) + ",";
    out += fixed(m.avg_power_uw, 2) + ",";
    out += fixed(m.pdp_fj, 2) + "\n";
  }
  for (const ComparisonEntry& e : cmp.entries) {
    out += "improvement_vs_" + e.baseline + ",";
    out += (e.area_improvement_pct ? fixed(*e.area_improvement_pct, 2) : "");
    out += ",,,";
    out += fixed(-e.delay_increase_pct, 2) + ",";
    out += fixed(e.power_improvement_pct, 2) + ",";
    out += fixed(e.pdp_improvement_pct, 2) + "\n";
  }
  return out;
}

std::vector<MetricsRow> parse_rows_csv(std::string_view text) {
  std::vector<MetricsRow> rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) continue;

    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) {
      std::size_t b = field.find_first_not_of(" \t");
      std::size_t e = field.find_last_not_of(" \t");
      fields.push_back(b == std::string::npos
                           ? ""
                           : field.substr(b, e - b + 1));
    }
    if (!fields.empty() && fields[0] == "name") continue;  // header
    if (fields.size() != 6) {
      throw Error(ErrorCode::BadArgument,
                  "rows file needs 6 comma-separated fields", lineno);
    }
    MetricsRow row;
    row.name = fields[0];
    if (row.name.empty()) {
      throw Error(ErrorCode::BadArgument, "row without a name", lineno);
    }
    try {
      std::size_t used = 0;
      if (!fields[1].empty()) {
        row.metrics.layout_area_um2 = std::stod(fields[1], &used);
        if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
      }
      row.metrics.transistor_count = std::stoi(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument(fields[2]);
      row.metrics.min_clk_to_q_ps = std::stod(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument(fields[3]);
      row.metrics.avg_power_uw = std::stod(fields[4], &used);
      if (used != fields[4].size()) throw std::invalid_argument(fields[4]);
      row.metrics.pdp_fj = std::stod(fields[5], &used);
      if (used != fields[5].size()) throw std::invalid_argument(fields[5]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadArgument, "malformed number in rows file",
                  lineno);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw Error(ErrorCode::BadArgument, "rows file has no rows");
  }
  return rows;
}

}  // namespace swsim
