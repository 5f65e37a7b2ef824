#include "swsim/vcd.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace swsim {

namespace {

// Short printable identifier: base-94 over '!'..'~', low digit first.
std::string vcd_id(std::size_t n) {
  std::string s;
  do {
    s.push_back(static_cast<char>(33 + n % 94));
    n /= 94;
  } while (n != 0);
  return s;
}

}  // namespace

std::string write_vcd(const Trace& trace, const Netlist& netlist,
                      std::int64_t resolution_ps) {
  std::string out;
  out += "$date\n  2000-01-01 00:00:00\n$end\n";
  out += "$version\n  swsim\n$end\n";
  out += "$timescale " + std::to_string(resolution_ps) + "ps $end\n";
  out += "$scope module top $end\n";
  const std::size_t n = netlist.net_count();
  for (NetId id = 0; id < n; ++id) {
    out += "$var wire 1 " + vcd_id(id) + " " + netlist.net_name(id) + " $end\n";
  }
  out += "$upscope $end\n";
  out += "$enddefinitions $end\n";

  out += "$dumpvars\n";
  for (NetId id = 0; id < n; ++id) {
    out += logic_char(trace.value_at(id, 0));
    out += vcd_id(id);
    out += "\n";
  }
  out += "$end\n";

  struct Change {
    std::int64_t time_ps;
    NetId net;
    LogicValue value;
  };
  std::vector<Change> changes;
  for (NetId id = 0; id < n; ++id) {
    LogicValue prev = trace.value_at(id, 0);
    for (const TraceSample& s : trace.history(id)) {
      if (s.time_ps == 0) continue;
      if (s.state.value == prev) continue;
      changes.push_back({s.time_ps, id, s.state.value});
      prev = s.state.value;
    }
  }
  std::sort(changes.begin(), changes.end(), [](const Change& a, const Change& b) {
    return std::tie(a.time_ps, a.net) < std::tie(b.time_ps, b.net);
  });

  std::int64_t current = 0;
  for (const Change& c : changes) {
    if (c.time_ps != current) {
      out += "#" + std::to_string(c.time_ps / resolution_ps) + "\n";
      current = c.time_ps;
    }
    out += logic_char(c.value);
    out += vcd_id(c.net);
    out += "\n";
  }
  if (trace.end_time_ps() > current) {
    out += "#" + std::to_string(trace.end_time_ps() / resolution_ps) + "\n";
  }
  return out;
}

std::string vcd_net_id(NetId id) { return vcd_id(id); }

std::string vcd_excerpt(const Trace& trace, const Netlist& netlist,
                        const std::vector<NetId>& nets, std::int64_t begin_ps,
                        std::int64_t end_ps) {
  if (begin_ps < 0) begin_ps = 0;
  std::string out;
  for (NetId id : nets) {
    out += "$var wire 1 " + vcd_id(id) + " " + netlist.net_name(id) + " $end\n";
  }
  out += "#" + std::to_string(begin_ps) + "\n";
  for (NetId id : nets) {
    out += logic_char(trace.value_at(id, begin_ps));
    out += vcd_id(id);
    out += "\n";
  }

  struct Change {
    std::int64_t time_ps;
    NetId net;
    LogicValue value;
  };
  std::vector<Change> changes;
  for (NetId id : nets) {
    LogicValue prev = trace.value_at(id, begin_ps);
    for (const TraceSample& s : trace.history(id)) {
      if (s.time_ps <= begin_ps || s.time_ps > end_ps) continue;
      if (s.state.value == prev) continue;
      changes.push_back({s.time_ps, id, s.state.value});
      prev = s.state.value;
    }
  }
  std::sort(changes.begin(), changes.end(), [](const Change& a, const Change& b) {
    return std::tie(a.time_ps, a.net) < std::tie(b.time_ps, b.net);
  });
  std::int64_t current = begin_ps;
  for (const Change& c : changes) {
    if (c.time_ps != current) {
      out += "#" + std::to_string(c.time_ps) + "\n";
      current = c.time_ps;
    }
    out += logic_char(c.value);
    out += vcd_id(c.net);
    out += "\n";
  }
  return out;
}

}  // namespace swsim
