#include "swsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

#include "swsim/error.hpp"

namespace swsim {

double device_resistance_ohm(const Transistor& t, const SimConfig& config) {
  double unit =
      t.kind == DeviceKind::Nmos ? config.r_on_nmos_ohm : config.r_on_pmos_ohm;
  return unit * (t.length_nm / t.width_nm);
}

Conduction conduction_state(DeviceKind kind, LogicValue gate) {
  if (gate == LogicValue::X) return Conduction::Unknown;
  bool on = kind == DeviceKind::Nmos ? gate == LogicValue::One
                                     : gate == LogicValue::Zero;
  return on ? Conduction::On : Conduction::Off;
}

ComponentGraph partition_components(const Netlist& flat) {
  if (!flat.is_flat()) {
    throw Error(ErrorCode::NotFlat, "component partitioning needs a flat netlist");
  }
  const std::size_t n = flat.net_count();
  std::vector<NetId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NetId a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](NetId a, NetId b) { parent[find(a)] = find(b); };

  auto boundary = [&](NetId id) {
    return is_boundary_kind(flat.net_info(id).kind);
  };
  std::vector<bool> channel(n, false);
  for (const Transistor& t : flat.transistors()) {
    channel[t.drain] = channel[t.source] = true;
    if (!boundary(t.drain) && !boundary(t.source)) unite(t.drain, t.source);
  }

  // Group member nets by root, components ordered by their smallest net id.
  std::map<NetId, std::vector<NetId>> groups;
  for (NetId id = 0; id < n; ++id) {
    if (boundary(id) || !channel[id]) continue;
    groups[find(id)].push_back(id);
  }
  ComponentGraph graph;
  graph.member_component.assign(n, -1);
  std::vector<std::pair<NetId, std::vector<NetId>>> ordered;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    ordered.push_back({members.front(), std::move(members)});
  }
  std::sort(ordered.begin(), ordered.end());
  for (auto& [min_id, members] : ordered) {
    int ci = static_cast<int>(graph.components.size());
    for (NetId id : members) graph.member_component[id] = ci;
    Component comp;
    comp.members = std::move(members);
    graph.components.push_back(std::move(comp));
  }

  graph.gate_fanout.assign(n, {});
  graph.boundary_fanout.assign(n, {});
  std::vector<std::set<NetId>> boundary_sets(graph.components.size());
  for (std::size_t di = 0; di < flat.transistors().size(); ++di) {
    const Transistor& t = flat.transistors()[di];
    int ci = -1;
    if (!boundary(t.drain)) ci = graph.member_component[t.drain];
    if (ci < 0 && !boundary(t.source)) ci = graph.member_component[t.source];
    if (ci < 0) continue;  // both channel ends are fixed nets; nothing to solve
    graph.components[ci].devices.push_back(di);
    if (boundary(t.drain)) boundary_sets[ci].insert(t.drain);
    if (boundary(t.source)) boundary_sets[ci].insert(t.source);
    auto& fan = graph.gate_fanout[t.gate];
    if (fan.empty() || fan.back() != ci) fan.push_back(ci);
  }
  for (std::size_t ci = 0; ci < graph.components.size(); ++ci) {
    auto& comp = graph.components[ci];
    std::sort(comp.devices.begin(), comp.devices.end());
    comp.boundaries.assign(boundary_sets[ci].begin(), boundary_sets[ci].end());
    for (NetId b : comp.boundaries) {
      graph.boundary_fanout[b].push_back(static_cast<int>(ci));
    }
  }
  for (auto& fan : graph.gate_fanout) {
    std::sort(fan.begin(), fan.end());
    fan.erase(std::unique(fan.begin(), fan.end()), fan.end());
  }
  return graph;
}

// ---------------------------------------------------------------------------
// Component relaxation

namespace {

struct Label {
  LogicValue value = LogicValue::X;
  Strength strength = Strength::Stored;
  double r_ohm = 0.0;
};

// Strongest driver wins outright; equal-strength disagreement degrades to X.
// Within one (strength, value) class the cheapest path is kept.
bool merge_label(Label& dst, const Label& cand) {
  if (cand.strength > dst.strength) {
    dst = cand;
    return true;
  }
  if (cand.strength < dst.strength) return false;
  if (dst.value == cand.value) {
    if (cand.r_ohm < dst.r_ohm) {
      dst.r_ohm = cand.r_ohm;
      return true;
    }
    return false;
  }
  bool changed = dst.value != LogicValue::X || cand.r_ohm < dst.r_ohm;
  dst.value = LogicValue::X;
  dst.r_ohm = std::min(dst.r_ohm, cand.r_ohm);
  return changed;
}

SolveResult solve_forced(const Netlist& nl, const Component& comp,
                         const std::vector<SignalState>& current,
                         const SimConfig& config,
                         const std::map<NetId, LogicValue>& gate_override,
                         bool transmit_unknown) {
  std::map<NetId, int> midx;
  for (std::size_t i = 0; i < comp.members.size(); ++i) {
    midx[comp.members[i]] = static_cast<int>(i);
  }
  std::vector<Label> labels(comp.members.size());
  for (std::size_t i = 0; i < comp.members.size(); ++i) {
    labels[i] = {current[comp.members[i]].value, Strength::Stored, 0.0};
  }
  auto source_label = [&](NetId net) -> std::optional<Label> {
    const Net& info = nl.net_info(net);
    switch (info.kind) {
      case NetKind::Supply: return Label{LogicValue::One, Strength::Strong, 0.0};
      case NetKind::Ground: return Label{LogicValue::Zero, Strength::Strong, 0.0};
      case NetKind::Input:
        return Label{current[net].value, Strength::Strong, 0.0};
      default: break;
    }
    auto it = midx.find(net);
    if (it == midx.end()) return std::nullopt;
    return labels[it->second];
  };

  const int max_sweeps =
      static_cast<int>(comp.members.size() + comp.devices.size()) + 2;
  bool changed = true;
  int sweeps = 0;
  while (changed) {
    if (++sweeps > max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "relaxation did not settle around net '" +
                      nl.net_name(comp.members.front()) + "'");
    }
    changed = false;
    for (std::size_t di : comp.devices) {
      const Transistor& t = nl.transistors()[di];
      LogicValue gate = current[t.gate].value;
      if (auto it = gate_override.find(t.gate); it != gate_override.end()) {
        gate = it->second;
      }
      Conduction cond = conduction_state(t.kind, gate);
      if (cond == Conduction::Off) continue;
      if (cond == Conduction::Unknown && !transmit_unknown) continue;
      const double r_dev = device_resistance_ohm(t, config);
      const Strength s_dev = t.weak ? Strength::Weak : Strength::Strong;
      const NetId ends[2][2] = {{t.drain, t.source}, {t.source, t.drain}};
      for (const auto& [from, to] : ends) {
        auto it = midx.find(to);
        if (it == midx.end()) continue;
        auto src = source_label(from);
        if (!src) continue;
        Label cand{src->value, std::min(src->strength, s_dev),
                   src->r_ohm + r_dev};
        if (cond == Conduction::Unknown) cand.value = LogicValue::X;
        if (merge_label(labels[it->second], cand)) changed = true;
      }
    }
  }

  SolveResult result;
  result.members.resize(comp.members.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    result.members[i].state = {labels[i].value, labels[i].strength};
    result.members[i].path_r_ohm =
        labels[i].strength == Strength::Stored ? 0.0 : labels[i].r_ohm;
  }
  return result;
}

constexpr int kMaxEnumeratedGates = 12;

}  // namespace

SolveResult solve_component(const Netlist& flat, const Component& comp,
                            const std::vector<SignalState>& current,
                            const SimConfig& config) {
  std::set<NetId> x_gates;
  for (std::size_t di : comp.devices) {
    const Transistor& t = flat.transistors()[di];
    if (current[t.gate].value == LogicValue::X) x_gates.insert(t.gate);
  }
  if (x_gates.empty()) return solve_forced(flat, comp, current, config, {}, false);
  if (static_cast<int>(x_gates.size()) > kMaxEnumeratedGates) {
    // Too many unknowns to enumerate: let maybe-on devices smear X around.
    return solve_forced(flat, comp, current, config, {}, true);
  }
  std::vector<NetId> gates(x_gates.begin(), x_gates.end());
  SolveResult joined;
  for (std::uint32_t mask = 0; mask < (1u << gates.size()); ++mask) {
    std::map<NetId, LogicValue> forced;
    for (std::size_t i = 0; i < gates.size(); ++i) {
      forced[gates[i]] =
          (mask >> i) & 1 ? LogicValue::One : LogicValue::Zero;
    }
    SolveResult one = solve_forced(flat, comp, current, config, forced, false);
    if (mask == 0) {
      joined = std::move(one);
      continue;
    }
    for (std::size_t i = 0; i < joined.members.size(); ++i) {
      MemberState& acc = joined.members[i];
      const MemberState& cur = one.members[i];
      if (acc.state.value != cur.state.value) acc.state.value = LogicValue::X;
      acc.state.strength = std::min(acc.state.strength, cur.state.strength);
      acc.path_r_ohm = std::min(acc.path_r_ohm, cur.path_r_ohm);
    }
  }
  return joined;
}

// ---------------------------------------------------------------------------
// Event-driven run

namespace {

struct TimedEvent {
  std::int64_t time_ps;
  NetId net;
  LogicValue value;
  std::uint64_t seq;
};

struct HeapItem {
  std::int64_t time_ps;
  NetId net;
  std::uint64_t seq;
  friend bool operator>(const HeapItem& a, const HeapItem& b) {
    return std::tie(a.time_ps, a.net, a.seq) > std::tie(b.time_ps, b.net, b.seq);
  }
};

struct PendingChange {
  std::int64_t time_ps = 0;
  SignalState state;
  std::uint64_t seq = 0;
  bool active = false;
};

}  // namespace

Trace run(const Netlist& flat, const Stimulus& stimulus, const SimConfig& config) {
  if (!flat.is_flat()) {
    throw Error(ErrorCode::NotFlat, "simulation needs a flat netlist");
  }
  stimulus.validate();
  const ComponentGraph graph = partition_components(flat);
  const std::size_t n = flat.net_count();

  std::vector<TimedEvent> events;
  std::uint64_t order = 0;
  auto add_event = [&](std::int64_t t, const std::string& name, LogicValue v) {
    auto id = flat.find_net(name);
    if (!id) {
      throw Error(ErrorCode::InvalidStimulus, "stimulus names unknown net '" + name + "'");
    }
    if (flat.net_info(*id).kind != NetKind::Input) {
      throw Error(ErrorCode::InvalidStimulus,
                  "stimulus drives net '" + name + "', which is not an input");
    }
    if (t >= config.duration_ps) return;  // beyond the simulated window
    events.push_back({t, *id, v, order++});
  };
  for (const StimulusEvent& e : stimulus.events) add_event(e.time_ps, e.net, e.value);
  for (const ClockSpec& c : stimulus.clocks) {
    for (const StimulusEvent& e : expand_clock(c, config.duration_ps)) {
      add_event(e.time_ps, e.net, e.value);
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const TimedEvent& a, const TimedEvent& b) {
                     return std::tie(a.time_ps, a.net, a.seq) <
                            std::tie(b.time_ps, b.net, b.seq);
                   });

  // Starting point: rails pinned, inputs at their earliest commanded value
  // (taken as already applied at t=0), everything else unknown charge.
  std::vector<SignalState> state(n, {LogicValue::X, Strength::Stored});
  state[flat.vdd()] = {LogicValue::One, Strength::Strong};
  state[flat.gnd()] = {LogicValue::Zero, Strength::Strong};
  std::map<NetId, std::pair<std::int64_t, LogicValue>> first_value;
  for (const TimedEvent& e : events) {
    auto it = first_value.find(e.net);
    if (it == first_value.end()) {
      first_value[e.net] = {e.time_ps, e.value};
    } else if (it->second.first == e.time_ps) {
      it->second.second = e.value;  // same-time later command wins
    }
  }
  for (NetId id = 0; id < n; ++id) {
    if (flat.net_info(id).kind != NetKind::Input) continue;
    auto it = first_value.find(id);
    if (it == first_value.end()) {
      throw Error(ErrorCode::UncoveredInput,
                  "input '" + flat.net_name(id) + "' has no stimulus");
    }
    state[id] = {it->second.second, Strength::Strong};
  }

  Trace trace(n);
  for (NetId id = 0; id < n; ++id) trace.record(id, 0, state[id]);

  std::vector<PendingChange> pending(n);
  std::uint64_t pending_seq = 0;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  std::vector<int> solve_count(graph.components.size(), 0);

  auto solve_and_schedule = [&](int ci, std::int64_t now) {
    if (++solve_count[ci] > config.oscillation_limit) {
      throw Error(ErrorCode::OscillationDetected,
                  "net '" + flat.net_name(graph.components[ci].members.front()) +
                      "' keeps switching with no new stimulus");
    }
    const Component& comp = graph.components[ci];
    SolveResult res = solve_component(flat, comp, state, config);
    for (std::size_t i = 0; i < comp.members.size(); ++i) {
      NetId net = comp.members[i];
      const SignalState target = res.members[i].state;
      if (target == state[net]) {
        pending[net].active = false;  // a superseding solve settles any glitch
        continue;
      }
      if (pending[net].active && pending[net].state == target) {
        continue;  // same transition already in flight; keep its landing time
      }
      const double c_ff = flat.net_info(net).lumped_cap_ff(config.cnode_default_ff);
      std::int64_t ticks = std::llround(res.members[i].path_r_ohm * c_ff * 1e-3 /
                                        static_cast<double>(config.resolution_ps));
      if (ticks < 1) ticks = 1;
      const std::int64_t when = now + ticks * config.resolution_ps;
      pending[net] = {when, target, ++pending_seq, true};
      heap.push({when, net, pending_seq});
    }
  };

  for (std::size_t ci = 0; ci < graph.components.size(); ++ci) {
    solve_and_schedule(static_cast<int>(ci), 0);
  }

  std::size_t ep = 0;
  while (ep < events.size() && events[ep].time_ps == 0) ++ep;  // folded into t=0

  while (true) {
    std::int64_t t_next = INT64_MAX;
    if (ep < events.size()) t_next = events[ep].time_ps;
    while (!heap.empty()) {
      const HeapItem& top = heap.top();
      if (!pending[top.net].active || pending[top.net].seq != top.seq) {
        heap.pop();
        continue;
      }
      t_next = std::min(t_next, top.time_ps);
      break;
    }
    if (t_next == INT64_MAX || t_next >= config.duration_ps) break;

    std::set<int> affected;
    bool had_stimulus = false;

    // First phase: every state commanded for this instant lands before any
    // component is re-solved, so a simultaneous clock/data flip is seen as
    // one coherent step.
    while (ep < events.size() && events[ep].time_ps == t_next) {
      NetId net = events[ep].net;
      LogicValue v = events[ep].value;
      while (ep < events.size() && events[ep].time_ps == t_next &&
             events[ep].net == net) {
        v = events[ep].value;
        ++ep;
      }
      had_stimulus = true;
      SignalState ns{v, Strength::Strong};
      if (ns == state[net]) continue;
      state[net] = ns;
      trace.record(net, t_next, ns);
      for (int ci : graph.gate_fanout[net]) affected.insert(ci);
      for (int ci : graph.boundary_fanout[net]) affected.insert(ci);
    }
    while (!heap.empty() && heap.top().time_ps == t_next) {
      HeapItem item = heap.top();
      heap.pop();
      if (!pending[item.net].active || pending[item.net].seq != item.seq) continue;
      pending[item.net].active = false;
      const SignalState ns = pending[item.net].state;
      if (ns == state[item.net]) continue;
      state[item.net] = ns;
      trace.record(item.net, t_next, ns);
      for (int ci : graph.gate_fanout[item.net]) affected.insert(ci);
    }

    if (had_stimulus) std::fill(solve_count.begin(), solve_count.end(), 0);

    // Second phase: re-solve whatever the changes reached, lowest component
    // first for reproducible traces.
    for (int ci : affected) solve_and_schedule(ci, t_next);
  }

  trace.set_end_time_ps(config.duration_ps);
  return trace;
}

}  // namespace swsim
