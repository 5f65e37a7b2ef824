#include "swsim/behavioral.hpp"

#include <algorithm>

#include "swsim/error.hpp"

namespace swsim {

LogicValue waveform_value_at(const Waveform& w, std::int64_t time_ps) {
  auto it = std::upper_bound(w.begin(), w.end(), time_ps,
                             [](std::int64_t t, const WaveformEvent& e) {
                               return t < e.time_ps;
                             });
  if (it == w.begin()) return LogicValue::X;
  return std::prev(it)->value;
}

namespace {

void check_edges(const std::vector<ClockEdge>& edges) {
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].time_ps <= edges[i - 1].time_ps) {
      throw Error(ErrorCode::BadArgument,
                  "clock edges must be strictly increasing");
    }
  }
}

SampleStream sample_ff(const Waveform& d, const std::vector<ClockEdge>& edges,
                       bool dual_edge) {
  check_edges(edges);
  SampleStream out;
  out.reserve(edges.size());
  LogicValue q = LogicValue::X;
  for (const ClockEdge& e : edges) {
    LogicValue dv = waveform_value_at(d, e.time_ps);
    if (dual_edge || e.kind == EdgeKind::Rising) q = dv;
    out.push_back({e.time_ps, e.kind, dv, q});
  }
  return out;
}

}  // namespace

SampleStream behavioral_setff(const Waveform& d,
                              const std::vector<ClockEdge>& edges) {
  return sample_ff(d, edges, false);
}

SampleStream behavioral_detff(const Waveform& d,
                              const std::vector<ClockEdge>& edges) {
  return sample_ff(d, edges, true);
}

Waveform behavioral_pulse_generator(const std::vector<ClockEdge>& edges,
                                    std::int64_t width_ps) {
  check_edges(edges);
  if (width_ps <= 0) {
    throw Error(ErrorCode::BadArgument, "pulse width must be positive");
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    std::int64_t spacing = edges[i].time_ps - edges[i - 1].time_ps;
    if (2 * width_ps >= spacing) {
      throw Error(ErrorCode::PulseOverlap,
                  "pulse width " + std::to_string(width_ps) +
                      "ps does not fit twice into the " +
                      std::to_string(spacing) + "ps edge spacing");
    }
  }
  Waveform out;
  if (edges.empty() || edges.front().time_ps > 0) {
    out.push_back({0, LogicValue::Zero});
  }
  for (const ClockEdge& e : edges) {
    out.push_back({e.time_ps, LogicValue::One});
    out.push_back({e.time_ps + width_ps, LogicValue::Zero});
  }
  return out;
}

std::vector<ClockEdge> edges_of_clock(const ClockSpec& clock,
                                      std::int64_t duration_ps) {
  std::vector<ClockEdge> edges;
  const std::int64_t high = clock.high_ps();
  for (std::int64_t rise = clock.phase_ps; rise < duration_ps;
       rise += clock.period_ps) {
    edges.push_back({rise, EdgeKind::Rising});
    if (rise + high < duration_ps) {
      edges.push_back({rise + high, EdgeKind::Falling});
    }
  }
  return edges;
}

}  // namespace swsim
