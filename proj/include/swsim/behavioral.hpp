#pragma once

#include <cstdint>
#include <vector>

#include "swsim/logic.hpp"
#include "swsim/stimulus.hpp"

namespace swsim {

enum class EdgeKind { Rising, Falling };

struct ClockEdge {
  std::int64_t time_ps = 0;
  EdgeKind kind = EdgeKind::Rising;

  friend bool operator==(const ClockEdge&, const ClockEdge&) = default;
};

// Piecewise-constant logic waveform: each event's value holds until the next
// event; X before the first.
struct WaveformEvent {
  std::int64_t time_ps = 0;
  LogicValue value = LogicValue::X;

  friend bool operator==(const WaveformEvent&, const WaveformEvent&) = default;
};
using Waveform = std::vector<WaveformEvent>;

LogicValue waveform_value_at(const Waveform& w, std::int64_t time_ps);

// One row per clock edge: what d was and what q became.
struct Sample {
  std::int64_t edge_time_ps = 0;
  EdgeKind edge = EdgeKind::Rising;
  LogicValue d_value = LogicValue::X;
  LogicValue q_value = LogicValue::X;

  friend bool operator==(const Sample&, const Sample&) = default;
};
using SampleStream = std::vector<Sample>;

// Ideal single-edge flip-flop: q takes d on rising edges, holds elsewhere.
// Edges must be strictly increasing in time (BadArgument otherwise).
SampleStream behavioral_setff(const Waveform& d,
                              const std::vector<ClockEdge>& edges);

// Ideal dual-edge flip-flop: q takes d on every edge.
SampleStream behavioral_detff(const Waveform& d,
                              const std::vector<ClockEdge>& edges);

// High for `width_ps` after every edge, low otherwise. Requires
// width_ps < half the minimum edge spacing (PulseOverlap otherwise).
Waveform behavioral_pulse_generator(const std::vector<ClockEdge>& edges,
                                    std::int64_t width_ps);

// Edge instants of a clock over [0, duration_ps), time-ordered.
std::vector<ClockEdge> edges_of_clock(const ClockSpec& clock,
                                      std::int64_t duration_ps);

}  // namespace swsim
