#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swsim/logic.hpp"

namespace swsim {

// One forced value on an input net. Nets are referenced by name so a stimulus
// file can be parsed without the netlist in hand; the engine resolves names
// when a run starts.
struct StimulusEvent {
  std::int64_t time_ps = 0;
  std::string net;
  LogicValue value = LogicValue::X;

  friend bool operator==(const StimulusEvent&, const StimulusEvent&) = default;
};

struct ClockSpec {
  std::string net;
  std::int64_t period_ps = 0;
  double duty_pct = 50.0;   // fraction of the period spent high, in percent
  std::int64_t phase_ps = 0;  // time of the first rising edge

  std::int64_t high_ps() const;  // rounded duty * period
};

struct Stimulus {
  std::vector<StimulusEvent> events;
  std::vector<ClockSpec> clocks;

  // Throws InvalidStimulus on nonsense: negative times, bad duty cycles,
  // a net driven by two clocks or by both a clock and discrete events.
  void validate() const;
};

// Text format, one directive per line ('#' starts a comment):
//   at <time> <net> = <0|1|x>
//   clock <net> period <time> duty <percent> [phase <time>]
Stimulus parse_stimulus(std::string_view text);

// All level changes of `clock` in [0, duration_ps) as discrete events,
// including the initial level at t=0.
std::vector<StimulusEvent> expand_clock(const ClockSpec& clock,
                                        std::int64_t duration_ps);

// Clock level at an arbitrary time (Zero before the first rising edge).
LogicValue clock_value_at(const ClockSpec& clock, std::int64_t time_ps);

}  // namespace swsim
