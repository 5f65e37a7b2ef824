#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "swsim/logic.hpp"
#include "swsim/netlist.hpp"

namespace swsim {

struct TraceSample {
  std::int64_t time_ps = 0;
  SignalState state;

  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

// Per-net waveform history. Samples are appended in nondecreasing time order;
// a second record at the same timestamp overwrites the first, and records
// that do not change the state are dropped, so each stored sample is a real
// change (or the t=0 snapshot).
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::size_t net_count) : history_(net_count) {}

  std::size_t net_count() const { return history_.size(); }

  void record(NetId net, std::int64_t time_ps, SignalState state) {
    auto& h = history_.at(net);
    if (!h.empty() && h.back().time_ps == time_ps) {
      if (h.size() >= 2 && h[h.size() - 2].state == state) {
        h.pop_back();  // overwrite cancelled the change out
      } else {
        h.back().state = state;
      }
      return;
    }
    if (!h.empty() && h.back().state == state) return;
    h.push_back({time_ps, state});
    end_time_ps_ = std::max(end_time_ps_, time_ps);
  }

  const std::vector<TraceSample>& history(NetId net) const {
    return history_.at(net);
  }

  // State as of `time_ps` (the last change at or before it). Nets start as
  // floating unknowns before their first sample.
  SignalState state_at(NetId net, std::int64_t time_ps) const {
    const auto& h = history_.at(net);
    auto it = std::upper_bound(h.begin(), h.end(), time_ps,
                               [](std::int64_t t, const TraceSample& s) {
                                 return t < s.time_ps;
                               });
    if (it == h.begin()) return {LogicValue::X, Strength::Stored};
    return std::prev(it)->state;
  }

  LogicValue value_at(NetId net, std::int64_t time_ps) const {
    return state_at(net, time_ps).value;
  }

  SignalState final_state(NetId net) const {
    const auto& h = history_.at(net);
    if (h.empty()) return {LogicValue::X, Strength::Stored};
    return h.back().state;
  }

  // Full-swing value changes (0 to 1 or 1 to 0) whose change time lies in
  // [begin_ps, end_ps). Changes into or out of X do not count.
  int toggles_in_window(NetId net, std::int64_t begin_ps,
                        std::int64_t end_ps) const {
    const auto& h = history_.at(net);
    int count = 0;
    LogicValue prev = LogicValue::X;
    bool have_prev = false;
    for (const TraceSample& s : h) {
      if (s.time_ps >= end_ps) break;
      if (have_prev && s.time_ps >= begin_ps && is_full_swing(prev, s.state.value)) {
        ++count;
      }
      prev = s.state.value;
      have_prev = true;
    }
    return count;
  }

  int total_toggles(NetId net) const {
    return toggles_in_window(net, 0, INT64_MAX);
  }

  std::int64_t end_time_ps() const { return end_time_ps_; }
  void set_end_time_ps(std::int64_t t) { end_time_ps_ = std::max(end_time_ps_, t); }

 private:
  std::vector<std::vector<TraceSample>> history_;
  std::int64_t end_time_ps_ = 0;
};

}  // namespace swsim
