#include "swsim/verify.hpp"

#include <random>

#include "swsim/behavioral.hpp"
#include "swsim/engine.hpp"
#include "swsim/error.hpp"

namespace swsim {

namespace {

constexpr std::int64_t kSpacing = kVerifyPeriodPs / 2;  // edge-to-edge
constexpr int kMismatchCap = 8;

// One simulation of `n` edges with the given data-per-edge assignment,
// compared against the behavioral reference. Returns mismatches found.
std::vector<Mismatch> check_sequence(const Cell& cell,
                                     const std::vector<LogicValue>& d_values,
                                     const std::string& oracle, Trace* trace_out) {
  const std::int64_t n = static_cast<std::int64_t>(d_values.size());
  const std::int64_t duration = kVerifySettlePs + (n + 1) * kSpacing;

  ClockSpec clk;
  clk.net = cell.clock_input;
  clk.period_ps = kVerifyPeriodPs;

  Stimulus stim;
  stim.clocks.push_back(clk);
  StimulusEvent init;
  init.net = cell.data_input;
  init.value = d_values.empty() ? LogicValue::Zero : d_values.front();
  stim.events.push_back(init);
  for (std::int64_t k = 0; k < n; ++k) {
    StimulusEvent ev;
    ev.time_ps = kVerifySettlePs + k * kSpacing - kSpacing / 2;
    ev.net = cell.data_input;
    ev.value = d_values[k];
    stim.events.push_back(ev);
  }

  SimConfig cfg;
  cfg.duration_ps = duration;
  Trace trace = run(cell.netlist, stim, cfg);

  // Behavioral reference sees the same data waveform and clock edges.
  Waveform d_wave;
  for (const StimulusEvent& ev : stim.events) {
    d_wave.push_back({ev.time_ps, ev.value});
  }
  const std::vector<ClockEdge> edges = edges_of_clock(clk, duration);
  const SampleStream expected = oracle == "setff"
                                    ? behavioral_setff(d_wave, edges)
                                    : behavioral_detff(d_wave, edges);

  const NetId q = cell.ports.out;
  std::vector<Mismatch> mismatches;
  for (const Sample& s : expected) {
    if (s.edge_time_ps < kVerifySettlePs) continue;
    const std::int64_t index = (s.edge_time_ps - kVerifySettlePs) / kSpacing;
    if (index >= n) break;
    const LogicValue got = trace.value_at(q, s.edge_time_ps + kSpacing - 1);
    if (got != s.q_value) {
      Mismatch m;
      m.edge_index = static_cast<int>(index);
      m.edge_time_ps = s.edge_time_ps;
      m.expected = s.q_value;
      m.got = got;
      mismatches.push_back(m);
      if (mismatches.size() >= kMismatchCap) break;
    }
  }
  if (!mismatches.empty() && trace_out) *trace_out = std::move(trace);
  return mismatches;
}

}  // namespace

VerifyResult verify_cell(const Cell& cell, const VerifyOptions& options) {
  if (cell.clock_input.empty() || cell.data_input.empty() ||
      cell.ports.out == kNoNet) {
    throw Error(ErrorCode::BadArgument,
                "cell '" + cell.name + "' has no clock/data/output ports");
  }
  if (options.oracle != "setff" && options.oracle != "detff") {
    throw Error(ErrorCode::BadArgument,
                "oracle must be 'setff' or 'detff', got '" + options.oracle + "'");
  }

  VerifyResult result;
  result.edge_spacing_ps = kSpacing;

  if (options.exhaustive_bits > 0) {
    const int bits = options.exhaustive_bits;
    if (bits > 20) {
      throw Error(ErrorCode::BadArgument, "exhaustive sweep capped at 20 bits");
    }
    const std::uint64_t total = 1ull << bits;
    for (std::uint64_t seq = 0; seq < total; ++seq) {
      std::vector<LogicValue> d_values(bits);
      for (int k = 0; k < bits; ++k) {
        d_values[k] = (seq >> k) & 1 ? LogicValue::One : LogicValue::Zero;
      }
      Trace trace;
      std::vector<Mismatch> found =
          check_sequence(cell, d_values, options.oracle,
                         result.mismatches.empty() ? &trace : nullptr);
      result.edges_checked += bits;
      if (!found.empty() && result.mismatches.empty()) {
        for (Mismatch& m : found) m.sequence = seq;
        result.mismatches = std::move(found);
        result.trace = std::move(trace);
      }
    }
  } else {
    if (options.cycles <= 0) {
      throw Error(ErrorCode::BadArgument, "cycles must be positive");
    }
    std::mt19937 rng(options.seed);
    std::vector<LogicValue> d_values(options.cycles);
    for (LogicValue& v : d_values) {
      v = rng() & 1 ? LogicValue::One : LogicValue::Zero;
    }
    Trace trace;
    result.mismatches = check_sequence(cell, d_values, options.oracle, &trace);
    result.edges_checked = options.cycles;
    if (!result.mismatches.empty()) result.trace = std::move(trace);
  }

  result.passed = result.mismatches.empty();
  return result;
}

}  // namespace swsim
