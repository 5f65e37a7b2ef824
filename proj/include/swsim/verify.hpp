#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swsim/cells.hpp"
#include "swsim/logic.hpp"
#include "swsim/trace.hpp"

namespace swsim {

// Equivalence check between a switch-level cell and a behavioral flip-flop
// reference. The cell is clocked at 125 MHz; a fresh data value is applied
// midway before every clock edge and the settled output is sampled just
// before the next edge.
struct VerifyOptions {
  std::string oracle = "detff";  // "detff" or "setff"
  int cycles = 1000;             // edges checked in random mode
  std::uint32_t seed = 1;
  int exhaustive_bits = 0;       // when > 0: every data sequence of this length
};

struct Mismatch {
  int edge_index = 0;
  std::int64_t edge_time_ps = 0;
  LogicValue expected = LogicValue::X;
  LogicValue got = LogicValue::X;
  std::uint64_t sequence = 0;  // failing pattern in exhaustive mode
};

struct VerifyResult {
  bool passed = false;
  std::int64_t edges_checked = 0;
  std::vector<Mismatch> mismatches;       // capped at a handful
  Trace trace;                            // run containing the first mismatch
  std::int64_t edge_spacing_ps = 0;
};

// Timing grid shared by both modes.
inline constexpr std::int64_t kVerifyPeriodPs = 8000;
inline constexpr std::int64_t kVerifySettlePs = 2 * kVerifyPeriodPs;

VerifyResult verify_cell(const Cell& cell, const VerifyOptions& options);

}  // namespace swsim
