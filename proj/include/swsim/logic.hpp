#pragma once

#include <cstdint>

namespace swsim {

enum class LogicValue : std::uint8_t { Zero = 0, One = 1, X = 2 };

// Drive strength lattice: Strong > Weak > Stored. Supply rails and stimulus
// inputs drive Strong, keeper inverters Weak, retained charge Stored.
enum class Strength : std::uint8_t { Stored = 0, Weak = 1, Strong = 2 };

struct SignalState {
  LogicValue value = LogicValue::X;
  Strength strength = Strength::Stored;

  friend bool operator==(const SignalState&, const SignalState&) = default;
};

constexpr LogicValue invert(LogicValue v) {
  switch (v) {
    case LogicValue::Zero: return LogicValue::One;
    case LogicValue::One: return LogicValue::Zero;
    case LogicValue::X: return LogicValue::X;
  }
  return LogicValue::X;
}

// Two drivers on one node: higher strength wins; at equal strength a value
// conflict (including X against anything else) collapses to X.
constexpr SignalState resolve(SignalState a, SignalState b) {
  if (a.strength > b.strength) return a;
  if (b.strength > a.strength) return b;
  if (a.value == b.value) return a;
  return {LogicValue::X, a.strength};
}

constexpr char logic_char(LogicValue v) {
  switch (v) {
    case LogicValue::Zero: return '0';
    case LogicValue::One: return '1';
    case LogicValue::X: return 'x';
  }
  return 'x';
}

constexpr bool is_full_swing(LogicValue from, LogicValue to) {
  return (from == LogicValue::Zero && to == LogicValue::One) ||
         (from == LogicValue::One && to == LogicValue::Zero);
}

constexpr const char* strength_name(Strength s) {
  switch (s) {
    case Strength::Stored: return "stored";
    case Strength::Weak: return "weak";
    case Strength::Strong: return "strong";
  }
  return "?";
}

}  // namespace swsim
