#include "doctest.h"

#include <string>
#include <vector>

#include "swsim/logic.hpp"

using namespace swsim;

namespace {

std::vector<SignalState> all_states() {
  std::vector<SignalState> out;
  for (LogicValue v : {LogicValue::Zero, LogicValue::One, LogicValue::X}) {
    for (Strength s : {Strength::Stored, Strength::Weak, Strength::Strong}) {
      out.push_back({v, s});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("invert flips levels and preserves unknowns") {
  CHECK(invert(LogicValue::Zero) == LogicValue::One);
  CHECK(invert(LogicValue::One) == LogicValue::Zero);
  CHECK(invert(LogicValue::X) == LogicValue::X);
}

TEST_CASE("stronger driver always wins") {
  SignalState strong{LogicValue::Zero, Strength::Strong};
  SignalState weak{LogicValue::One, Strength::Weak};
  SignalState stored{LogicValue::One, Strength::Stored};
  CHECK(resolve(strong, weak) == strong);
  CHECK(resolve(weak, strong) == strong);
  CHECK(resolve(weak, stored) == weak);
  CHECK(resolve(stored, weak) == weak);
  CHECK(resolve(strong, stored) == strong);
}

TEST_CASE("equal-strength conflicts collapse to x at that strength") {
  for (Strength s : {Strength::Stored, Strength::Weak, Strength::Strong}) {
    SignalState zero{LogicValue::Zero, s};
    SignalState one{LogicValue::One, s};
    SignalState x{LogicValue::X, s};
    CHECK(resolve(zero, one) == x);
    CHECK(resolve(one, zero) == x);
    CHECK(resolve(zero, x) == x);
    CHECK(resolve(x, one) == x);
    CHECK(resolve(zero, zero) == zero);
    CHECK(resolve(one, one) == one);
  }
}

TEST_CASE("resolve is commutative, idempotent and associative") {
  auto states = all_states();
  for (const SignalState& a : states) {
    CHECK(resolve(a, a) == a);
    for (const SignalState& b : states) {
      CHECK(resolve(a, b) == resolve(b, a));
      for (const SignalState& c : states) {
        CHECK(resolve(resolve(a, b), c) == resolve(a, resolve(b, c)));
      }
    }
  }
}

TEST_CASE("logic characters match vcd conventions") {
  CHECK(logic_char(LogicValue::Zero) == '0');
  CHECK(logic_char(LogicValue::One) == '1');
  CHECK(logic_char(LogicValue::X) == 'x');
}

TEST_CASE("only rail-to-rail moves count as full swings") {
  CHECK(is_full_swing(LogicValue::Zero, LogicValue::One));
  CHECK(is_full_swing(LogicValue::One, LogicValue::Zero));
  CHECK_FALSE(is_full_swing(LogicValue::X, LogicValue::One));
  CHECK_FALSE(is_full_swing(LogicValue::Zero, LogicValue::X));
  CHECK_FALSE(is_full_swing(LogicValue::One, LogicValue::One));
  CHECK_FALSE(is_full_swing(LogicValue::X, LogicValue::X));
}

TEST_CASE("strength names") {
  CHECK(std::string(strength_name(Strength::Stored)) == "stored");
  CHECK(std::string(strength_name(Strength::Weak)) == "weak");
  CHECK(std::string(strength_name(Strength::Strong)) == "strong");
}
