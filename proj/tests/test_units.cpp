#include "doctest.h"

#include "swsim/error.hpp"
#include "swsim/units.hpp"

using namespace swsim;

TEST_CASE("si suffixes scale raw values") {
  CHECK(units::parse_si("600n") == doctest::Approx(6e-7).epsilon(1e-12));
  CHECK(units::parse_si("21f") == doctest::Approx(2.1e-14).epsilon(1e-12));
  CHECK(units::parse_si("7.5") == doctest::Approx(7.5));
  CHECK(units::parse_si("2k") == doctest::Approx(2000.0));
  CHECK(units::parse_si("1.5m") == doctest::Approx(1.5e-3));
  CHECK(units::parse_si("3u") == doctest::Approx(3e-6));
  CHECK(units::parse_si("10p") == doctest::Approx(1e-11));
}

TEST_CASE("si suffix is case-insensitive and trailing unit letters are ignored") {
  CHECK(units::parse_si("21fF") == doctest::Approx(2.1e-14).epsilon(1e-12));
  CHECK(units::parse_si("600N") == doctest::Approx(6e-7).epsilon(1e-12));
  CHECK(units::parse_si("125MEG") == doctest::Approx(1.25e8));  // spice meg
  CHECK(units::parse_si("5m") == doctest::Approx(5e-3));        // bare m is milli
}

TEST_CASE("garbage scalars are rejected") {
  CHECK_THROWS_AS(units::parse_si("abc"), Error);
  CHECK_THROWS_AS(units::parse_si(""), Error);
  CHECK_THROWS_AS(units::parse_si("--3"), Error);
  try {
    units::parse_si("zz");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
  }
}

TEST_CASE("time strings convert to picoseconds") {
  CHECK(units::parse_time_ps("7.5ns") == 7500);
  CHECK(units::parse_time_ps("300ps") == 300);
  CHECK(units::parse_time_ps("0.12us") == 120000);
  CHECK(units::parse_time_ps("1ns") == 1000);
  // no suffix means seconds
  CHECK(units::parse_time_ps("1e-9") == 1000);
  CHECK(units::parse_time_ps("2") == 2000000000000LL);
}

TEST_CASE("frequency strings convert to hertz") {
  CHECK(units::parse_freq_hz("125MHz") == doctest::Approx(1.25e8));
  CHECK(units::parse_freq_hz("62.5MHz") == doctest::Approx(6.25e7));
  CHECK(units::parse_freq_hz("1GHz") == doctest::Approx(1e9));
  CHECK(units::parse_freq_hz("250") == doctest::Approx(250.0));
}

TEST_CASE("capacitance strings convert to femtofarads") {
  CHECK(units::parse_cap_ff("21fF") == doctest::Approx(21.0));
  CHECK(units::parse_cap_ff("21f") == doctest::Approx(21.0));
  CHECK(units::parse_cap_ff("0.021pF") == doctest::Approx(21.0));
  CHECK(units::parse_cap_ff("2") == doctest::Approx(2.0));
}

TEST_CASE("voltage strings") {
  CHECK(units::parse_volt("1.8V") == doctest::Approx(1.8));
  CHECK(units::parse_volt("1.8") == doctest::Approx(1.8));
  CHECK(units::parse_volt("900mV") == doctest::Approx(0.9));
}

TEST_CASE("format_number is short and deterministic") {
  CHECK(units::format_number(600) == "600");
  CHECK(units::format_number(7.5) == "7.5");
  CHECK(units::format_number(0.5) == "0.5");
  CHECK(units::format_number(-3) == "-3");
  CHECK(units::format_number(180) == "180");
}
