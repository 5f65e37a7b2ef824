#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace swsim::units {

// SPICE-style scalar: number with an optional SI scale suffix (f, p, n, u, m,
// k); trailing unit letters after the scale char are ignored ("21fF", "600n").
// Throws Error(SyntaxError) on garbage.
double parse_si(std::string_view text);

// "7.5ns", "300ps", "0.12us", "1.5s" -> picoseconds (rounded).
std::int64_t parse_time_ps(std::string_view text);

// "125MHz", "62.5MHz", "1GHz"; a bare number is taken as Hz.
double parse_freq_hz(std::string_view text);

// "21fF", "21f", "0.021pF"; a bare number is taken as fF.
double parse_cap_ff(std::string_view text);

// "1.8V" or "1.8".
double parse_volt(std::string_view text);

// Deterministic short form for card values: 600 -> "600", 7.5 -> "7.5".
std::string format_number(double value);

}  // namespace swsim::units
