#include "swsim/units.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "swsim/error.hpp"

namespace swsim::units {

namespace {

// Splits "<number><alpha-tail>"; throws if the number part does not parse.
double parse_number_part(std::string_view text, std::string& tail) {
  std::string s(text);
  const char* begin = s.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin) {
    throw Error(ErrorCode::SyntaxError, "expected a number, got '" + s + "'");
  }
  tail.assign(end);
  if (!tail.empty() && tail.front() == ' ') {
    throw Error(ErrorCode::SyntaxError, "malformed quantity '" + s + "'");
  }
  return value;
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

double parse_si(std::string_view text) {
  std::string tail;
  double value = parse_number_part(text, tail);
  if (tail.empty()) return value;
  std::string t = lower(tail);
  // "meg" is the SPICE spelling for 1e6; a single 'm' is milli.
  double scale;
  if (t.rfind("meg", 0) == 0) {
    scale = 1e6;
  } else {
    switch (t.front()) {
      case 'f': scale = 1e-15; break;
      case 'p': scale = 1e-12; break;
      case 'n': scale = 1e-9; break;
      case 'u': scale = 1e-6; break;
      case 'm': scale = 1e-3; break;
      case 'k': scale = 1e3; break;
      default:
        throw Error(ErrorCode::SyntaxError,
                    "unknown unit suffix '" + std::string(tail) + "'");
    }
  }
  return value * scale;
}

std::int64_t parse_time_ps(std::string_view text) {
  std::string tail;
  double value = parse_number_part(text, tail);
  std::string t = lower(tail);
  double seconds;
  if (t.empty() || t == "s") seconds = value;
  else if (t == "ms") seconds = value * 1e-3;
  else if (t == "us") seconds = value * 1e-6;
  else if (t == "ns") seconds = value * 1e-9;
  else if (t == "ps") seconds = value * 1e-12;
  else if (t == "fs") seconds = value * 1e-15;
  else {
    throw Error(ErrorCode::SyntaxError,
                "unknown time unit '" + std::string(tail) + "'");
  }
  return static_cast<std::int64_t>(std::llround(seconds * 1e12));
}

double parse_freq_hz(std::string_view text) {
  std::string tail;
  double value = parse_number_part(text, tail);
  std::string t = lower(tail);
  if (t.empty() || t == "hz") return value;
  if (t == "khz") return value * 1e3;
  if (t == "mhz") return value * 1e6;
  if (t == "ghz") return value * 1e9;
  throw Error(ErrorCode::SyntaxError,
              "unknown frequency unit '" + std::string(tail) + "'");
}

double parse_cap_ff(std::string_view text) {
  std::string tail;
  double value = parse_number_part(text, tail);
  std::string t = lower(tail);
  if (t.empty() || t == "ff" || t == "f") return value;  // fF
  if (t == "pf" || t == "p") return value * 1e3;
  if (t == "nf" || t == "n") return value * 1e6;
  throw Error(ErrorCode::SyntaxError,
              "unknown capacitance unit '" + std::string(tail) + "'");
}

double parse_volt(std::string_view text) {
  std::string tail;
  double value = parse_number_part(text, tail);
  std::string t = lower(tail);
  if (t.empty() || t == "v") return value;
  if (t == "mv") return value * 1e-3;
  throw Error(ErrorCode::SyntaxError,
              "unknown voltage unit '" + std::string(tail) + "'");
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

}  // namespace swsim::units
