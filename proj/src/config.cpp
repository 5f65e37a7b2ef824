#include "swsim/config.hpp"

#include <cctype>
#include <sstream>

#include "swsim/error.hpp"
#include "swsim/units.hpp"

namespace swsim {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

SimConfig parse_sim_config(std::string_view text) {
  SimConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::BadArgument, "expected key=value", lineno);
    }
    std::string key = lower(trim(line.substr(0, eq)));
    std::string value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw Error(ErrorCode::BadArgument, "empty value for '" + key + "'", lineno);
    }
    try {
      if (key == "vdd") {
        cfg.vdd_v = units::parse_volt(value);
        if (cfg.vdd_v <= 0) throw Error(ErrorCode::BadArgument, "vdd must be > 0");
      } else if (key == "duration") {
        cfg.duration_ps = units::parse_time_ps(value);
        if (cfg.duration_ps <= 0) {
          throw Error(ErrorCode::BadArgument, "duration must be > 0");
        }
      } else if (key == "resolution") {
        cfg.resolution_ps = units::parse_time_ps(value);
        if (cfg.resolution_ps <= 0) {
          throw Error(ErrorCode::BadArgument, "resolution must be > 0");
        }
      } else if (key == "r_on_nmos") {
        cfg.r_on_nmos_ohm = units::parse_si(value);
        if (cfg.r_on_nmos_ohm <= 0) {
          throw Error(ErrorCode::BadArgument, "r_on_nmos must be > 0");
        }
      } else if (key == "r_on_pmos") {
        cfg.r_on_pmos_ohm = units::parse_si(value);
        if (cfg.r_on_pmos_ohm <= 0) {
          throw Error(ErrorCode::BadArgument, "r_on_pmos must be > 0");
        }
      } else if (key == "cnode_default_ff") {
        cfg.cnode_default_ff = units::parse_si(value);
        if (cfg.cnode_default_ff < 0) {
          throw Error(ErrorCode::BadArgument, "cnode_default_fF must be >= 0");
        }
      } else if (key == "temperature") {
        cfg.temperature_c = units::parse_si(value);
      } else if (key == "oscillation_limit") {
        cfg.oscillation_limit = static_cast<int>(units::parse_si(value));
        if (cfg.oscillation_limit <= 0) {
          throw Error(ErrorCode::BadArgument, "oscillation_limit must be > 0");
        }
      } else {
        throw Error(ErrorCode::BadArgument, "unknown config key '" + key + "'");
      }
    } catch (const Error& e) {
      throw Error(e.code(), e.raw_message(), lineno);
    }
  }
  return cfg;
}

std::string serialize_sim_config(const SimConfig& c) {
  std::ostringstream out;
  out << "vdd = " << units::format_number(c.vdd_v) << "\n"
      << "duration = " << c.duration_ps << "ps\n"
      << "resolution = " << c.resolution_ps << "ps\n"
      << "r_on_nmos = " << units::format_number(c.r_on_nmos_ohm) << "\n"
      << "r_on_pmos = " << units::format_number(c.r_on_pmos_ohm) << "\n"
      << "cnode_default_fF = " << units::format_number(c.cnode_default_ff) << "\n"
      << "temperature = " << units::format_number(c.temperature_c) << "\n"
      << "oscillation_limit = " << c.oscillation_limit << "\n";
  return out.str();
}

}  // namespace swsim
