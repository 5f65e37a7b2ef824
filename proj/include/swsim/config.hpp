#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace swsim {

// Run-wide knobs. Defaults describe the reference 180nm setup; every field
// can be overridden from a key=value config file.
struct SimConfig {
  double vdd_v = 1.8;
  std::int64_t duration_ps = 120000;
  std::int64_t resolution_ps = 1;
  double r_on_nmos_ohm = 10000.0;  // at L/W = 1
  double r_on_pmos_ohm = 20000.0;  // at L/W = 1
  double cnode_default_ff = 1.0;   // per drain/gate/source attachment
  double temperature_c = 27.0;
  int oscillation_limit = 1000;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// key=value per line, '#' comments. Keys: vdd, duration, resolution,
// r_on_nmos, r_on_pmos, cnode_default_fF, temperature, oscillation_limit.
SimConfig parse_sim_config(std::string_view text);

std::string serialize_sim_config(const SimConfig& config);

}  // namespace swsim
