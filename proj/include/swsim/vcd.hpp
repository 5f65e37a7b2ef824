#pragma once

#include <cstdint>
#include <string>

#include "swsim/netlist.hpp"
#include "swsim/trace.hpp"

namespace swsim {

// Renders a trace as a VCD document. Output is a pure function of the
// arguments (fixed $date, ids assigned by net id), so identical runs give
// byte-identical files.
std::string write_vcd(const Trace& trace, const Netlist& netlist,
                      std::int64_t resolution_ps);

// Identifier a net gets in write_vcd output.
std::string vcd_net_id(NetId id);

// Small VCD fragment for failure reports: declarations for the given nets,
// their values at begin_ps, then every change up to end_ps. Times in ps.
std::string vcd_excerpt(const Trace& trace, const Netlist& netlist,
                        const std::vector<NetId>& nets, std::int64_t begin_ps,
                        std::int64_t end_ps);

}  // namespace swsim
