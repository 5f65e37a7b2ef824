#pragma once

#include <cstdint>
#include <vector>

#include "swsim/config.hpp"
#include "swsim/logic.hpp"
#include "swsim/netlist.hpp"
#include "swsim/stimulus.hpp"
#include "swsim/trace.hpp"

namespace swsim {

// Nets whose state is imposed from outside a component: rails and stimulus
// inputs. They join components as fixed sources but never merge two
// components into one.
inline bool is_boundary_kind(NetKind kind) {
  return kind == NetKind::Supply || kind == NetKind::Ground ||
         kind == NetKind::Input;
}

// A channel-connected component: the unit the solver relaxes at once.
// Devices listed here have at least one channel terminal on a member net.
struct Component {
  std::vector<NetId> members;          // solved nets, sorted
  std::vector<NetId> boundaries;       // fixed sources touching it, sorted
  std::vector<std::size_t> devices;    // transistor indices, sorted
};

struct ComponentGraph {
  std::vector<Component> components;   // ordered by smallest member id
  std::vector<int> member_component;   // per net, -1 when not a member
  std::vector<std::vector<int>> gate_fanout;      // net -> components it gates
  std::vector<std::vector<int>> boundary_fanout;  // net -> components it feeds
};

// Requires a flat netlist (throws NotFlat otherwise).
ComponentGraph partition_components(const Netlist& flat);

// Effective on-resistance: the per-kind unit resistance scaled by L/W.
double device_resistance_ohm(const Transistor& t, const SimConfig& config);

enum class Conduction { Off, On, Unknown };
Conduction conduction_state(DeviceKind kind, LogicValue gate);

// One member's solution: the state the net is being driven to and the series
// resistance of the path that drives it (0 when the net just holds charge).
struct MemberState {
  SignalState state;
  double path_r_ohm = 0.0;
};

struct SolveResult {
  std::vector<MemberState> members;  // parallel to Component::members
};

// Relaxes one component against the current net states. Devices with X on
// the gate are handled by enumerating both gate levels per distinct X net
// (up to 12 such nets) and joining the outcomes pessimistically.
SolveResult solve_component(const Netlist& flat, const Component& comp,
                            const std::vector<SignalState>& current,
                            const SimConfig& config);

// Event-driven simulation over [0, config.duration_ps). Transition delays are
// round(path resistance x node capacitance), quantized to the resolution and
// never below one tick; a rescheduled net drops its older pending change
// (inertial behaviour). Throws UncoveredInput, InvalidStimulus,
// OscillationDetected or NoConvergence.
Trace run(const Netlist& flat, const Stimulus& stimulus, const SimConfig& config);

}  // namespace swsim
