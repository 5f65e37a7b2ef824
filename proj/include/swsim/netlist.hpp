#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swsim {

using NetId = std::uint32_t;
inline constexpr NetId kNoNet = 0xffffffff;

enum class DeviceKind : std::uint8_t { Nmos, Pmos };
enum class NetKind : std::uint8_t { Supply, Ground, Input, Output, Internal };

struct Transistor {
  std::string name;
  DeviceKind kind = DeviceKind::Nmos;
  NetId drain = kNoNet;
  NetId gate = kNoNet;
  NetId source = kNoNet;
  NetId body = kNoNet;  // parsed and stored, ignored by the simulator
  double width_nm = 600.0;
  double length_nm = 180.0;
  bool weak = false;  // keeper devices drive Weak instead of Strong
};

struct Capacitor {
  std::string name;
  NetId net_a = kNoNet;
  NetId net_b = kNoNet;
  double value_ff = 0.0;
};

struct Net {
  std::string name;
  NetKind kind = NetKind::Internal;
  double explicit_cap_ff = 0.0;   // sum of attached capacitor values
  std::uint32_t terminal_count = 0;  // attached drain/gate/source terminals

  // Total node capacitance: explicit caps plus the per-terminal default.
  double lumped_cap_ff(double cnode_default_ff) const {
    return explicit_cap_ff + terminal_count * cnode_default_ff;
  }
};

struct Instance {
  std::string name;
  std::string subckt;
  std::vector<NetId> connections;
};

// Gate width bounds and channel length applied when sizing validation is on.
struct SizingRule {
  double min_width_nm = 600.0;
  double max_width_nm = 1200.0;
  double length_nm = 180.0;
};

class Netlist;

struct Subcircuit {
  std::string name;
  std::vector<std::string> ports;
  // Owned body netlist; ports appear as nets inside it.
  std::shared_ptr<Netlist> body;
};

class Netlist {
 public:
  Netlist();

  // Canonical lower-case lookup; creates the net if absent. "0" aliases gnd.
  NetId net(std::string_view name);
  std::optional<NetId> find_net(std::string_view name) const;

  const Net& net_info(NetId id) const { return nets_.at(id); }
  Net& net_info(NetId id) { return nets_.at(id); }
  const std::string& net_name(NetId id) const { return nets_.at(id).name; }
  void set_net_kind(NetId id, NetKind kind);

  NetId vdd() const { return 0; }
  NetId gnd() const { return 1; }

  void add_transistor(Transistor t);
  void add_capacitor(Capacitor c);
  void add_instance(Instance inst);
  void add_subcircuit(Subcircuit s);

  const std::vector<Net>& nets() const { return nets_; }
  const std::vector<Transistor>& transistors() const { return transistors_; }
  const std::vector<Capacitor>& capacitors() const { return capacitors_; }
  const std::vector<Instance>& instances() const { return instances_; }
  const std::map<std::string, Subcircuit>& subcircuits() const { return subckts_; }

  std::size_t net_count() const { return nets_.size(); }
  std::size_t transistor_count() const { return transistors_.size(); }
  bool is_flat() const { return instances_.empty(); }

  // Recomputes per-net terminal counts and explicit-cap sums, and classifies
  // gate-only non-rail nets as Input (they cannot be driven by the circuit).
  void finalize();

  // Dangling ids, instance arity, subcircuit recursion; optional sizing check.
  void validate(const SizingRule* sizing = nullptr) const;

 private:
  std::vector<Net> nets_;
  std::vector<Transistor> transistors_;
  std::vector<Capacitor> capacitors_;
  std::vector<Instance> instances_;
  std::map<std::string, Subcircuit> subckts_;
  std::unordered_map<std::string, NetId> index_;
};

struct ParseOptions {
  bool validate_sizing = false;
  SizingRule sizing;
};

Netlist parse_netlist(std::string_view text, const ParseOptions& options = {});

// Canonical card text; parse(serialize(n)) is structurally identical to n and
// the output is byte-deterministic.
std::string serialize_netlist(const Netlist& n);

// Expands all subcircuit instances; internal nets renamed "<instance>.<net>".
Netlist flatten(const Netlist& n);

// Number of transistors whose gate lies in clock_nets (caller supplies the
// clock net plus its inverter closure, e.g. {clk, clkb}).
int count_clocked_transistors(const Netlist& n, const std::set<NetId>& clock_nets);

bool structurally_equal(const Netlist& a, const Netlist& b);

}  // namespace swsim
