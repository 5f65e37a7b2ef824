#include "swsim/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
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

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

void check_sizing(const Transistor& t, const SizingRule& rule, int line) {
  constexpr double kTol = 1e-6;
  if (t.width_nm < rule.min_width_nm - kTol || t.width_nm > rule.max_width_nm + kTol) {
    throw Error(ErrorCode::BadSizing,
                "device '" + t.name + "' width " + units::format_number(t.width_nm) +
                    " nm outside [" + units::format_number(rule.min_width_nm) + ", " +
                    units::format_number(rule.max_width_nm) + "] nm",
                line);
  }
  if (std::abs(t.length_nm - rule.length_nm) > kTol) {
    throw Error(ErrorCode::BadSizing,
                "device '" + t.name + "' length " + units::format_number(t.length_nm) +
                    " nm, expected " + units::format_number(rule.length_nm) + " nm",
                line);
  }
}

}  // namespace

Netlist::Netlist() {
  nets_.push_back({"vdd", NetKind::Supply, 0.0, 0});
  nets_.push_back({"gnd", NetKind::Ground, 0.0, 0});
  index_["vdd"] = 0;
  index_["gnd"] = 1;
  index_["0"] = 1;
}

NetId Netlist::net(std::string_view name) {
  std::string key = lower(name);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  NetId id = static_cast<NetId>(nets_.size());
  nets_.push_back({key, NetKind::Internal, 0.0, 0});
  index_.emplace(std::move(key), id);
  return id;
}

std::optional<NetId> Netlist::find_net(std::string_view name) const {
  auto it = index_.find(lower(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Netlist::set_net_kind(NetId id, NetKind kind) {
  Net& n = nets_.at(id);
  if (n.kind == NetKind::Supply || n.kind == NetKind::Ground) return;  // rails are fixed
  n.kind = kind;
}

void Netlist::add_transistor(Transistor t) {
  if (t.width_nm <= 0 || t.length_nm <= 0) {
    throw Error(ErrorCode::BadSizing,
                "device '" + t.name + "' must have positive width and length");
  }
  transistors_.push_back(std::move(t));
}

void Netlist::add_capacitor(Capacitor c) {
  if (c.value_ff < 0) {
    throw Error(ErrorCode::BadArgument,
                "capacitor '" + c.name + "' has negative value");
  }
  capacitors_.push_back(std::move(c));
}

void Netlist::add_instance(Instance inst) { instances_.push_back(std::move(inst)); }

void Netlist::add_subcircuit(Subcircuit s) {
  std::string key = s.name;
  subckts_[key] = std::move(s);
}

void Netlist::finalize() {
  for (Net& n : nets_) {
    n.explicit_cap_ff = 0.0;
    n.terminal_count = 0;
  }
  for (const Transistor& t : transistors_) {
    nets_.at(t.drain).terminal_count++;
    nets_.at(t.gate).terminal_count++;
    nets_.at(t.source).terminal_count++;
    // body excluded: the switch model never looks at it
  }
  for (const Capacitor& c : capacitors_) {
    nets_.at(c.net_a).explicit_cap_ff += c.value_ff;
    nets_.at(c.net_b).explicit_cap_ff += c.value_ff;
  }
  // A non-rail net that only ever feeds gates has no drive path inside the
  // circuit, so it must come from outside: classify as Input.
  if (instances_.empty()) {
    std::vector<bool> channel(nets_.size(), false), gateonly(nets_.size(), false);
    for (const Transistor& t : transistors_) {
      channel[t.drain] = channel[t.source] = true;
      gateonly[t.gate] = true;
    }
    for (std::size_t i = 0; i < nets_.size(); ++i) {
      Net& n = nets_[i];
      if (n.kind == NetKind::Internal && gateonly[i] && !channel[i]) {
        n.kind = NetKind::Input;
      }
    }
  }
}

namespace {

// Name-based subcircuit reference edges, collected across nesting levels.
void collect_subckt_edges(const Netlist& nl,
                          std::map<std::string, std::set<std::string>>& edges) {
  for (const auto& [name, sub] : nl.subcircuits()) {
    auto& dst = edges[name];
    if (!sub.body) continue;
    for (const Instance& inst : sub.body->instances()) dst.insert(inst.subckt);
    collect_subckt_edges(*sub.body, edges);
  }
}

void check_no_recursion(const Netlist& nl) {
  std::map<std::string, std::set<std::string>> edges;
  collect_subckt_edges(nl, edges);
  // Iterative DFS with an explicit path set per root.
  for (const auto& [root, _] : edges) {
    std::vector<std::pair<std::string, bool>> stack{{root, false}};
    std::set<std::string> path;
    while (!stack.empty()) {
      auto [name, done] = stack.back();
      stack.pop_back();
      if (done) {
        path.erase(name);
        continue;
      }
      if (path.count(name)) {
        throw Error(ErrorCode::RecursiveSubcircuit,
                    "subcircuit '" + name + "' instantiates itself (directly or via a cycle)");
      }
      path.insert(name);
      stack.push_back({name, true});
      auto it = edges.find(name);
      if (it == edges.end()) continue;
      for (const std::string& next : it->second) stack.push_back({next, false});
    }
  }
}

void validate_scoped(const Netlist& nl, const SizingRule* sizing,
                     std::map<std::string, const Subcircuit*> visible) {
  auto check_net = [&](NetId id, const std::string& owner) {
    if (id >= nl.net_count()) {
      throw Error(ErrorCode::DanglingNet,
                  "'" + owner + "' references undeclared net id " + std::to_string(id));
    }
  };
  for (const Transistor& t : nl.transistors()) {
    check_net(t.drain, t.name);
    check_net(t.gate, t.name);
    check_net(t.source, t.name);
    check_net(t.body, t.name);
    if (sizing) check_sizing(t, *sizing, -1);
  }
  for (const Capacitor& c : nl.capacitors()) {
    check_net(c.net_a, c.name);
    check_net(c.net_b, c.name);
  }
  for (const auto& [name, sub] : nl.subcircuits()) visible[name] = &sub;
  for (const Instance& inst : nl.instances()) {
    auto it = visible.find(inst.subckt);
    if (it == visible.end()) {
      throw Error(ErrorCode::DanglingNet,
                  "instance '" + inst.name + "' references unknown subcircuit '" +
                      inst.subckt + "'");
    }
    if (it->second->ports.size() != inst.connections.size()) {
      throw Error(ErrorCode::BadArgument,
                  "instance '" + inst.name + "' binds " +
                      std::to_string(inst.connections.size()) + " nets, subcircuit '" +
                      inst.subckt + "' has " +
                      std::to_string(it->second->ports.size()) + " ports");
    }
    for (NetId id : inst.connections) check_net(id, inst.name);
  }
  for (const auto& [name, sub] : nl.subcircuits()) {
    if (sub.body) validate_scoped(*sub.body, sizing, visible);
  }
}

}  // namespace

void Netlist::validate(const SizingRule* sizing) const {
  check_no_recursion(*this);
  validate_scoped(*this, sizing, {});
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(const ParseOptions& options) : options_(options) {}

  Netlist run(std::string_view text) {
    Netlist top;
    std::vector<Netlist*> scope{&top};
    std::vector<Subcircuit> pending;  // parallel to scope[1..]

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      auto tokens = tokenize(raw);
      if (tokens.empty()) continue;
      const std::string first = lower(tokens[0].text);
      if (first[0] == '*') continue;  // comment card

      Netlist& nl = *scope.back();
      if (first == ".subckt") {
        if (tokens.size() < 2) {
          throw Error(ErrorCode::SyntaxError, ".subckt needs a name", lineno,
                      tokens[0].col);
        }
        Subcircuit sub;
        sub.name = lower(tokens[1].text);
        sub.body = std::make_shared<Netlist>();
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          std::string port = lower(tokens[i].text);
          if (port == "vdd" || port == "gnd" || port == "0") {
            throw Error(ErrorCode::SyntaxError,
                        "rails are global and cannot be subcircuit ports", lineno,
                        tokens[i].col);
          }
          sub.ports.push_back(port);
          sub.body->net(port);
        }
        pending.push_back(std::move(sub));
        scope.push_back(pending.back().body.get());
      } else if (first == ".ends") {
        if (pending.empty()) {
          throw Error(ErrorCode::SyntaxError, ".ends without .subckt", lineno,
                      tokens[0].col);
        }
        Subcircuit sub = std::move(pending.back());
        pending.pop_back();
        scope.pop_back();
        sub.body->finalize();
        scope.back()->add_subcircuit(std::move(sub));
      } else if (first == ".input" || first == ".output") {
        NetKind kind = first == ".input" ? NetKind::Input : NetKind::Output;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          nl.set_net_kind(nl.net(tokens[i].text), kind);
        }
      } else {
        switch (first[0]) {
          case 'm': parse_device(nl, tokens, lineno); break;
          case 'c': parse_capacitor(nl, tokens, lineno); break;
          case 'x': parse_instance(nl, tokens, lineno); break;
          default:
            throw Error(ErrorCode::UnknownCard,
                        "unrecognized card '" + tokens[0].text + "'", lineno,
                        tokens[0].col);
        }
      }
    }
    if (!pending.empty()) {
      throw Error(ErrorCode::SyntaxError,
                  "unterminated .subckt '" + pending.back().name + "'", lineno);
    }
    top.finalize();
    top.validate(options_.validate_sizing ? &options_.sizing : nullptr);
    return top;
  }

 private:
  void parse_device(Netlist& nl, const std::vector<Token>& tokens, int lineno) {
    // M<name> <drain> <gate> <source> <body> <NMOS|PMOS> W=<val> L=<val> [WEAK]
    if (tokens.size() < 8) {
      throw Error(ErrorCode::SyntaxError,
                  "device card needs: M<name> d g s b NMOS|PMOS W=... L=...", lineno,
                  tokens[0].col);
    }
    Transistor t;
    t.name = lower(tokens[0].text);
    t.drain = nl.net(tokens[1].text);
    t.gate = nl.net(tokens[2].text);
    t.source = nl.net(tokens[3].text);
    t.body = nl.net(tokens[4].text);
    std::string model = lower(tokens[5].text);
    if (model == "nmos") t.kind = DeviceKind::Nmos;
    else if (model == "pmos") t.kind = DeviceKind::Pmos;
    else {
      throw Error(ErrorCode::SyntaxError, "expected NMOS or PMOS, got '" +
                      tokens[5].text + "'", lineno, tokens[5].col);
    }
    bool have_w = false, have_l = false;
    for (std::size_t i = 6; i < tokens.size(); ++i) {
      std::string tok = lower(tokens[i].text);
      if (tok == "weak") {
        t.weak = true;
      } else if (tok.rfind("w=", 0) == 0) {
        t.width_nm = parse_length_nm(tokens[i], lineno);
        have_w = true;
      } else if (tok.rfind("l=", 0) == 0) {
        t.length_nm = parse_length_nm(tokens[i], lineno);
        have_l = true;
      } else {
        throw Error(ErrorCode::SyntaxError,
                    "unexpected token '" + tokens[i].text + "' on device card", lineno,
                    tokens[i].col);
      }
    }
    if (!have_w || !have_l) {
      throw Error(ErrorCode::SyntaxError, "device card requires W= and L=", lineno,
                  tokens[0].col);
    }
    if (t.width_nm <= 0 || t.length_nm <= 0) {
      throw Error(ErrorCode::SyntaxError,
                  "device '" + t.name + "' needs positive W and L", lineno,
                  tokens[0].col);
    }
    if (options_.validate_sizing) check_sizing(t, options_.sizing, lineno);
    nl.add_transistor(std::move(t));
  }

  double parse_length_nm(const Token& token, int lineno) {
    try {
      return units::parse_si(token.text.substr(2)) * 1e9;
    } catch (const Error& e) {
      throw Error(ErrorCode::SyntaxError, e.raw_message(), lineno, token.col);
    }
  }

  void parse_capacitor(Netlist& nl, const std::vector<Token>& tokens, int lineno) {
    // C<name> <netA> <netB> <val>
    if (tokens.size() != 4) {
      throw Error(ErrorCode::SyntaxError, "capacitor card needs: C<name> a b <value>",
                  lineno, tokens[0].col);
    }
    Capacitor c;
    c.name = lower(tokens[0].text);
    c.net_a = nl.net(tokens[1].text);
    c.net_b = nl.net(tokens[2].text);
    double farads;
    try {
      farads = units::parse_si(tokens[3].text);
    } catch (const Error& e) {
      throw Error(ErrorCode::SyntaxError, e.raw_message(), lineno, tokens[3].col);
    }
    c.value_ff = farads * 1e15;
    if (c.value_ff < 0) {
      throw Error(ErrorCode::SyntaxError, "capacitor '" + c.name + "' must be >= 0",
                  lineno, tokens[3].col);
    }
    nl.add_capacitor(std::move(c));
  }

  void parse_instance(Netlist& nl, const std::vector<Token>& tokens, int lineno) {
    // X<name> <nets...> <subckt>
    if (tokens.size() < 2) {
      throw Error(ErrorCode::SyntaxError,
                  "instance card needs: X<name> <nets...> <subckt>", lineno,
                  tokens[0].col);
    }
    Instance inst;
    inst.name = lower(tokens[0].text);
    inst.subckt = lower(tokens.back().text);
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
      inst.connections.push_back(nl.net(tokens[i].text));
    }
    nl.add_instance(std::move(inst));
  }

  const ParseOptions& options_;
};

}  // namespace

Netlist parse_netlist(std::string_view text, const ParseOptions& options) {
  return Parser(options).run(text);
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

std::string device_card(const Netlist& nl, const Transistor& t) {
  std::string out = t.name;
  out += " " + nl.net_name(t.drain);
  out += " " + nl.net_name(t.gate);
  out += " " + nl.net_name(t.source);
  out += " " + nl.net_name(t.body);
  out += t.kind == DeviceKind::Nmos ? " NMOS" : " PMOS";
  out += " W=" + units::format_number(t.width_nm) + "n";
  out += " L=" + units::format_number(t.length_nm) + "n";
  if (t.weak) out += " WEAK";
  return out;
}

void serialize_body(const Netlist& nl, std::string& out) {
  std::vector<std::string> names;

  for (NetKind kind : {NetKind::Input, NetKind::Output}) {
    names.clear();
    for (const Net& n : nl.nets()) {
      if (n.kind == kind) names.push_back(n.name);
    }
    if (!names.empty()) {
      std::sort(names.begin(), names.end());
      out += kind == NetKind::Input ? ".input" : ".output";
      for (const std::string& n : names) out += " " + n;
      out += "\n";
    }
  }

  std::vector<const Transistor*> devs;
  for (const Transistor& t : nl.transistors()) devs.push_back(&t);
  std::sort(devs.begin(), devs.end(),
            [](auto* a, auto* b) { return a->name < b->name; });
  for (const Transistor* t : devs) out += device_card(nl, *t) + "\n";

  std::vector<const Capacitor*> caps;
  for (const Capacitor& c : nl.capacitors()) caps.push_back(&c);
  std::sort(caps.begin(), caps.end(),
            [](auto* a, auto* b) { return a->name < b->name; });
  for (const Capacitor* c : caps) {
    out += c->name + " " + nl.net_name(c->net_a) + " " + nl.net_name(c->net_b) + " " +
           units::format_number(c->value_ff) + "f\n";
  }

  // std::map keeps subcircuits name-sorted already.
  for (const auto& [name, sub] : nl.subcircuits()) {
    out += ".subckt " + name;
    for (const std::string& p : sub.ports) out += " " + p;
    out += "\n";
    if (sub.body) serialize_body(*sub.body, out);
    out += ".ends\n";
  }

  std::vector<const Instance*> insts;
  for (const Instance& i : nl.instances()) insts.push_back(&i);
  std::sort(insts.begin(), insts.end(),
            [](auto* a, auto* b) { return a->name < b->name; });
  for (const Instance* i : insts) {
    out += i->name;
    for (NetId id : i->connections) out += " " + nl.net_name(id);
    out += " " + i->subckt + "\n";
  }
}

}  // namespace

std::string serialize_netlist(const Netlist& n) {
  std::string out = "* swsim netlist\n";
  serialize_body(n, out);
  return out;
}

// ---------------------------------------------------------------------------
// Flatten

namespace {

void expand_into(Netlist& flat, const Netlist& src,
                 const std::map<std::string, Subcircuit>& subckt_scope,
                 const std::string& prefix,
                 const std::unordered_map<std::string, NetId>& port_binding) {
  auto map_net = [&](NetId id) -> NetId {
    const Net& n = src.net_info(id);
    if (n.kind == NetKind::Supply) return flat.vdd();
    if (n.kind == NetKind::Ground) return flat.gnd();
    auto it = port_binding.find(n.name);
    if (it != port_binding.end()) return it->second;
    NetId mapped = flat.net(prefix + n.name);
    if (prefix.empty()) flat.set_net_kind(mapped, n.kind);
    return mapped;
  };

  for (const Transistor& t : src.transistors()) {
    Transistor copy = t;
    copy.name = prefix + t.name;
    copy.drain = map_net(t.drain);
    copy.gate = map_net(t.gate);
    copy.source = map_net(t.source);
    copy.body = map_net(t.body);
    flat.add_transistor(std::move(copy));
  }
  for (const Capacitor& c : src.capacitors()) {
    Capacitor copy = c;
    copy.name = prefix + c.name;
    copy.net_a = map_net(c.net_a);
    copy.net_b = map_net(c.net_b);
    flat.add_capacitor(std::move(copy));
  }
  for (const Instance& inst : src.instances()) {
    // Inner subcircuit definitions shadow outer ones.
    auto resolve = [&]() -> const Subcircuit* {
      auto it = src.subcircuits().find(inst.subckt);
      if (it != src.subcircuits().end()) return &it->second;
      auto sit = subckt_scope.find(inst.subckt);
      if (sit != subckt_scope.end()) return &sit->second;
      return nullptr;
    };
    const Subcircuit* sub = resolve();
    if (!sub || !sub->body) {
      throw Error(ErrorCode::DanglingNet,
                  "instance '" + inst.name + "' references unknown subcircuit '" +
                      inst.subckt + "'");
    }
    std::unordered_map<std::string, NetId> binding;
    for (std::size_t i = 0; i < sub->ports.size(); ++i) {
      binding[sub->ports[i]] = map_net(inst.connections[i]);
    }
    std::map<std::string, Subcircuit> inner_scope = subckt_scope;
    for (const auto& [name, s] : src.subcircuits()) inner_scope[name] = s;
    expand_into(flat, *sub->body, inner_scope, prefix + inst.name + ".", binding);
  }
}

}  // namespace

Netlist flatten(const Netlist& n) {
  n.validate(nullptr);  // covers RecursiveSubcircuit before expansion
  if (n.is_flat() && n.subcircuits().empty()) {
    Netlist copy = n;
    copy.finalize();
    return copy;
  }
  Netlist flat;
  // Pre-create top-level nets in declaration order so ids stay stable.
  for (const Net& net : n.nets()) {
    if (net.kind == NetKind::Supply || net.kind == NetKind::Ground) continue;
    NetId id = flat.net(net.name);
    flat.set_net_kind(id, net.kind);
  }
  expand_into(flat, n, {}, "", {});
  flat.finalize();
  return flat;
}

int count_clocked_transistors(const Netlist& n, const std::set<NetId>& clock_nets) {
  int count = 0;
  for (const Transistor& t : n.transistors()) {
    if (clock_nets.count(t.gate)) ++count;
  }
  return count;
}

bool structurally_equal(const Netlist& a, const Netlist& b) {
  return serialize_netlist(a) == serialize_netlist(b);
}

}  // namespace swsim
