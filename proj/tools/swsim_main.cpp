#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swsim/behavioral.hpp"
#include "swsim/cells.hpp"
#include "swsim/characterize.hpp"
#include "swsim/config.hpp"
#include "swsim/engine.hpp"
#include "swsim/error.hpp"
#include "swsim/metrics.hpp"
#include "swsim/netlist.hpp"
#include "swsim/stimulus.hpp"
#include "swsim/testbench.hpp"
#include "swsim/trace.hpp"
#include "swsim/units.hpp"
#include "swsim/vcd.hpp"
#include "swsim/verify.hpp"

namespace {

using namespace swsim;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

struct SimulateArgs {
  std::string cell;
  std::string netlist_path;
  std::string stimulus_path;
  std::string testbench;
  std::string out_path = "out.vcd";
  std::string config_path;
  std::string vdd;
  std::string duration;
  std::string resolution;
};

struct LoadedRun {
  Netlist netlist;  // flat, finalized
  Stimulus stimulus;
  SimConfig config;
};

LoadedRun load_run(const SimulateArgs& args) {
  LoadedRun run;
  std::optional<Cell> cell;
  if (!args.cell.empty()) {
    cell = build_cell(args.cell);
    run.netlist = cell->netlist;
  } else {
    Netlist parsed = parse_netlist(read_file(args.netlist_path));
    SizingRule sizing;
    parsed.validate(&sizing);
    run.netlist = flatten(parsed);
  }

  if (!args.config_path.empty()) {
    run.config = parse_sim_config(read_file(args.config_path));
  }

  if (!args.testbench.empty()) {
    if (!cell) {
      throw Error(ErrorCode::BadArgument,
                  "--testbench drives a built-in cell; use --cell");
    }
    TestbenchSpec tb = builtin_testbench(args.testbench);
    apply_load(tb, *cell);
    run.netlist = cell->netlist;
    run.stimulus = make_stimulus(tb, *cell);
    run.config.vdd_v = tb.vdd_v;
    run.config.duration_ps = tb.duration_ps;
  } else {
    run.stimulus = parse_stimulus(read_file(args.stimulus_path));
  }

  if (!args.vdd.empty()) run.config.vdd_v = units::parse_volt(args.vdd);
  if (!args.duration.empty()) {
    run.config.duration_ps = units::parse_time_ps(args.duration);
  }
  if (!args.resolution.empty()) {
    run.config.resolution_ps = units::parse_time_ps(args.resolution);
  }
  return run;
}

int cmd_simulate(const SimulateArgs& args) {
  LoadedRun loaded = load_run(args);
  Trace trace = run(loaded.netlist, loaded.stimulus, loaded.config);
  write_file(args.out_path, write_vcd(trace, loaded.netlist,
                                      loaded.config.resolution_ps));

  std::cout << "net toggles over " << loaded.config.duration_ps << " ps:\n";
  long long total = 0;
  for (NetId id = 0; id < loaded.netlist.net_count(); ++id) {
    int t = trace.total_toggles(id);
    total += t;
    std::cout << "  " << loaded.netlist.net_name(id) << " " << t << "\n";
  }
  std::cout << "total toggles: " << total << "\n";
  std::cout << "wrote " << args.out_path << "\n";
  return 0;
}

int cmd_characterize(const std::string& cell_name, const std::string& tb_name,
                     const std::string& freq) {
  Cell cell = build_cell(cell_name);
  TestbenchSpec tb = builtin_testbench(tb_name);
  if (!freq.empty()) tb.clock_freq_hz = units::parse_freq_hz(freq);

  CharacterizeResult res = characterize_cell(cell, tb);
  Comparison cmp = build_comparison({res.row});
  std::cout << format_comparison_table(cmp);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", res.clock_network_power_uw);
  std::cout << "clock-network power: " << buf << " uW over ["
            << res.window_begin_ps << ", " << res.window_end_ps << ") ps\n";
  return 0;
}

int cmd_verify(const std::string& cell_name, const VerifyOptions& options) {
  Cell cell = build_cell(cell_name);
  VerifyResult res = verify_cell(cell, options);

  if (res.passed) {
    if (options.exhaustive_bits > 0) {
      std::cout << "exhaustive " << options.exhaustive_bits
                << "-edge sweep vs behavioral " << options.oracle << ": all "
                << (1ull << options.exhaustive_bits) << " sequences pass ("
                << res.edges_checked << " edges)\n";
    } else {
      std::cout << "checked " << res.edges_checked
                << " random edges vs behavioral " << options.oracle
                << ": PASS\n";
    }
    return 0;
  }

  for (const Mismatch& m : res.mismatches) {
    std::cout << "mismatch at edge " << m.edge_index << " (t=" << m.edge_time_ps
              << " ps): expected " << logic_char(m.expected) << ", got "
              << logic_char(m.got);
    if (options.exhaustive_bits > 0) {
      std::cout << " [sequence " << m.sequence << "]";
    }
    std::cout << "\n";
  }
  const Mismatch& first = res.mismatches.front();
  std::vector<NetId> nets;
  for (const std::string& name : {cell.clock_input, cell.data_input}) {
    if (auto id = cell.netlist.find_net(name)) nets.push_back(*id);
  }
  nets.push_back(cell.ports.out);
  std::cout << "waveform around the first mismatch:\n";
  std::cout << vcd_excerpt(res.trace, cell.netlist, nets,
                           first.edge_time_ps - 2 * res.edge_spacing_ps,
                           first.edge_time_ps + res.edge_spacing_ps);
  std::cout << "FAIL: " << res.mismatches.size()
            << (res.mismatches.size() >= 8 ? "+" : "") << " mismatches over "
            << res.edges_checked << " edges\n";
  return 1;
}

int cmd_compare(const std::string& table, const std::string& rows_path,
                bool csv) {
  std::vector<MetricsRow> rows;
  if (!table.empty()) {
    if (table != "paper") {
      throw Error(ErrorCode::BadArgument,
                  "unknown table '" + table + "' (expected: paper)");
    }
    rows = reference_rows();
  } else {
    rows = parse_rows_csv(read_file(rows_path));
  }
  Comparison cmp = build_comparison(rows);
  std::cout << (csv ? comparison_csv(cmp) : format_comparison_table(cmp));
  return 0;
}

int cmd_dump_cell(const std::string& name) {
  Cell cell = build_cell(name);
  std::cout << serialize_netlist(cell.netlist);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "swsim: switch-level transistor netlist simulator and flip-flop "
      "characterization tool"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  CLI::App* sim = app.add_subcommand(
      "simulate", "Run a netlist against stimulus and write a VCD waveform");
  auto* sim_cell =
      sim->add_option("--cell", sim_args.cell, "Built-in cell name");
  auto* sim_net =
      sim->add_option("--netlist", sim_args.netlist_path, "Netlist file");
  auto* sim_stim =
      sim->add_option("--stimulus", sim_args.stimulus_path, "Stimulus file");
  auto* sim_tb = sim->add_option("--testbench", sim_args.testbench,
                                 "Built-in testbench name");
  sim->add_option("--out", sim_args.out_path, "VCD output path")
      ->capture_default_str();
  sim->add_option("--config", sim_args.config_path, "Simulator config file");
  sim->add_option("--vdd", sim_args.vdd, "Supply voltage override (e.g. 1.8V)");
  sim->add_option("--duration", sim_args.duration,
                  "Simulated time override (e.g. 120ns)");
  sim->add_option("--resolution", sim_args.resolution,
                  "Time quantum override (e.g. 1ps)");
  sim_cell->excludes(sim_net);
  sim_stim->excludes(sim_tb);

  std::string ch_cell, ch_tb = "paper-sec3", ch_freq;
  CLI::App* ch = app.add_subcommand(
      "characterize", "Measure power, clk-to-Q delay and PDP of a cell");
  ch->add_option("--cell", ch_cell, "Built-in cell name")->required();
  ch->add_option("--testbench", ch_tb, "Built-in testbench name")
      ->capture_default_str();
  ch->add_option("--freq", ch_freq, "Clock frequency override (e.g. 62.5MHz)");

  std::string v_cell, v_oracle;
  VerifyOptions v_opts;
  CLI::App* ver = app.add_subcommand(
      "verify", "Compare a cell against a behavioral flip-flop reference");
  ver->add_option("--cell", v_cell, "Built-in cell name")->required();
  ver->add_option("--oracle", v_oracle, "Reference model: setff or detff")
      ->required();
  ver->add_option("--cycles", v_opts.cycles, "Random edges to check")
      ->capture_default_str();
  ver->add_option("--seed", v_opts.seed, "Random seed")->capture_default_str();
  ver->add_option("--exhaustive", v_opts.exhaustive_bits,
                  "Check every data sequence of this many edges instead");

  std::string cmp_table, cmp_rows;
  bool cmp_csv = false;
  CLI::App* cmp = app.add_subcommand(
      "compare", "Print a comparison table over cell metrics rows");
  auto* cmp_table_opt = cmp->add_option(
      "--table", cmp_table, "Built-in reference table name (paper)");
  auto* cmp_rows_opt =
      cmp->add_option("--rows", cmp_rows, "CSV file of metrics rows");
  cmp->add_flag("--csv", cmp_csv, "Emit CSV instead of aligned text");
  cmp_table_opt->excludes(cmp_rows_opt);

  std::string dump_name;
  CLI::App* dump =
      app.add_subcommand("dump-cell", "Print a built-in cell netlist");
  dump->add_option("name", dump_name, "Built-in cell name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      if (sim_args.cell.empty() == sim_args.netlist_path.empty()) {
        throw Error(ErrorCode::BadArgument,
                    "give exactly one of --cell or --netlist");
      }
      if (sim_args.stimulus_path.empty() == sim_args.testbench.empty()) {
        throw Error(ErrorCode::BadArgument,
                    "give exactly one of --stimulus or --testbench");
      }
      return cmd_simulate(sim_args);
    }
    if (ch->parsed()) return cmd_characterize(ch_cell, ch_tb, ch_freq);
    if (ver->parsed()) {
      v_opts.oracle = v_oracle;
      return cmd_verify(v_cell, v_opts);
    }
    if (cmp->parsed()) {
      if (cmp_table.empty() == cmp_rows.empty()) {
        throw Error(ErrorCode::BadArgument,
                    "give exactly one of --table or --rows");
      }
      return cmd_compare(cmp_table, cmp_rows, cmp_csv);
    }
    if (dump->parsed()) return cmd_dump_cell(dump_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
