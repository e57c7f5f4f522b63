//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-cell pulse and logic experiments, array
// word ops, netlist compilation, gate figures, the edge-detection case study
// and the EDP comparison table.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "slim/array.hpp"
#include "slim/config.hpp"
#include "slim/errors.hpp"
#include "slim/image.hpp"
#include "slim/netlist.hpp"
#include "slim/perf.hpp"
#include "slim/schedule.hpp"
#include "slim/sobel.hpp"

namespace {

using namespace slim;

KvMap effective_config(const std::string& path) {
  KvMap kv = parse_kv_text(default_config_text());
  if (!path.empty()) kv = load_kv_file(path);
  return kv;
}

SlimArray load_or_create_array(const std::string& path, const KvMap& kv) {
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open array file: " + path);
    return SlimArray::load(in);
  }
  return SlimArray(geometry_from(kv));
}

void save_array(const SlimArray& array, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write array file: " + path);
  array.dump(out);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write: " + path);
  out << text;
}

int run_pulse(const KvMap& kv, const std::string& state_text, const std::string& sequence,
              bool analog) {
  const auto start = parse_level(state_text);
  if (!start) throw ConfigError("bad state '" + state_text + "', expected 11/10/01/00");
  std::vector<PulseKind> kinds;
  std::istringstream seq(sequence);
  std::string tok;
  while (std::getline(seq, tok, ',')) {
    const auto kind = parse_pulse(tok);
    if (!kind) throw ConfigError("bad pulse '" + tok + "', expected P1/P2/P3");
    kinds.push_back(*kind);
  }
  SlimLevel s = *start;
  std::cout << label(s);
  for (const PulseKind kind : kinds) {
    s = apply_pulse(s, kind);
    std::cout << " -" << name(kind) << "-> " << label(s);
  }
  std::cout << "\n";
  std::cout << "memory=" << memory_bit(s) << " logic=" << logic_bit(s) << "\n";
  if (analog) {
    const AnalogConfig cfg = analog_config_from_kv(kv);
    std::mt19937_64 rng(cfg.seed);
    const double g = conductance_of(s, cfg, rng);
    char line[120];
    std::snprintf(line, sizeof(line), "read sample: %.4E S, decodes to '%s'\n", g,
                  std::string(label(decode_conductance(g, cfg))).c_str());
    std::cout << line;
  }
  return 0;
}

void print_word(const WordRead& r, int width) {
  auto bits = [width](std::uint64_t v) {
    std::string s;
    for (int i = width - 1; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
    return s;
  };
  std::cout << "memory=" << bits(r.memory) << " logic=" << bits(r.logic) << "\n";
}

NorNetlist netlist_by_name(const std::string& gate, int adder_width, int multiplier_width) {
  if (adder_width > 0) return build_ripple_adder(adder_width);
  if (multiplier_width > 0) return build_csa_multiplier(multiplier_width);
  const auto kind = parse_gate(gate);
  if (!kind) throw ConfigError("unknown gate '" + gate + "'");
  return netlist_for(*kind);
}

int run_gate_report(bool include_refresh) {
  std::cout << "gate      cells  cells(ref)  events  events(ref)  depth  depth(ref)  depth+1\n";
  for (const GateFigures& fig : reference_gate_table()) {
    const NorNetlist n = netlist_for(fig.gate);
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s  %5zu  %10d  %6.2f  %11.2f  %5d  %10.0f  %7d\n",
                  std::string(name(fig.gate)).c_str(), n.nodes.size(), fig.ref_cells,
                  average_switch_events(n, include_refresh), fig.ref_energy, n.depth(),
                  fig.ref_latency, n.depth() + 1);
    std::cout << line;
  }
  std::cout << "events: mean state transitions per op over all input combinations"
            << (include_refresh ? ", restore pulses included" : "") << "\n";
  std::cout << "depth+1: variant counting one extra read cycle per stage\n";
  return 0;
}

int run_edp(const KvMap& kv, const std::string& report_path, bool include_refresh) {
  const SobelWorkload w = workload_from(kv);
  SlimPerfParams slim = slim_params_from(kv);
  if (include_refresh) slim.include_refresh_events = true;
  const BusParams bus = bus_params_from(kv);
  const CpuPerfParams cpu = cpu_params_from(kv);
  const EdpReport s = slim_workload_edp(w, slim, bus);
  const EdpReport c = cpu_workload_edp(w, cpu, bus);
  std::cout << comparison_text(c, s);
  const EdpReference& ref = reference_edp();
  char line[160];
  std::snprintf(line, sizeof(line),
                "reference table: cpu overall %.2E, slim overall %.2E (pJ s)\n", ref.cpu_overall,
                ref.slim_overall);
  std::cout << line;
  if (!report_path.empty()) write_text(report_path, comparison_json(c, s));
  return 0;
}

int run_sobel(const KvMap& kv, const std::string& in_path, const std::string& out_path,
              const std::string& report_path, const std::string& kernel_text,
              const std::string& refresh_text, bool include_refresh, bool reference_only) {
  const auto variant = parse_kernel(kernel_text);
  if (!variant) throw ConfigError("bad kernel '" + kernel_text + "', expected gx/gy/both");

  const Image img8 = load_pgm(in_path);
  const Image img4 = quantize_4bit(img8);

  if (reference_only) {
    const Image out = sobel_reference(img4, *variant);
    if (!out_path.empty()) save_pgm(out, out_path);
    std::cout << "reference sobel: " << out.width << "x" << out.height << " written\n";
    return 0;
  }

  SlimPerfParams params = slim_params_from(kv);
  if (include_refresh) params.include_refresh_events = true;
  const BusParams bus = bus_params_from(kv);
  SlimArray array(params.geometry);
  if (refresh_text == "eager") {
    array.set_refresh_mode(RefreshMode::Eager);
  } else if (refresh_text != "lazy") {
    throw ConfigError("bad refresh mode '" + refresh_text + "', expected lazy/eager");
  }

  const SobelSlimResult result = sobel_slim(img4, *variant, array, params, bus);

  // The in-array result must agree with the host-side reference convolution.
  const Image want = sobel_reference(img4, *variant);
  if (result.image != want) {
    std::cerr << "error: in-array result deviates from the reference convolution\n";
    return 1;
  }

  if (!out_path.empty()) save_pgm(result.image, out_path);
  if (!report_path.empty()) write_text(report_path, to_json(result.report));
  std::cout << "sobel (" << name(*variant) << ", refresh " << name(array.refresh_mode())
            << ", zero-padded borders): " << result.image.width << "x" << result.image.height
            << ", matches reference\n";
  char line[200];
  std::snprintf(line, sizeof(line), "slim edp: %.4E pJ s (energy %.4E pJ, latency %.4E s)\n",
                result.report.overall.edp_pj_s, result.report.overall.energy_pj,
                result.report.overall.latency_s);
  std::cout << line;
  const ArrayStats st = array.stats();
  std::snprintf(line, sizeof(line),
                "simulated pulses: P1 %llu, P2 %llu, P3 %llu; reads %llu; "
                "switch events %llu logic / %llu refresh\n",
                (unsigned long long)st.p1, (unsigned long long)st.p2, (unsigned long long)st.p3,
                (unsigned long long)st.reads, (unsigned long long)st.logic_switches,
                (unsigned long long)st.refresh_switches);
  std::cout << line;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slimsim: behavioral simulator for simultaneous logic-in-memory arrays"};
  app.require_subcommand(1);
  app.fallthrough();  // parent options like --config may follow the subcommand

  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (defaults built in)");

  // pulse
  auto* pulse = app.add_subcommand("pulse", "apply a pulse sequence to one cell");
  std::string pulse_state = "01";
  std::string pulse_seq;
  pulse->add_option("--state", pulse_state, "initial state (11/10/01/00)");
  pulse->add_option("--seq", pulse_seq, "comma-separated pulses, e.g. P1,P3,P2")->required();
  bool pulse_analog = false;
  pulse->add_flag("--analog", pulse_analog, "sample one stochastic read of the final state");

  // write
  auto* write = app.add_subcommand("write", "memory-write a word at an address");
  std::string write_array, write_bits;
  int wb = 0, wm = 0, wr = 0, wc = 0;
  write->add_option("--array", write_array, "array state file (created when missing)");
  write->add_option("--bank", wb);
  write->add_option("--mat", wm);
  write->add_option("--row", wr);
  write->add_option("--col", wc);
  write->add_option("--bits", write_bits, "bit string, LSB last (e.g. 1010)")->required();

  // read
  auto* read = app.add_subcommand("read", "read a word's memory and logic planes");
  std::string read_array;
  int rb = 0, rm = 0, rr = 0, rc = 0, rwidth = 8;
  read->add_option("--array", read_array)->required();
  read->add_option("--bank", rb);
  read->add_option("--mat", rm);
  read->add_option("--row", rr);
  read->add_option("--col", rc);
  read->add_option("--width", rwidth);

  // logic
  auto* logic = app.add_subcommand("logic", "run a single-cell program scheme at an address");
  std::string logic_array, logic_op = "nor";
  int lb = 0, lm = 0, lr = 0, lc = 0, la = 0, lbop = 0;
  logic->add_option("--array", logic_array, "array state file (created when missing)");
  logic->add_option("--op", logic_op, "not_a|not_b|or|nor|and|nand");
  logic->add_option("--bank", lb);
  logic->add_option("--mat", lm);
  logic->add_option("--row", lr);
  logic->add_option("--col", lc);
  logic->add_option("-a", la, "operand a")->required();
  logic->add_option("-b", lbop, "operand b")->required();

  // compile
  auto* compile = app.add_subcommand("compile", "emit a netlist and its schedule");
  std::string compile_gate;
  int compile_adder = 0, compile_mul = 0;
  bool with_schedule = false;
  compile->add_option("--gate", compile_gate, "not|nor|or|and|nand|xor|xnor|ha|fa");
  compile->add_option("--adder", compile_adder, "ripple-carry adder of this width");
  compile->add_option("--multiplier", compile_mul, "carry-save multiplier of this width");
  compile->add_flag("--schedule", with_schedule, "also print the cycle/cell mapping");

  // gate-report
  auto* report = app.add_subcommand("gate-report", "library figures vs the reference column");
  std::string events_mode = "exclude-refresh";
  report->add_option("--events", events_mode, "exclude-refresh|include-refresh");

  // sobel
  auto* sobel = app.add_subcommand("sobel", "edge-detection case study on the simulated array");
  std::string sobel_in, sobel_out, sobel_report, sobel_kernel = "gx", sobel_refresh = "lazy";
  std::string sobel_events = "exclude-refresh";
  bool sobel_reference_only = false;
  sobel->add_option("--in", sobel_in, "input PGM (P2 or P5)")->required();
  sobel->add_option("--out", sobel_out, "output PGM path");
  sobel->add_option("--report", sobel_report, "EDP report JSON path");
  sobel->add_option("--kernel", sobel_kernel, "gx|gy|both");
  sobel->add_option("--refresh", sobel_refresh, "lazy|eager");
  sobel->add_option("--events", sobel_events, "exclude-refresh|include-refresh");
  sobel->add_flag("--reference", sobel_reference_only, "host-side reference convolution only");

  // edp
  auto* edp = app.add_subcommand("edp", "workload EDP comparison table");
  std::string edp_report, edp_events = "exclude-refresh";
  edp->add_option("--report", edp_report, "comparison JSON path");
  edp->add_option("--events", edp_events, "exclude-refresh|include-refresh");

  // config
  auto* config = app.add_subcommand("config", "print the built-in default config");

  CLI11_PARSE(app, argc, argv);

  try {
    const KvMap kv = effective_config(config_path);
    auto parse_events = [](const std::string& text) {
      if (text == "include-refresh") return true;
      if (text == "exclude-refresh") return false;
      throw ConfigError("bad events mode '" + text + "'");
    };

    if (pulse->parsed()) return run_pulse(kv, pulse_state, pulse_seq, pulse_analog);

    if (write->parsed()) {
      SlimArray array = load_or_create_array(write_array, kv);
      std::uint64_t bits = 0;
      for (const char c : write_bits) {
        if (c != '0' && c != '1') throw ConfigError("bad bit string: " + write_bits);
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
      }
      array.mem_write_word({wb, wm, wr, wc}, bits, static_cast<int>(write_bits.size()));
      save_array(array, write_array);
      std::cout << "wrote " << write_bits.size() << " bits at " << wb << "/" << wm << "/" << wr
                << "/" << wc << "\n";
      return 0;
    }

    if (read->parsed()) {
      if (!std::filesystem::exists(read_array)) {
        throw IoError("array file does not exist: " + read_array);
      }
      SlimArray array = load_or_create_array(read_array, kv);
      print_word(array.read_word({rb, rm, rr, rc}, rwidth), rwidth);
      save_array(array, read_array);
      return 0;
    }

    if (logic->parsed()) {
      SlimArray array = load_or_create_array(logic_array, kv);
      const auto op = parse_bool_op(logic_op);
      if (!op) throw ConfigError("unknown op '" + logic_op + "'");
      const int out = array.logic_op_at({lb, lm, lr, lc}, *op, la, lbop);
      std::cout << "output=" << out << " state=" << label(array.state_at({lb, lm, lr, lc}))
                << "\n";
      save_array(array, logic_array);
      return 0;
    }

    if (compile->parsed()) {
      const NorNetlist n = netlist_by_name(compile_gate, compile_adder, compile_mul);
      std::cout << to_text(n);
      if (with_schedule) std::cout << to_text(make_schedule(n, geometry_from(kv)));
      return 0;
    }

    if (report->parsed()) return run_gate_report(parse_events(events_mode));

    if (sobel->parsed()) {
      return run_sobel(kv, sobel_in, sobel_out, sobel_report, sobel_kernel, sobel_refresh,
                       parse_events(sobel_events), sobel_reference_only);
    }

    if (edp->parsed()) return run_edp(kv, edp_report, parse_events(edp_events));

    if (config->parsed()) {
      std::cout << default_config_text();
      return 0;
    }
  } catch (const SlimError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
