//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/perf.hpp"

#include <doctest.h>

#include <array>

#include "slim/errors.hpp"
#include "slim/schedule.hpp"

using namespace slim;

namespace {

constexpr std::array<GateKind, 9> kAllGates = {
    GateKind::Not,  GateKind::Nor,  GateKind::Or,        GateKind::And,      GateKind::Nand,
    GateKind::Xor,  GateKind::Xnor, GateKind::HalfAdder, GateKind::FullAdder};

// Independent recount: run every input combination on a real array with all
// cells refreshed to logic '1' and count the actual level changes from the
// pulse log, excluding restore pulses.
double recount_switch_events(const NorNetlist& n) {
  SlimArray array;
  const Schedule s = make_schedule(n, array.geometry());
  const std::size_t k = n.inputs.size();
  std::uint64_t events = 0;
  for (unsigned combo = 0; combo < (1u << k); ++combo) {
    std::vector<int> in(k);
    for (std::size_t i = 0; i < k; ++i) in[i] = (combo >> i) & 1u;
    // Restore every cell the schedule touches to an absolute state.
    for (const Address& addr : s.node_addr) {
      array.refresh_row(addr.bank, addr.mat, addr.row);
    }
    array.reset_stats();
    execute(s, array, in);
    const ArrayStats st = array.stats();
    CHECK(st.refresh_switches == 0);  // cells started absolute
    events += st.logic_switches;
  }
  return static_cast<double>(events) / static_cast<double>(1u << k);
}

}  // namespace

TEST_CASE("switch events for the library gates") {
  CHECK(average_switch_events(netlist_for(GateKind::And)) == doctest::Approx(1.75));
  CHECK(average_switch_events(netlist_for(GateKind::Xor)) == doctest::Approx(3.0));
  CHECK(average_switch_events(netlist_for(GateKind::Nor)) == doctest::Approx(0.75));
  CHECK(average_switch_events(netlist_for(GateKind::Or)) == doctest::Approx(1.0));
  CHECK(average_switch_events(netlist_for(GateKind::Nand)) == doctest::Approx(2.0));
  CHECK(average_switch_events(netlist_for(GateKind::Xnor)) == doctest::Approx(2.5));
  CHECK(average_switch_events(netlist_for(GateKind::HalfAdder)) == doctest::Approx(3.0));
  CHECK(average_switch_events(netlist_for(GateKind::FullAdder)) == doctest::Approx(6.0));
}

TEST_CASE("switch events agree with the array recount for every library gate") {
  for (const GateKind g : kAllGates) {
    const NorNetlist n = netlist_for(g);
    CHECK_MESSAGE(average_switch_events(n) == recount_switch_events(n), "gate " << name(g));
  }
}

TEST_CASE("switch events agree with the array recount for arithmetic blocks") {
  const NorNetlist add2 = build_ripple_adder(2);
  CHECK(average_switch_events(add2) == recount_switch_events(add2));
  const NorNetlist mul2 = build_csa_multiplier(2);
  CHECK(average_switch_events(mul2) == recount_switch_events(mul2));
}

TEST_CASE("including refresh doubles the event count") {
  for (const GateKind g : {GateKind::And, GateKind::FullAdder}) {
    const NorNetlist n = netlist_for(g);
    CHECK(average_switch_events(n, true) == doctest::Approx(2 * average_switch_events(n)));
  }
}

TEST_CASE("adding a node never decreases the switch event count") {
  for (const GateKind g : kAllGates) {
    NorNetlist n = netlist_for(g);
    const double before = average_switch_events(n);
    // Append an inverter on the first output.
    n.nodes.push_back({n.outputs[0], n.outputs[0], std::nullopt});
    CHECK(average_switch_events(n) >= before);
  }
}

TEST_CASE("the switch event model rejects wide netlists") {
  NetlistBuilder b("wide");
  Signal last = b.input("i0");
  for (int i = 1; i < 21; ++i) last = b.nor(last, b.input("i" + std::to_string(i)));
  b.output(last);
  const NorNetlist n = b.take();
  CHECK_THROWS_AS(average_switch_events(n), SlimError);
}

TEST_CASE("latency cycles") {
  CHECK(latency_cycles(netlist_for(GateKind::Nor)) == 1);
  CHECK(latency_cycles(netlist_for(GateKind::Nand)) == 3);
  // A pass-through netlist has no cell ops and zero latency.
  NetlistBuilder b("wire");
  b.output(b.input("a"));
  CHECK(latency_cycles(b.take()) == 0);
}

TEST_CASE("read model matches the array's read counter") {
  SlimArray array;
  for (const GateKind g : {GateKind::Xor, GateKind::FullAdder}) {
    const NorNetlist n = netlist_for(g);
    const Schedule s = make_schedule(n, array.geometry());
    array.reset_stats();
    const std::vector<int> in(n.inputs.size(), 1);
    execute(s, array, in);
    CHECK(array.stats().reads == execute_read_count(s));
  }
  const NorNetlist mul4 = build_csa_multiplier(4);
  const Schedule s = make_schedule(mul4, array.geometry());
  array.reset_stats();
  const std::vector<int> in(8, 1);
  execute(s, array, in);
  CHECK(array.stats().reads == execute_read_count(s));
}

TEST_CASE("empty workload gives a zero report") {
  SobelWorkload w;
  w.op_count = 0;
  const EdpReport r = slim_workload_edp(w, SlimPerfParams{}, BusParams{});
  CHECK(r.overall.edp_pj_s == 0.0);
  CHECK(r.overall.energy_pj == 0.0);
  const EdpReport c = cpu_workload_edp(w, CpuPerfParams{}, BusParams{});
  CHECK(c.overall.edp_pj_s == 0.0);
}

TEST_CASE("edp reports are category-additive") {
  const EdpReport r = slim_workload_edp(SobelWorkload{}, SlimPerfParams{}, BusParams{});
  CHECK(r.overall.edp_pj_s ==
        doctest::Approx(r.data_transfer.edp_pj_s + r.compute.edp_pj_s).epsilon(1e-12));
  CHECK(r.overall.energy_pj ==
        doctest::Approx(r.data_transfer.energy_pj + r.compute.energy_pj).epsilon(1e-12));
  const EdpReport c = cpu_workload_edp(SobelWorkload{}, CpuPerfParams{}, BusParams{});
  CHECK(c.overall.edp_pj_s ==
        doctest::Approx(c.data_transfer.edp_pj_s + c.compute.edp_pj_s).epsilon(1e-12));
}

TEST_CASE("energy and latency are linear in the op count") {
  SobelWorkload w;
  const EdpReport r1 = slim_workload_edp(w, SlimPerfParams{}, BusParams{});
  w.op_count *= 2;
  const EdpReport r2 = slim_workload_edp(w, SlimPerfParams{}, BusParams{});
  CHECK(r2.compute.energy_pj == doctest::Approx(2 * r1.compute.energy_pj));
  CHECK(r2.compute.latency_s == doctest::Approx(2 * r1.compute.latency_s));
  CHECK(r2.data_transfer.energy_pj == doctest::Approx(2 * r1.data_transfer.energy_pj));
}

TEST_CASE("doubling the parallel capacity halves latency and EDP") {
  SlimPerfParams p;
  const EdpReport r1 = slim_workload_edp(SobelWorkload{}, p, BusParams{});
  p.geometry.banks *= 2;  // capacity 128 -> 256, batch counts stay integral
  const EdpReport r2 = slim_workload_edp(SobelWorkload{}, p, BusParams{});
  CHECK(r2.compute.energy_pj == doctest::Approx(r1.compute.energy_pj));
  CHECK(r2.compute.latency_s == doctest::Approx(r1.compute.latency_s / 2));
  CHECK(r2.compute.edp_pj_s == doctest::Approx(r1.compute.edp_pj_s / 2));
}

TEST_CASE("shipped defaults reproduce the reference ratios") {
  const KvMap kv = parse_kv_text(default_config_text());
  const SobelWorkload w = workload_from(kv);
  const SlimPerfParams slim = slim_params_from(kv);
  const BusParams bus = bus_params_from(kv);
  const CpuPerfParams cpu = cpu_params_from(kv);

  const EdpReport s = slim_workload_edp(w, slim, bus);
  const EdpReport c = cpu_workload_edp(w, cpu, bus);
  const EdpReference& ref = reference_edp();

  const double dt_ratio = c.data_transfer.edp_pj_s / s.data_transfer.edp_pj_s;
  const double overall_ratio = c.overall.edp_pj_s / s.overall.edp_pj_s;
  CHECK(dt_ratio == doctest::Approx(ref.ratio_data_transfer).epsilon(0.05));
  CHECK(overall_ratio == doctest::Approx(ref.ratio_overall).epsilon(0.05));
  // The model-derived side stays inside the wide acceptance window.
  CHECK(s.overall.edp_pj_s > 0.5 * ref.slim_overall);
  CHECK(s.overall.edp_pj_s < 1.5 * ref.slim_overall);
  CHECK(s.data_transfer.edp_pj_s == doctest::Approx(ref.slim_data_transfer).epsilon(0.01));
}

TEST_CASE("a config missing a per-op parameter names the key") {
  KvMap kv = parse_kv_text(default_config_text());
  kv.erase("cpu_imul_energy_pj");
  try {
    cpu_params_from(kv);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("cpu_imul_energy_pj") != std::string::npos);
  }
}

TEST_CASE("parameter validation") {
  SlimPerfParams p;
  p.switching_energy_pj = 0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  CpuPerfParams c;
  c.load_energy_pj = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  BusParams b;
  b.width_bits = 0;
  CHECK_THROWS_AS(b.validate(), ConfigError);
}

TEST_CASE("report rendering carries all three categories") {
  const EdpReport s = slim_workload_edp(SobelWorkload{}, SlimPerfParams{}, BusParams{});
  const EdpReport c = cpu_workload_edp(SobelWorkload{}, CpuPerfParams{}, BusParams{});
  const std::string json = comparison_json(c, s);
  CHECK(json.find("\"cpu_dram\"") != std::string::npos);
  CHECK(json.find("\"slim\"") != std::string::npos);
  CHECK(json.find("\"ratio\"") != std::string::npos);
  const std::string text = comparison_text(c, s);
  CHECK(text.find("data transfer") != std::string::npos);
  CHECK(text.find("ratio") != std::string::npos);
  CHECK(to_json(s).find("\"overall\"") != std::string::npos);
}
