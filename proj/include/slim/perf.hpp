//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "slim/array.hpp"
#include "slim/config.hpp"
#include "slim/netlist.hpp"

namespace slim {

/// SLIM-side device and organization parameters.
struct SlimPerfParams {
  double switching_energy_pj = 10.0;
  double read_energy_pj = 0.25;
  double switching_latency_s = 10e-9;
  ArrayGeometry geometry{};
  int pipeline_depth = 8;
  bool include_refresh_events = false;

  void validate() const;
};

/// The memory bus both systems sit behind. Beat energy and latency are
/// calibrated defaults, not device measurements.
struct BusParams {
  int width_bits = 128;
  double energy_pj_per_beat = 0.512695;
  double latency_s_per_beat = 5e-9;

  void validate() const;
};

/// CPU instruction costs. The cycle counts are nominal for the modeled core;
/// the per-op energies are calibration constants chosen so the shipped
/// defaults reproduce the published comparison point, and are labeled as such
/// in reports.
struct CpuPerfParams {
  double clock_hz = 3.3e9;
  double imul_cycles = 3;
  double add_cycles = 1;
  double load_cycles = 4;
  double store_cycles = 1;
  double imul_energy_pj = 8833.75;
  double add_energy_pj = 2944.58;
  double load_energy_pj = 11778.34;
  double store_energy_pj = 2944.58;
  double miss_rate = 0.001;
  double miss_latency_cycles = 68.44;
  double miss_energy_pj = 0.25;

  void validate() const;
};

/// One convolution workload: op_count stencil ops, each expanded to the
/// stated multiply and add counts at the given operand width. result_bits is
/// what each op ships back over the bus.
struct SobelWorkload {
  std::uint64_t op_count = 4096;
  int muls_per_op = 9;
  int adds_per_op = 9;
  int operand_bits = 4;
  int result_bits = 8;
  int cpu_operand_bits = 8;

  void validate() const;
};

struct EdpCategory {
  double energy_pj = 0;
  double latency_s = 0;
  double edp_pj_s = 0;
};

struct EdpReport {
  EdpCategory data_transfer;
  EdpCategory compute;
  EdpCategory overall;  // category-wise sums
};

/// Average state-transition events per op of the netlist over all input
/// combinations, with every cell starting refreshed at logic '1'. A node
/// switches exactly when it evaluates to 0. The refresh flag also counts the
/// one restore each switched cell later receives.
double average_switch_events(const NorNetlist& n, bool include_refresh = false);

/// Levels of the computation graph.
int latency_cycles(const NorNetlist& n);

/// Energy, latency and EDP of running the workload inside the SLIM array.
/// Multiplies and adds run as compiled netlists batched at the array's
/// parallel capacity for the operand width; only result words travel back
/// over the bus.
EdpReport slim_workload_edp(const SobelWorkload& w, const SlimPerfParams& p, const BusParams& bus);

/// CPU+DRAM baseline: per op 9 IMUL, 9 ADD, 18 LOAD, 9 STORE, operands and
/// results moved over the bus, cache-miss penalties applied at the
/// configured rate.
EdpReport cpu_workload_edp(const SobelWorkload& w, const CpuPerfParams& p, const BusParams& bus);

// -- Reference comparison figures for reports ------------------------------

struct GateFigures {
  GateKind gate;
  int ref_cells;
  double ref_energy;   // normalized energy per op
  double ref_latency;  // normalized latency
};

std::span<const GateFigures> reference_gate_table();

struct EdpReference {
  double cpu_data_transfer, cpu_compute, cpu_overall;
  double slim_data_transfer, slim_compute, slim_overall;
  double ratio_data_transfer, ratio_compute, ratio_overall;
};

const EdpReference& reference_edp();

// -- Report rendering ------------------------------------------------------

std::string to_json(const EdpReport& r);
std::string comparison_text(const EdpReport& cpu, const EdpReport& slim);
std::string comparison_json(const EdpReport& cpu, const EdpReport& slim);

// -- Config plumbing -------------------------------------------------------

SlimPerfParams slim_params_from(const KvMap& kv);
BusParams bus_params_from(const KvMap& kv);
CpuPerfParams cpu_params_from(const KvMap& kv);
SobelWorkload workload_from(const KvMap& kv);
ArrayGeometry geometry_from(const KvMap& kv);

/// The shipped defaults as a config file.
std::string default_config_text();

}  // namespace slim
