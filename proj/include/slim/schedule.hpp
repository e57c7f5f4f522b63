//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slim/array.hpp"
#include "slim/netlist.hpp"

namespace slim {

/// A netlist mapped onto (cycle, cell) slots. Cycles are the ASAP levels;
/// every node gets its own cell, spread round-robin across banks and Mats.
/// cycle_reads lists which earlier nodes are read and latched at the
/// periphery before each cycle starts, feeding that cycle's gate drives.
struct Schedule {
  NorNetlist netlist;
  int cycles = 0;
  std::vector<int> node_cycle;                 // 1-based
  std::vector<Address> node_addr;
  std::vector<std::vector<int>> cycle_nodes;   // [cycle-1] -> node ids
  std::vector<std::vector<int>> cycle_reads;   // [cycle-1] -> node ids to latch
};

/// ASAP scheduling with round-robin placement. Throws CapacityExceeded when
/// one level needs more cells than the per-cycle capacity or the netlist does
/// not fit in the array.
Schedule make_schedule(const NorNetlist& netlist, const ArrayGeometry& geometry);

/// Runs the schedule on the array: per cycle, latch the routed node values,
/// then drive each scheduled cell through the logic primitive. Output bits
/// are read back from the cells. Memory bits of all touched cells are
/// preserved.
std::vector<int> execute(const Schedule& s, SlimArray& array, std::span<const int> inputs);

/// Read events one execute() incurs: one intelligent read per node, the
/// per-cycle routing latches, and one read per netlist output.
std::uint64_t execute_read_count(const Schedule& s);

std::string to_text(const Schedule& s);

}  // namespace slim
