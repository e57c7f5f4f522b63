//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "slim/device.hpp"

namespace slim {

enum class Terminal : std::uint8_t { V1, V2 };

/// Operand routing for one programming step on the 2T-1R cell: the two access
/// transistor gates carry the operands, and pulse_condition says whether the
/// programming signal is actually asserted on the driven terminal. A gate
/// value of 1 models the transistor driven hard on (V_G = 10 V for RESET);
/// refresh drives both gates at compliance level (4 V).
struct GateDrive {
  int g1 = 0;
  int g2 = 0;
  int pulse_condition = 1;
  Terminal terminal = Terminal::V2;
};

/// Single-cell program schemes. Complements of the primary operands are
/// assumed available as peripheral drive signals.
enum class BoolOp : std::uint8_t { NotA, NotB, Or, Nor, And, Nand };

std::string_view name(BoolOp op);
std::optional<BoolOp> parse_bool_op(std::string_view text);

/// Gate and condition assignment realizing `op` on one cell.
GateDrive drive_for(BoolOp op, int a, int b);

/// Event counters for energy accounting. Switch events (level changes) are
/// split by what caused them.
struct CellStats {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t p3 = 0;
  std::uint64_t reads = 0;
  std::uint64_t logic_switches = 0;
  std::uint64_t write_switches = 0;
  std::uint64_t refresh_switches = 0;

  std::uint64_t pulses() const { return p1 + p2 + p3; }
  CellStats& operator+=(const CellStats& o);
};

/// One 2T-1R cell: the OxRAM state plus its event counters. Mutation is
/// single-writer; the array owns its cells exclusively.
class Bitcell {
 public:
  Bitcell() = default;
  explicit Bitcell(SlimLevel s) : state_(s) {}

  SlimLevel state() const { return state_; }
  void set_state(SlimLevel s) { state_ = s; }

  /// One read event; decodes both planes.
  ReadValue read();

  /// The single-cycle logic primitive: P3 on V2 reaches the OxRAM iff the
  /// pulse is asserted and either transistor conducts. Returns the logic
  /// output NOT(cond AND (g1 OR g2)); the memory bit is preserved.
  /// Requires an absolute starting state and a V2 drive.
  int slim_primitive(const GateDrive& drive);

  /// Two-input NOR with memory preservation.
  int slim_nor(int a, int b);

  /// Runs `op` through its program scheme. Same precondition as the
  /// primitive.
  int table2_op(BoolOp op, int a, int b);

  /// Programs the cell to the absolute state for `bit` ('11' or '01') with an
  /// intelligent read first, so no pulse is issued when already there.
  /// Write '0' from LRS uses iterated P3 with read-verify.
  void memory_write(int bit);

  /// Restores a post-logic state to its absolute state with one P2; no pulse
  /// when already absolute. Returns the number of pulses issued.
  int refresh();

  const CellStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

 private:
  enum class PulseContext { Logic, Write, Refresh };
  void pulse(PulseKind kind, PulseContext ctx);

  SlimLevel state_ = SlimLevel::S01;
  CellStats stats_;
};

}  // namespace slim
