//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "slim/bitcell.hpp"

namespace slim {

/// Array organization: Mats of mat_rows x mat_cols single-bit cells, grouped
/// into banks. The defaults give a 4 kB array (8x8 Mats, 32 per bank, 16
/// banks, 32768 cells) that can serve one row per Mat per cycle.
struct ArrayGeometry {
  int mat_rows = 8;
  int mat_cols = 8;
  int mats_per_bank = 32;
  int banks = 16;

  int total_mats() const { return mats_per_bank * banks; }
  int cells_per_mat() const { return mat_rows * mat_cols; }
  std::int64_t total_cells() const {
    return static_cast<std::int64_t>(total_mats()) * cells_per_mat();
  }
  /// Single-bit op slots per cycle: one active row per Mat.
  std::int64_t row_slots_per_cycle() const {
    return static_cast<std::int64_t>(total_mats()) * mat_cols;
  }

  void validate() const;
  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;
};

/// Maximum ops of the given bit width that can run in parallel. Single-bit
/// ops use every row slot directly; wider ops flow through a pipeline of
/// `pipeline_depth` stages, and each op in flight occupies width x depth
/// slots. Always at least 1.
std::int64_t parallel_capacity(const ArrayGeometry& g, int op_bit_width, int pipeline_depth = 8);

struct Address {
  int bank = 0;
  int mat = 0;
  int row = 0;
  int col = 0;
  friend bool operator==(const Address&, const Address&) = default;
};

/// Whole-array refresh scheduling. Lazy restores a Mat only once all of its
/// rows are tagged dirty; eager restores every dirty row at each policy tick.
/// Either way, the per-op intelligent read inside logic commands keeps
/// results correct; the policy only changes when restore pulses happen.
enum class RefreshMode : std::uint8_t { Lazy, Eager };

std::string_view name(RefreshMode m);

struct ArrayStats {
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t p3 = 0;
  std::uint64_t reads = 0;
  std::uint64_t logic_switches = 0;
  std::uint64_t write_switches = 0;
  std::uint64_t refresh_switches = 0;

  std::uint64_t pulses() const { return p1 + p2 + p3; }
};

struct WordRead {
  std::uint64_t memory = 0;
  std::uint64_t logic = 0;
  friend bool operator==(const WordRead&, const WordRead&) = default;
};

/// The SLIM memory organization plus its controller: Memory-Write, Logic
/// (with internal refresh and Tag-byte bookkeeping) and Read command paths.
/// One instance is one mutation domain.
class SlimArray {
 public:
  explicit SlimArray(ArrayGeometry g = {});

  const ArrayGeometry& geometry() const { return geom_; }

  RefreshMode refresh_mode() const { return mode_; }
  void set_refresh_mode(RefreshMode m) { mode_ = m; }

  // -- Memory mode ---------------------------------------------------------

  void mem_write_bit(const Address& addr, int bit);

  /// Writes `width` bits (LSB first) into one Mat row starting at addr.col.
  void mem_write_word(const Address& base, std::uint64_t bits, int width);

  /// Reads both planes of `width` contiguous cells in a single pass.
  WordRead read_word(const Address& base, int width);

  ReadValue read_cell(const Address& addr);

  // -- Logic mode ----------------------------------------------------------

  /// Executes a single-cell program scheme at addr. Reads the cell first and
  /// refreshes it when it is in a post-logic state, then applies the op and
  /// tags the row dirty. Total over all four starting states.
  int logic_op_at(const Address& addr, BoolOp op, int a, int b);

  /// Generalized primitive with explicit gate and condition values; same
  /// read-refresh-tag envelope as logic_op_at.
  int primitive_at(const Address& addr, int g1, int g2, int cond);

  // -- Refresh -------------------------------------------------------------

  /// Restores every cell of the row and clears its tag bit. Returns the
  /// number of P2 pulses issued.
  int refresh_row(int bank, int mat, int row);

  /// Runs the refresh policy once. Returns the number of rows refreshed.
  int refresh_policy_tick();

  // -- Inspection ----------------------------------------------------------

  SlimLevel state_at(const Address& addr) const;   // no read event
  void set_state_at(const Address& addr, SlimLevel s);
  std::uint8_t tag_byte(int bank, int mat) const;  // bit r set = row r dirty
  bool row_dirty(int bank, int mat, int row) const;

  /// Memory-bit plane snapshot, cell-index order.
  std::vector<int> memory_plane() const;

  ArrayStats stats() const;
  void reset_stats();

  // -- Persistence ---------------------------------------------------------

  /// One header line, then one line per Mat: states in row-major order plus
  /// the tag byte in hex. Stats are not persisted.
  void dump(std::ostream& out) const;
  static SlimArray load(std::istream& in);

 private:
  std::size_t cell_index(const Address& addr) const;  // throws AddressOutOfBounds
  std::size_t mat_index(int bank, int mat) const;
  bool row_all_absolute(int bank, int mat, int row) const;

  ArrayGeometry geom_;
  RefreshMode mode_ = RefreshMode::Lazy;
  std::vector<Bitcell> cells_;
  std::vector<std::uint8_t> tags_;  // one byte per Mat
};

}  // namespace slim
