//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/array.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "slim/errors.hpp"

namespace slim {

void ArrayGeometry::validate() const {
  if (mat_rows <= 0 || mat_cols <= 0 || mats_per_bank <= 0 || banks <= 0) {
    throw ConfigError("array geometry: all dimensions must be positive");
  }
  if (mat_rows > 8) {
    throw ConfigError("array geometry: tag bytes track at most 8 rows per Mat");
  }
  if (mat_cols > 64) {
    throw ConfigError("array geometry: word ops support at most 64 columns");
  }
}

std::int64_t parallel_capacity(const ArrayGeometry& g, int op_bit_width, int pipeline_depth) {
  g.validate();
  if (op_bit_width < 1) throw ConfigError("parallel capacity: op bit width must be >= 1");
  if (pipeline_depth < 1) throw ConfigError("parallel capacity: pipeline depth must be >= 1");
  const std::int64_t slots = g.row_slots_per_cycle();
  const std::int64_t per_op =
      static_cast<std::int64_t>(op_bit_width) * (op_bit_width > 1 ? pipeline_depth : 1);
  return std::max<std::int64_t>(1, slots / per_op);
}

std::string_view name(RefreshMode m) {
  return m == RefreshMode::Lazy ? "lazy" : "eager";
}

SlimArray::SlimArray(ArrayGeometry g) : geom_(g) {
  geom_.validate();
  cells_.resize(static_cast<std::size_t>(geom_.total_cells()));
  tags_.resize(static_cast<std::size_t>(geom_.total_mats()), 0);
}

std::size_t SlimArray::cell_index(const Address& a) const {
  if (a.bank < 0 || a.bank >= geom_.banks || a.mat < 0 || a.mat >= geom_.mats_per_bank ||
      a.row < 0 || a.row >= geom_.mat_rows || a.col < 0 || a.col >= geom_.mat_cols) {
    std::ostringstream msg;
    msg << "address out of bounds: bank=" << a.bank << " mat=" << a.mat << " row=" << a.row
        << " col=" << a.col;
    throw AddressOutOfBounds(msg.str());
  }
  const std::size_t mat = mat_index(a.bank, a.mat);
  return (mat * static_cast<std::size_t>(geom_.mat_rows) + static_cast<std::size_t>(a.row)) *
             static_cast<std::size_t>(geom_.mat_cols) +
         static_cast<std::size_t>(a.col);
}

std::size_t SlimArray::mat_index(int bank, int mat) const {
  return static_cast<std::size_t>(bank) * static_cast<std::size_t>(geom_.mats_per_bank) +
         static_cast<std::size_t>(mat);
}

void SlimArray::mem_write_bit(const Address& addr, int bit) {
  mem_write_word(addr, bit ? 1u : 0u, 1);
}

void SlimArray::mem_write_word(const Address& base, std::uint64_t bits, int width) {
  if (width < 0 || width > geom_.mat_cols) {
    throw AddressOutOfBounds("word width " + std::to_string(width) + " exceeds Mat columns");
  }
  if (width == 0) return;
  cell_index(base);
  Address a = base;
  a.col = base.col + width - 1;
  cell_index(a);  // the row is contiguous, so first and last cover the span
  for (int k = 0; k < width; ++k) {
    a.col = base.col + k;
    cells_[cell_index(a)].memory_write(static_cast<int>((bits >> k) & 1u));
  }
  // A memory command re-establishes the row tag only when the whole row is
  // back to absolute states.
  if (row_all_absolute(base.bank, base.mat, base.row)) {
    tags_[mat_index(base.bank, base.mat)] &= static_cast<std::uint8_t>(~(1u << base.row));
  }
}

WordRead SlimArray::read_word(const Address& base, int width) {
  if (width < 0 || width > geom_.mat_cols) {
    throw AddressOutOfBounds("word width " + std::to_string(width) + " exceeds Mat columns");
  }
  WordRead out;
  Address a = base;
  for (int k = 0; k < width; ++k) {
    a.col = base.col + k;
    const ReadValue v = cells_[cell_index(a)].read();
    out.memory |= static_cast<std::uint64_t>(v.memory_bit) << k;
    out.logic |= static_cast<std::uint64_t>(v.logic_bit) << k;
  }
  return out;
}

ReadValue SlimArray::read_cell(const Address& addr) {
  return cells_[cell_index(addr)].read();
}

int SlimArray::logic_op_at(const Address& addr, BoolOp op, int a, int b) {
  Bitcell& c = cells_[cell_index(addr)];
  c.read();  // intelligent read
  if (!is_absolute(c.state())) c.refresh();
  const int out = c.table2_op(op, a, b);
  tags_[mat_index(addr.bank, addr.mat)] |= static_cast<std::uint8_t>(1u << addr.row);
  return out;
}

int SlimArray::primitive_at(const Address& addr, int g1, int g2, int cond) {
  Bitcell& c = cells_[cell_index(addr)];
  c.read();
  if (!is_absolute(c.state())) c.refresh();
  const int out = c.slim_primitive({g1, g2, cond, Terminal::V2});
  tags_[mat_index(addr.bank, addr.mat)] |= static_cast<std::uint8_t>(1u << addr.row);
  return out;
}

int SlimArray::refresh_row(int bank, int mat, int row) {
  Address a{bank, mat, row, 0};
  cell_index(a);  // bounds
  int pulses = 0;
  for (int col = 0; col < geom_.mat_cols; ++col) {
    a.col = col;
    Bitcell& c = cells_[cell_index(a)];
    c.read();
    pulses += c.refresh();
  }
  tags_[mat_index(bank, mat)] &= static_cast<std::uint8_t>(~(1u << row));
  return pulses;
}

int SlimArray::refresh_policy_tick() {
  const std::uint8_t full = static_cast<std::uint8_t>((1u << geom_.mat_rows) - 1u);
  int rows_refreshed = 0;
  for (int bank = 0; bank < geom_.banks; ++bank) {
    for (int mat = 0; mat < geom_.mats_per_bank; ++mat) {
      const std::uint8_t tag = tags_[mat_index(bank, mat)];
      if (tag == 0) continue;
      if (mode_ == RefreshMode::Lazy && tag != full) continue;
      for (int row = 0; row < geom_.mat_rows; ++row) {
        if (tag & (1u << row)) {
          refresh_row(bank, mat, row);
          ++rows_refreshed;
        }
      }
    }
  }
  return rows_refreshed;
}

SlimLevel SlimArray::state_at(const Address& addr) const {
  return cells_[cell_index(addr)].state();
}

void SlimArray::set_state_at(const Address& addr, SlimLevel s) {
  cells_[cell_index(addr)].set_state(s);
}

std::uint8_t SlimArray::tag_byte(int bank, int mat) const {
  Address a{bank, mat, 0, 0};
  cell_index(a);  // bounds
  return tags_[mat_index(bank, mat)];
}

bool SlimArray::row_dirty(int bank, int mat, int row) const {
  Address a{bank, mat, row, 0};
  cell_index(a);
  return (tags_[mat_index(bank, mat)] >> row) & 1u;
}

bool SlimArray::row_all_absolute(int bank, int mat, int row) const {
  Address a{bank, mat, row, 0};
  for (int col = 0; col < geom_.mat_cols; ++col) {
    a.col = col;
    if (!is_absolute(cells_[cell_index(a)].state())) return false;
  }
  return true;
}

std::vector<int> SlimArray::memory_plane() const {
  std::vector<int> plane(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) plane[i] = memory_bit(cells_[i].state());
  return plane;
}

ArrayStats SlimArray::stats() const {
  ArrayStats s;
  for (const Bitcell& c : cells_) {
    const CellStats& cs = c.stats();
    s.p1 += cs.p1;
    s.p2 += cs.p2;
    s.p3 += cs.p3;
    s.reads += cs.reads;
    s.logic_switches += cs.logic_switches;
    s.write_switches += cs.write_switches;
    s.refresh_switches += cs.refresh_switches;
  }
  return s;
}

void SlimArray::reset_stats() {
  for (Bitcell& c : cells_) c.reset_stats();
}

void SlimArray::dump(std::ostream& out) const {
  out << "slimarray banks=" << geom_.banks << " mats=" << geom_.mats_per_bank
      << " rows=" << geom_.mat_rows << " cols=" << geom_.mat_cols << "\n";
  static const char* hex = "0123456789abcdef";
  for (int bank = 0; bank < geom_.banks; ++bank) {
    for (int mat = 0; mat < geom_.mats_per_bank; ++mat) {
      out << "mat " << bank << " " << mat;
      Address a{bank, mat, 0, 0};
      for (int row = 0; row < geom_.mat_rows; ++row) {
        for (int col = 0; col < geom_.mat_cols; ++col) {
          a.row = row;
          a.col = col;
          out << ' ' << label(cells_[cell_index(a)].state());
        }
      }
      const std::uint8_t tag = tags_[mat_index(bank, mat)];
      out << " tag=" << hex[tag >> 4] << hex[tag & 0xf] << "\n";
    }
  }
}

SlimArray SlimArray::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("array load: empty input");
  ArrayGeometry g;
  {
    std::istringstream hdr(line);
    std::string magic;
    hdr >> magic;
    if (magic != "slimarray") throw IoError("array load: bad header: " + line);
    std::string field;
    while (hdr >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw IoError("array load: bad header field: " + field);
      const std::string key = field.substr(0, eq);
      const int value = std::stoi(field.substr(eq + 1));
      if (key == "banks") g.banks = value;
      else if (key == "mats") g.mats_per_bank = value;
      else if (key == "rows") g.mat_rows = value;
      else if (key == "cols") g.mat_cols = value;
      else throw IoError("array load: unknown header field: " + key);
    }
  }
  SlimArray array(g);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    if (word != "mat") throw IoError("array load: expected mat line, got: " + line);
    int bank = 0;
    int mat = 0;
    row >> bank >> mat;
    Address a{bank, mat, 0, 0};
    for (int r = 0; r < g.mat_rows; ++r) {
      for (int c = 0; c < g.mat_cols; ++c) {
        if (!(row >> word)) throw IoError("array load: truncated mat line");
        const auto lvl = parse_level(word);
        if (!lvl) throw IoError("array load: bad state symbol: " + word);
        a.row = r;
        a.col = c;
        array.set_state_at(a, *lvl);
      }
    }
    if (!(row >> word) || word.rfind("tag=", 0) != 0 || word.size() != 6) {
      throw IoError("array load: missing tag byte");
    }
    const std::uint8_t tag = static_cast<std::uint8_t>(std::stoi(word.substr(4), nullptr, 16));
    array.tags_[array.mat_index(bank, mat)] = tag;
  }
  return array;
}

}  // namespace slim
