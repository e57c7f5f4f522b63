//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/bitcell.hpp"

#include <string>

#include "slim/errors.hpp"

namespace slim {

std::string_view name(BoolOp op) {
  switch (op) {
    case BoolOp::NotA: return "not_a";
    case BoolOp::NotB: return "not_b";
    case BoolOp::Or: return "or";
    case BoolOp::Nor: return "nor";
    case BoolOp::And: return "and";
    case BoolOp::Nand: return "nand";
  }
  return "??";
}

std::optional<BoolOp> parse_bool_op(std::string_view text) {
  if (text == "not_a" || text == "nota") return BoolOp::NotA;
  if (text == "not_b" || text == "notb") return BoolOp::NotB;
  if (text == "or") return BoolOp::Or;
  if (text == "nor") return BoolOp::Nor;
  if (text == "and") return BoolOp::And;
  if (text == "nand") return BoolOp::Nand;
  return std::nullopt;
}

GateDrive drive_for(BoolOp op, int a, int b) {
  a = a ? 1 : 0;
  b = b ? 1 : 0;
  const int na = 1 - a;
  const int nb = 1 - b;
  switch (op) {
    case BoolOp::NotA: return {a, a, 1, Terminal::V2};
    case BoolOp::NotB: return {b, b, 1, Terminal::V2};
    case BoolOp::Or: return {na, na, nb, Terminal::V2};
    case BoolOp::Nor: return {a, b, 1, Terminal::V2};
    case BoolOp::And: return {na, nb, 1, Terminal::V2};
    case BoolOp::Nand: return {a, a, b, Terminal::V2};
  }
  throw SlimError("unknown bool op");
}

CellStats& CellStats::operator+=(const CellStats& o) {
  p1 += o.p1;
  p2 += o.p2;
  p3 += o.p3;
  reads += o.reads;
  logic_switches += o.logic_switches;
  write_switches += o.write_switches;
  refresh_switches += o.refresh_switches;
  return *this;
}

void Bitcell::pulse(PulseKind kind, PulseContext ctx) {
  switch (kind) {
    case PulseKind::P1: ++stats_.p1; break;
    case PulseKind::P2: ++stats_.p2; break;
    case PulseKind::P3: ++stats_.p3; break;
  }
  const SlimLevel next = apply_pulse(state_, kind);
  if (next != state_) {
    switch (ctx) {
      case PulseContext::Logic: ++stats_.logic_switches; break;
      case PulseContext::Write: ++stats_.write_switches; break;
      case PulseContext::Refresh: ++stats_.refresh_switches; break;
    }
  }
  state_ = next;
}

ReadValue Bitcell::read() {
  ++stats_.reads;
  return decode(state_);
}

int Bitcell::slim_primitive(const GateDrive& drive) {
  if (!is_absolute(state_)) {
    throw PreconditionViolation("logic primitive on non-absolute state '" +
                                std::string(label(state_)) + "'; refresh first");
  }
  if (drive.terminal != Terminal::V2) {
    throw PreconditionViolation("logic primitive drives P3 on terminal V2");
  }
  const bool resets = drive.pulse_condition && (drive.g1 || drive.g2);
  if (resets) pulse(PulseKind::P3, PulseContext::Logic);
  return logic_bit(state_);
}

int Bitcell::slim_nor(int a, int b) {
  return slim_primitive({a, b, 1, Terminal::V2});
}

int Bitcell::table2_op(BoolOp op, int a, int b) {
  return slim_primitive(drive_for(op, a, b));
}

void Bitcell::memory_write(int bit) {
  read();  // intelligent read
  if (bit) {
    switch (state_) {
      case SlimLevel::S11: break;
      case SlimLevel::S10: pulse(PulseKind::P2, PulseContext::Write); break;
      default: pulse(PulseKind::P1, PulseContext::Write); break;
    }
    return;
  }
  switch (state_) {
    case SlimLevel::S01: break;
    case SlimLevel::S00: pulse(PulseKind::P2, PulseContext::Write); break;
    default: {
      // Consecutive RESET pulses with read-verify until the absolute HRS
      // state is reached.
      int budget = 4;
      while (state_ != SlimLevel::S01) {
        if (budget-- == 0) throw VerifyFailure("memory write '0' did not verify within 4 pulses");
        pulse(PulseKind::P3, PulseContext::Write);
        read();  // verify
      }
      break;
    }
  }
}

int Bitcell::refresh() {
  if (is_absolute(state_)) return 0;
  pulse(PulseKind::P2, PulseContext::Refresh);
  return 1;
}

}  // namespace slim
