//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slim {

/// A gate or condition source: a primary input, the free peripheral
/// complement of a primary input, or the output of an earlier cell op.
/// Complements of intermediate results are not free; they cost an inverter
/// cell.
enum class SignalKind : std::uint8_t { Input, InputComplement, Node };

struct Signal {
  SignalKind kind = SignalKind::Input;
  int index = 0;
  friend bool operator==(const Signal&, const Signal&) = default;
};

/// One cell op. The stored logic output is NOT(cond AND (g1 OR g2)); a plain
/// NOR of the two gate signals when no condition source is attached.
struct NorNode {
  Signal g1;
  Signal g2;
  std::optional<Signal> cond;
};

/// A DAG of cell ops computing a Boolean function. Nodes reference only
/// earlier nodes, so vector order is a topological order.
struct NorNetlist {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<NorNode> nodes;
  std::vector<Signal> outputs;

  /// ASAP level of every node; inputs sit at level 0.
  std::vector<int> node_levels() const;
  /// Longest dependency chain; 0 for an empty netlist.
  int depth() const;
  void validate() const;

  std::optional<int> input_index(std::string_view name) const;
};

/// Incremental netlist construction with forward-reference safety.
class NetlistBuilder {
 public:
  explicit NetlistBuilder(std::string name);

  Signal input(const std::string& name);
  /// Free peripheral complement; only primary inputs have one.
  Signal complement(Signal input_signal) const;
  Signal nor(Signal a, Signal b, std::optional<Signal> cond = std::nullopt);
  Signal inv(Signal s) { return nor(s, s); }
  void output(Signal s);

  NorNetlist take();

 private:
  void check_source(const Signal& s) const;
  NorNetlist netlist_;
};

struct AdderBit {
  Signal sum;
  Signal carry;
};

// Library blocks emitted into an open builder; used by the arithmetic
// builders and available for custom netlists.
Signal emit_and(NetlistBuilder& b, Signal a, Signal y);
AdderBit emit_half_adder(NetlistBuilder& b, Signal a, Signal y);
AdderBit emit_full_adder(NetlistBuilder& b, Signal a, Signal y, Signal cin);

enum class GateKind : std::uint8_t { Not, Nor, Or, And, Nand, Xor, Xnor, HalfAdder, FullAdder };

std::string_view name(GateKind g);
std::optional<GateKind> parse_gate(std::string_view text);

/// Canonical library netlist with the fixed cell count of the gate
/// (NOT 1, NOR 1, OR 2, AND 3, NAND 4, XOR 5, XNOR 4, HA 5, FA 9).
NorNetlist netlist_for(GateKind gate);

/// Ripple-carry adder: inputs a0..a{w-1}, b0..b{w-1}; outputs w sum bits then
/// the carry-out. The first stage is a half adder (no carry-in).
NorNetlist build_ripple_adder(int width);

/// Carry-save multiplier: AND blocks form the partial products, 3:2
/// compressor rows reduce every column to at most two bits, and a final
/// ripple-carry stage produces the 2w product bits.
NorNetlist build_csa_multiplier(int width);

/// Value of every node under the given input assignment.
std::vector<int> evaluate_nodes(const NorNetlist& n, std::span<const int> inputs);
/// Output bits only.
std::vector<int> evaluate(const NorNetlist& n, std::span<const int> inputs);

using TruthOracle = std::function<std::vector<int>(const std::vector<int>&)>;

/// Exhaustive equivalence check against an oracle; input counts above 20 are
/// rejected.
bool verify_equivalence(const NorNetlist& n, const TruthOracle& oracle);

std::string to_text(const NorNetlist& n);
NorNetlist netlist_from_text(const std::string& text);

}  // namespace slim
