//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/netlist.hpp"

#include <algorithm>
#include <sstream>

#include "slim/errors.hpp"

namespace slim {

namespace {

int signal_level(const Signal& s, const std::vector<int>& levels) {
  return s.kind == SignalKind::Node ? levels[static_cast<std::size_t>(s.index)] : 0;
}

int signal_value(const Signal& s, std::span<const int> inputs, const std::vector<int>& values) {
  switch (s.kind) {
    case SignalKind::Input: return inputs[static_cast<std::size_t>(s.index)] ? 1 : 0;
    case SignalKind::InputComplement: return inputs[static_cast<std::size_t>(s.index)] ? 0 : 1;
    case SignalKind::Node: return values[static_cast<std::size_t>(s.index)];
  }
  return 0;
}

}  // namespace

std::vector<int> NorNetlist::node_levels() const {
  std::vector<int> levels(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NorNode& n = nodes[i];
    int lvl = std::max(signal_level(n.g1, levels), signal_level(n.g2, levels));
    if (n.cond) lvl = std::max(lvl, signal_level(*n.cond, levels));
    levels[i] = lvl + 1;
  }
  return levels;
}

int NorNetlist::depth() const {
  const auto levels = node_levels();
  return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
}

void NorNetlist::validate() const {
  const auto check = [this](const Signal& s, std::size_t node_idx, bool is_output) {
    switch (s.kind) {
      case SignalKind::Input:
      case SignalKind::InputComplement:
        if (s.index < 0 || s.index >= static_cast<int>(inputs.size())) {
          throw SlimError("netlist '" + name + "': input index out of range");
        }
        break;
      case SignalKind::Node: {
        const int limit = is_output ? static_cast<int>(nodes.size()) : static_cast<int>(node_idx);
        if (s.index < 0 || s.index >= limit) {
          throw SlimError("netlist '" + name + "': node reference is not to an earlier node");
        }
        break;
      }
    }
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    check(nodes[i].g1, i, false);
    check(nodes[i].g2, i, false);
    if (nodes[i].cond) check(*nodes[i].cond, i, false);
  }
  for (const Signal& s : outputs) check(s, 0, true);
}

std::optional<int> NorNetlist::input_index(std::string_view input_name) const {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] == input_name) return static_cast<int>(i);
  }
  return std::nullopt;
}

NetlistBuilder::NetlistBuilder(std::string name) { netlist_.name = std::move(name); }

Signal NetlistBuilder::input(const std::string& name) {
  netlist_.inputs.push_back(name);
  return {SignalKind::Input, static_cast<int>(netlist_.inputs.size()) - 1};
}

Signal NetlistBuilder::complement(Signal input_signal) const {
  if (input_signal.kind != SignalKind::Input) {
    throw SlimError("only primary inputs have a free complement");
  }
  return {SignalKind::InputComplement, input_signal.index};
}

void NetlistBuilder::check_source(const Signal& s) const {
  const int limit = s.kind == SignalKind::Node ? static_cast<int>(netlist_.nodes.size())
                                               : static_cast<int>(netlist_.inputs.size());
  if (s.index < 0 || s.index >= limit) throw SlimError("builder: dangling signal reference");
}

Signal NetlistBuilder::nor(Signal a, Signal b, std::optional<Signal> cond) {
  check_source(a);
  check_source(b);
  if (cond) check_source(*cond);
  netlist_.nodes.push_back({a, b, cond});
  return {SignalKind::Node, static_cast<int>(netlist_.nodes.size()) - 1};
}

void NetlistBuilder::output(Signal s) {
  check_source(s);
  netlist_.outputs.push_back(s);
}

NorNetlist NetlistBuilder::take() {
  netlist_.validate();
  return std::move(netlist_);
}

Signal emit_and(NetlistBuilder& b, Signal a, Signal y) {
  return b.nor(b.inv(a), b.inv(y));
}

AdderBit emit_half_adder(NetlistBuilder& b, Signal a, Signal y) {
  const Signal na = b.inv(a);
  const Signal ny = b.inv(y);
  const Signal carry = b.nor(na, ny);  // a AND y
  const Signal none = b.nor(a, y);
  const Signal sum = b.nor(carry, none);  // a XOR y
  return {sum, carry};
}

AdderBit emit_full_adder(NetlistBuilder& b, Signal a, Signal y, Signal cin) {
  const Signal n1 = b.nor(a, y);
  const Signal n2 = b.nor(a, n1);
  const Signal n3 = b.nor(y, n1);
  const Signal n4 = b.nor(n2, n3);  // XNOR(a, y)
  const Signal n5 = b.nor(n4, cin);
  const Signal n6 = b.nor(n4, n5);
  const Signal n7 = b.nor(cin, n5);
  const Signal sum = b.nor(n6, n7);
  const Signal carry = b.nor(n5, n1);
  return {sum, carry};
}

std::string_view name(GateKind g) {
  switch (g) {
    case GateKind::Not: return "not";
    case GateKind::Nor: return "nor";
    case GateKind::Or: return "or";
    case GateKind::And: return "and";
    case GateKind::Nand: return "nand";
    case GateKind::Xor: return "xor";
    case GateKind::Xnor: return "xnor";
    case GateKind::HalfAdder: return "ha";
    case GateKind::FullAdder: return "fa";
  }
  return "??";
}

std::optional<GateKind> parse_gate(std::string_view text) {
  if (text == "not") return GateKind::Not;
  if (text == "nor") return GateKind::Nor;
  if (text == "or") return GateKind::Or;
  if (text == "and") return GateKind::And;
  if (text == "nand") return GateKind::Nand;
  if (text == "xor") return GateKind::Xor;
  if (text == "xnor") return GateKind::Xnor;
  if (text == "ha") return GateKind::HalfAdder;
  if (text == "fa") return GateKind::FullAdder;
  return std::nullopt;
}

NorNetlist netlist_for(GateKind gate) {
  NetlistBuilder b{std::string(name(gate))};
  switch (gate) {
    case GateKind::Not: {
      const Signal a = b.input("a");
      b.output(b.inv(a));
      break;
    }
    case GateKind::Nor: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      b.output(b.nor(a, y));
      break;
    }
    case GateKind::Or: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      b.output(b.inv(b.nor(a, y)));
      break;
    }
    case GateKind::And: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      b.output(emit_and(b, a, y));
      break;
    }
    case GateKind::Nand: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      b.output(b.inv(emit_and(b, a, y)));
      break;
    }
    case GateKind::Xor: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      const Signal both = b.nor(b.inv(a), b.inv(y));  // a AND b
      const Signal none = b.nor(a, y);
      b.output(b.nor(both, none));
      break;
    }
    case GateKind::Xnor: {
      // The free peripheral complements keep this at four cells.
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      const Signal both = b.nor(b.complement(a), b.complement(y));
      const Signal none = b.nor(a, y);
      b.output(b.inv(b.nor(both, none)));
      break;
    }
    case GateKind::HalfAdder: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      const AdderBit ha = emit_half_adder(b, a, y);
      b.output(ha.sum);
      b.output(ha.carry);
      break;
    }
    case GateKind::FullAdder: {
      const Signal a = b.input("a");
      const Signal y = b.input("b");
      const Signal cin = b.input("cin");
      const AdderBit fa = emit_full_adder(b, a, y, cin);
      b.output(fa.sum);
      b.output(fa.carry);
      break;
    }
  }
  return b.take();
}

NorNetlist build_ripple_adder(int width) {
  if (width < 1) throw SlimError("ripple adder: width must be >= 1");
  NetlistBuilder b("add" + std::to_string(width));
  std::vector<Signal> a(static_cast<std::size_t>(width));
  std::vector<Signal> y(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) a[static_cast<std::size_t>(i)] = b.input("a" + std::to_string(i));
  for (int i = 0; i < width; ++i) y[static_cast<std::size_t>(i)] = b.input("b" + std::to_string(i));

  std::vector<Signal> sums;
  AdderBit stage = emit_half_adder(b, a[0], y[0]);
  sums.push_back(stage.sum);
  for (int i = 1; i < width; ++i) {
    stage = emit_full_adder(b, a[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)],
                            stage.carry);
    sums.push_back(stage.sum);
  }
  for (const Signal& s : sums) b.output(s);
  b.output(stage.carry);
  return b.take();
}

NorNetlist build_csa_multiplier(int width) {
  if (width < 1) throw SlimError("csa multiplier: width must be >= 1");
  NetlistBuilder b("mul" + std::to_string(width));
  std::vector<Signal> a(static_cast<std::size_t>(width));
  std::vector<Signal> y(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) a[static_cast<std::size_t>(i)] = b.input("a" + std::to_string(i));
  for (int i = 0; i < width; ++i) y[static_cast<std::size_t>(i)] = b.input("b" + std::to_string(i));

  const std::size_t out_bits = static_cast<std::size_t>(2 * width);
  std::vector<std::vector<Signal>> columns(out_bits);
  for (int i = 0; i < width; ++i) {
    for (int j = 0; j < width; ++j) {
      columns[static_cast<std::size_t>(i + j)].push_back(
          emit_and(b, a[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(i)]));
    }
  }

  // Carry-save rows: one pass of 3:2 compression per row until every column
  // holds at most two bits. Carries land in the next column for the next row.
  auto needs_reduction = [&columns] {
    return std::any_of(columns.begin(), columns.end(),
                       [](const std::vector<Signal>& c) { return c.size() > 2; });
  };
  while (needs_reduction()) {
    std::vector<std::vector<Signal>> next(out_bits);
    for (std::size_t c = 0; c < out_bits; ++c) {
      const std::vector<Signal>& col = columns[c];
      std::size_t i = 0;
      while (col.size() - i >= 3) {
        const AdderBit fa = emit_full_adder(b, col[i], col[i + 1], col[i + 2]);
        i += 3;
        next[c].push_back(fa.sum);
        // Two set bits at the top column's weight would already exceed the
        // product range, so a carry out of it is identically zero.
        if (c + 1 < out_bits) next[c + 1].push_back(fa.carry);
      }
      for (; i < col.size(); ++i) next[c].push_back(col[i]);
    }
    columns = std::move(next);
  }

  // Final ripple-carry stage over the remaining two rows.
  std::optional<Signal> zero;  // constant 0 for columns beyond the top product bit
  auto const_zero = [&]() {
    if (!zero) zero = b.nor(a[0], b.complement(a[0]));
    return *zero;
  };
  std::vector<Signal> product(out_bits);
  std::optional<Signal> carry;
  for (std::size_t c = 0; c < out_bits; ++c) {
    std::vector<Signal>& col = columns[c];
    if (carry) col.push_back(*carry);
    carry.reset();
    switch (col.size()) {
      case 0: product[c] = const_zero(); break;
      case 1: product[c] = col[0]; break;
      case 2: {
        const AdderBit ha = emit_half_adder(b, col[0], col[1]);
        product[c] = ha.sum;
        carry = ha.carry;
        break;
      }
      default: {
        const AdderBit fa = emit_full_adder(b, col[0], col[1], col[2]);
        product[c] = fa.sum;
        carry = fa.carry;
        break;
      }
    }
  }
  for (const Signal& s : product) b.output(s);
  return b.take();
}

std::vector<int> evaluate_nodes(const NorNetlist& n, std::span<const int> inputs) {
  if (inputs.size() != n.inputs.size()) {
    throw SlimError("netlist '" + n.name + "': expected " + std::to_string(n.inputs.size()) +
                    " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<int> values(n.nodes.size(), 0);
  for (std::size_t i = 0; i < n.nodes.size(); ++i) {
    const NorNode& node = n.nodes[i];
    const int g1 = signal_value(node.g1, inputs, values);
    const int g2 = signal_value(node.g2, inputs, values);
    const int cond = node.cond ? signal_value(*node.cond, inputs, values) : 1;
    values[i] = (cond && (g1 || g2)) ? 0 : 1;
  }
  return values;
}

std::vector<int> evaluate(const NorNetlist& n, std::span<const int> inputs) {
  const std::vector<int> values = evaluate_nodes(n, inputs);
  std::vector<int> out;
  out.reserve(n.outputs.size());
  for (const Signal& s : n.outputs) out.push_back(signal_value(s, inputs, values));
  return out;
}

bool verify_equivalence(const NorNetlist& n, const TruthOracle& oracle) {
  if (n.inputs.size() > 20) {
    throw SlimError("equivalence check limited to 20 inputs, netlist '" + n.name + "' has " +
                    std::to_string(n.inputs.size()));
  }
  const std::size_t k = n.inputs.size();
  std::vector<int> inputs(k, 0);
  for (std::uint64_t combo = 0; combo < (1ull << k); ++combo) {
    for (std::size_t i = 0; i < k; ++i) inputs[i] = static_cast<int>((combo >> i) & 1u);
    if (evaluate(n, inputs) != oracle(inputs)) return false;
  }
  return true;
}

namespace {

std::string signal_text(const Signal& s, const NorNetlist& n) {
  switch (s.kind) {
    case SignalKind::Input: return n.inputs[static_cast<std::size_t>(s.index)];
    case SignalKind::InputComplement: return "~" + n.inputs[static_cast<std::size_t>(s.index)];
    case SignalKind::Node: return "@" + std::to_string(s.index);
  }
  return "?";
}

Signal signal_from_text(const std::string& token, const NorNetlist& n) {
  if (token.empty()) throw IoError("netlist parse: empty signal token");
  if (token[0] == '@') return {SignalKind::Node, std::stoi(token.substr(1))};
  if (token[0] == '~') {
    const auto idx = n.input_index(token.substr(1));
    if (!idx) throw IoError("netlist parse: unknown input: " + token);
    return {SignalKind::InputComplement, *idx};
  }
  const auto idx = n.input_index(token);
  if (!idx) throw IoError("netlist parse: unknown input: " + token);
  return {SignalKind::Input, *idx};
}

}  // namespace

std::string to_text(const NorNetlist& n) {
  std::ostringstream out;
  out << "netlist " << n.name << "\n";
  out << "inputs";
  for (const std::string& in : n.inputs) out << ' ' << in;
  out << "\n";
  for (std::size_t i = 0; i < n.nodes.size(); ++i) {
    const NorNode& node = n.nodes[i];
    out << "node " << i << ' ' << signal_text(node.g1, n) << ' ' << signal_text(node.g2, n);
    if (node.cond) out << " cond=" << signal_text(*node.cond, n);
    out << "\n";
  }
  out << "outputs";
  for (const Signal& s : n.outputs) out << ' ' << signal_text(s, n);
  out << "\n";
  out << "end\n";
  return out.str();
}

NorNetlist netlist_from_text(const std::string& text) {
  std::istringstream in(text);
  NorNetlist n;
  std::string line;
  bool saw_end = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "netlist") {
      ls >> n.name;
    } else if (kind == "inputs") {
      std::string name;
      while (ls >> name) n.inputs.push_back(name);
    } else if (kind == "node") {
      int id = 0;
      std::string g1, g2, extra;
      ls >> id >> g1 >> g2;
      if (id != static_cast<int>(n.nodes.size())) throw IoError("netlist parse: node ids must be dense");
      NorNode node{signal_from_text(g1, n), signal_from_text(g2, n), std::nullopt};
      if (ls >> extra) {
        if (extra.rfind("cond=", 0) != 0) throw IoError("netlist parse: bad node suffix: " + extra);
        node.cond = signal_from_text(extra.substr(5), n);
      }
      n.nodes.push_back(node);
    } else if (kind == "outputs") {
      std::string tok;
      while (ls >> tok) n.outputs.push_back(signal_from_text(tok, n));
    } else if (kind == "end") {
      saw_end = true;
      break;
    } else {
      throw IoError("netlist parse: unknown line kind: " + kind);
    }
  }
  if (!saw_end) throw IoError("netlist parse: missing end line");
  n.validate();
  return n;
}

}  // namespace slim
