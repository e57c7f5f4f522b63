//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/schedule.hpp"

#include <algorithm>
#include <sstream>

#include "slim/errors.hpp"

namespace slim {

Schedule make_schedule(const NorNetlist& netlist, const ArrayGeometry& geometry) {
  netlist.validate();
  geometry.validate();

  Schedule s;
  s.netlist = netlist;
  s.node_cycle = netlist.node_levels();
  s.cycles = netlist.depth();
  s.cycle_nodes.resize(static_cast<std::size_t>(s.cycles));
  s.cycle_reads.resize(static_cast<std::size_t>(s.cycles));
  s.node_addr.resize(netlist.nodes.size());

  if (static_cast<std::int64_t>(netlist.nodes.size()) > geometry.total_cells()) {
    throw CapacityExceeded("netlist '" + netlist.name + "' needs " +
                           std::to_string(netlist.nodes.size()) + " cells, array has " +
                           std::to_string(geometry.total_cells()));
  }

  for (std::size_t i = 0; i < netlist.nodes.size(); ++i) {
    const int idx = static_cast<int>(i);
    Address a;
    a.bank = idx % geometry.banks;
    a.mat = (idx / geometry.banks) % geometry.mats_per_bank;
    const int slot = idx / (geometry.banks * geometry.mats_per_bank);
    a.row = slot / geometry.mat_cols;
    a.col = slot % geometry.mat_cols;
    s.node_addr[i] = a;
    s.cycle_nodes[static_cast<std::size_t>(s.node_cycle[i] - 1)].push_back(idx);
  }

  const std::int64_t capacity = parallel_capacity(geometry, 1);
  for (int c = 0; c < s.cycles; ++c) {
    const auto level_size = static_cast<std::int64_t>(s.cycle_nodes[static_cast<std::size_t>(c)].size());
    if (level_size > capacity) {
      throw CapacityExceeded("netlist '" + netlist.name + "' level " + std::to_string(c + 1) +
                             " needs " + std::to_string(level_size) + " cells, capacity is " +
                             std::to_string(capacity));
    }
  }

  // Routing: per cycle, the distinct earlier nodes feeding its gate drives.
  std::vector<char> seen(netlist.nodes.size());
  for (int c = 0; c < s.cycles; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    auto latch = [&](const Signal& sig) {
      if (sig.kind != SignalKind::Node) return;
      if (!seen[static_cast<std::size_t>(sig.index)]) {
        seen[static_cast<std::size_t>(sig.index)] = 1;
        s.cycle_reads[static_cast<std::size_t>(c)].push_back(sig.index);
      }
    };
    for (const int id : s.cycle_nodes[static_cast<std::size_t>(c)]) {
      const NorNode& node = netlist.nodes[static_cast<std::size_t>(id)];
      latch(node.g1);
      latch(node.g2);
      if (node.cond) latch(*node.cond);
    }
  }
  return s;
}

namespace {

int routed_value(const Signal& sig, std::span<const int> inputs, const std::vector<int>& latched) {
  switch (sig.kind) {
    case SignalKind::Input: return inputs[static_cast<std::size_t>(sig.index)] ? 1 : 0;
    case SignalKind::InputComplement: return inputs[static_cast<std::size_t>(sig.index)] ? 0 : 1;
    case SignalKind::Node: return latched[static_cast<std::size_t>(sig.index)];
  }
  return 0;
}

}  // namespace

std::vector<int> execute(const Schedule& s, SlimArray& array, std::span<const int> inputs) {
  if (inputs.size() != s.netlist.inputs.size()) {
    throw SlimError("execute: netlist '" + s.netlist.name + "' expects " +
                    std::to_string(s.netlist.inputs.size()) + " inputs, got " +
                    std::to_string(inputs.size()));
  }
  std::vector<int> latched(s.netlist.nodes.size(), -1);
  for (int c = 0; c < s.cycles; ++c) {
    for (const int id : s.cycle_reads[static_cast<std::size_t>(c)]) {
      latched[static_cast<std::size_t>(id)] =
          array.read_cell(s.node_addr[static_cast<std::size_t>(id)]).logic_bit;
    }
    for (const int id : s.cycle_nodes[static_cast<std::size_t>(c)]) {
      const NorNode& node = s.netlist.nodes[static_cast<std::size_t>(id)];
      const int g1 = routed_value(node.g1, inputs, latched);
      const int g2 = routed_value(node.g2, inputs, latched);
      const int cond = node.cond ? routed_value(*node.cond, inputs, latched) : 1;
      array.primitive_at(s.node_addr[static_cast<std::size_t>(id)], g1, g2, cond);
    }
  }
  std::vector<int> out;
  out.reserve(s.netlist.outputs.size());
  for (const Signal& sig : s.netlist.outputs) {
    if (sig.kind == SignalKind::Node) {
      out.push_back(array.read_cell(s.node_addr[static_cast<std::size_t>(sig.index)]).logic_bit);
    } else {
      out.push_back(routed_value(sig, inputs, latched));
    }
  }
  return out;
}

std::uint64_t execute_read_count(const Schedule& s) {
  std::uint64_t reads = s.netlist.nodes.size();  // one intelligent read per node
  for (const auto& cycle : s.cycle_reads) reads += cycle.size();
  for (const Signal& sig : s.netlist.outputs) {
    if (sig.kind == SignalKind::Node) ++reads;
  }
  return reads;
}

std::string to_text(const Schedule& s) {
  std::ostringstream out;
  out << "schedule " << s.netlist.name << " cycles=" << s.cycles << "\n";
  for (std::size_t i = 0; i < s.netlist.nodes.size(); ++i) {
    const Address& a = s.node_addr[i];
    out << "slot node=" << i << " cycle=" << s.node_cycle[i] << " addr=" << a.bank << "/" << a.mat
        << "/" << a.row << "/" << a.col << "\n";
  }
  out << "end\n";
  return out.str();
}

}  // namespace slim
