// Copyright 2026 The qrsmux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrs/lowering.hpp"

#include <sstream>

#include "qrs/error.hpp"

namespace qrs {

const char* const kRalphCaveat =
    "ralph model: two-qubit gates counted 1:1 as CX; the single-qudit X_a/X_b gates are not costed and may need "
    "additional two-qubit gates in a qubit encoding";

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::general:
      return "general";
    case StrategyKind::ralph:
      return "ralph";
    case StrategyKind::multiplexed:
      return "multiplexed";
  }
  return "?";
}

std::optional<StrategyKind> strategy_from_string(std::string_view s) {
  for (auto k : {StrategyKind::general, StrategyKind::ralph, StrategyKind::multiplexed}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

CostBreakdown toffoli_tally() { return CostBreakdown{{"C1X", 6}, {"H", 2}, {"Tdag", 3}, {"T", 5}}; }

std::uint64_t general_toffoli_count(std::size_t arity) {
  if (arity < 2) return 0;
  if (arity == 2) return 1;
  return 4 * (static_cast<std::uint64_t>(arity) - 2);
}

CostBreakdown lower_general(std::size_t arity) {
  if (arity == 0) throw lowering_error("MCX needs at least one control");
  if (arity == 1) return CostBreakdown{{"C1X", 1}};
  return toffoli_tally().scaled(general_toffoli_count(arity));
}

namespace {

bool is_passthrough(GateKind k) {
  return k == GateKind::x || k == GateKind::h || k == GateKind::t || k == GateKind::tdag;
}

CostBreakdown passthrough(const Gate& g) {
  CostBreakdown out;
  out.add(std::string(to_string(g.kind)));
  return out;
}

}  // namespace

CostBreakdown lower_general(const Gate& g) {
  if (g.kind == GateKind::mcx) return lower_general(g.arity());
  if (is_passthrough(g.kind)) return passthrough(g);
  throw lowering_error(std::string(to_string(g.kind)) + " gate has no general lowering");
}

RalphCost lower_ralph(std::size_t arity) {
  if (arity == 0) throw lowering_error("MCX needs at least one control");
  if (arity == 1) return {CostBreakdown{{"C1X", 1}}, 0};
  return {CostBreakdown{{"C1X", 2 * static_cast<std::uint64_t>(arity) - 1}}, static_cast<unsigned>(arity)};
}

MultiplexedLowering lower_multiplexed(const Gate& g, const PhotonPartition& photons, int target_photon,
                                      const Strategy& s) {
  if (s.os_cost_per_control < 1) throw lowering_error("os-cost-per-control must be >= 1");
  MultiplexedLowering out;
  if (is_passthrough(g.kind)) {
    out.cost = passthrough(g);
    return out;
  }
  if (g.kind != GateKind::mcx) throw lowering_error(std::string(to_string(g.kind)) + " gate has no multiplexed lowering");

  const std::size_t j = g.arity();
  if (j == 1) {
    out.cost = CostBreakdown{{"C1X", 1}};
    return out;
  }
  auto fall_back = [&](std::string why) {
    out.cost = lower_general(j);
    out.fallback = true;
    out.warning = std::move(why);
    return out;
  };

  if (photons.size() == 1) {
    const int routed = photons.begin()->first;
    if (routed == target_photon) return fall_back("all controls share the target's photon");
    const std::uint64_t os = std::uint64_t{s.os_cost_per_control} * j;
    out.gadget = GadgetDescriptor{static_cast<unsigned>(j), routed, static_cast<unsigned>(j), static_cast<unsigned>(j),
                                  InnerGate::cx, os};
    out.cost = CostBreakdown{{"C1X", 1}, {"OS", os}};
    return out;
  }

  if (photons.size() == 2) {
    auto first = photons.begin();
    auto second = std::next(first);
    if (first->second.size() < second->second.size()) std::swap(first, second);
    const std::size_t big = first->second.size(), small = second->second.size();
    if (big == 1 && small == 1) {
      // Plain Toffoli across two photons: nothing to collapse.
      out.cost = lower_general(j);
      out.fallback = true;
      return out;
    }
    if (small == 1 && big == j - 1) {
      const int routed = first->first;
      if (routed == target_photon) return fall_back("collapsed controls share the target's photon");
      const auto collapsed = static_cast<unsigned>(big);
      if (s.nested_collapse && second->first == target_photon) {
        const std::uint64_t os = std::uint64_t{s.os_cost_per_control} * j;
        out.gadget = GadgetDescriptor{static_cast<unsigned>(j), routed, static_cast<unsigned>(j),
                                      static_cast<unsigned>(j), InnerGate::cx, os};
        out.cost = CostBreakdown{{"C1X", 1}, {"OS", os}};
        return out;
      }
      const std::uint64_t os = std::uint64_t{s.os_cost_per_control} * collapsed;
      out.gadget = GadgetDescriptor{collapsed, routed, collapsed, collapsed, InnerGate::c2x, os};
      out.cost = toffoli_tally();
      out.cost.add("OS", os);
      return out;
    }
    return fall_back("controls split " + std::to_string(big) + "+" + std::to_string(small) +
                     " across two photons; not collapsible");
  }

  return fall_back("controls span " + std::to_string(photons.size()) + " photons; not collapsible");
}

GadgetDescriptor emit_gadget(unsigned k, unsigned os_cost_per_control) {
  if (k < 1) throw lowering_error("gadget needs k >= 1");
  if (os_cost_per_control < 1) throw lowering_error("os-cost-per-control must be >= 1");
  return GadgetDescriptor{k, 0, k, k, InnerGate::cx, std::uint64_t{os_cost_per_control} * k};
}

std::string render_gadget(const GadgetDescriptor& g) {
  std::ostringstream s;
  const char* inner = g.inner == InnerGate::cx ? "CX" : "C2X";
  s << "C" << g.arity << "X gadget: " << g.arity << " time-bin control(s) on photon " << g.routed_photon << "\n";
  for (unsigned i = 0; i < g.split_stages; ++i) {
    s << "  split " << (i + 1) << ": OS keeps the component with control " << i
      << " satisfied on the routed mode, diverts the rest to bypass mode " << (i + 1) << "\n";
  }
  s << "  inner: " << inner << " from the routed spatial mode"
    << (g.inner == InnerGate::c2x ? " and the remaining control" : "") << " to the target\n";
  for (unsigned i = g.merge_stages; i > 0; --i) {
    s << "  merge " << (g.merge_stages - i + 1) << ": OS recombines bypass mode " << i << "\n";
  }
  s << "  optical switches: " << g.os_count << ", CX-level cost: " << (g.inner == InnerGate::cx ? 1 : 6) << " CX\n";
  return s.str();
}

bool gadget_apply(const GadgetDescriptor& g, std::span<const std::uint8_t> control_bits,
                  std::span<const Polarity> polarities, bool extra_control, bool target) {
  if (control_bits.size() != g.arity || polarities.size() != g.arity) {
    throw lowering_error("gadget input does not match its arity");
  }
  // 0 = routed mode; i + 1 = bypass mode of split stage i.
  unsigned mode = 0;
  for (unsigned i = 0; i < g.split_stages && i < g.arity; ++i) {
    const bool want = polarities[i] == Polarity::positive;
    if (mode == 0 && (control_bits[i] != 0) != want) mode = i + 1;
  }
  bool fire = mode == 0;
  if (g.inner == InnerGate::c2x) fire = fire && extra_control;
  // Merge stages return every component to a single mode; control bits are
  // untouched by routing.
  return target != fire;
}

namespace {

std::string describe_photons(const PhotonPartition& p) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [photon, controls] : p) {
    s << (first ? "" : ";") << photon << ":" << controls.size();
    first = false;
  }
  return s.str();
}

}  // namespace

LoweringReport lower_circuit(const Circuit& c, const Strategy& s, const LoweringOptions& options) {
  LoweringReport report;
  report.strategy = s;
  if (s.kind == StrategyKind::ralph) report.caveat = kRalphCaveat;

  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    LoweringRow row;
    row.gate_index = i;
    row.kind = g.kind;
    row.arity = g.arity();

    if (g.kind == GateKind::dft && options.pass_through_dft) {
      row.cost = CostBreakdown{{"DFT", 1}};
    } else if (!is_passthrough(g.kind) && g.kind != GateKind::mcx) {
      throw lowering_error("gate " + std::to_string(i) + ": " + std::string(to_string(g.kind)) +
                           " gate must be expanded before lowering");
    } else if (g.kind == GateKind::mcx) {
      const auto partition = photon_partition(c, g);
      row.photons = describe_photons(partition);
      switch (s.kind) {
        case StrategyKind::general:
          row.cost = lower_general(g);
          break;
        case StrategyKind::ralph: {
          auto r = lower_ralph(g.arity());
          row.cost = r.cost;
          report.max_qudit_ancilla_levels = std::max(report.max_qudit_ancilla_levels, r.qudit_ancilla_levels);
          break;
        }
        case StrategyKind::multiplexed: {
          auto m = lower_multiplexed(g, partition, c.registers().photon_of(g.targets.front()), s);
          row.cost = m.cost;
          row.fallback = m.fallback;
          if (m.gadget) report.gadgets.push_back(*m.gadget);
          if (!m.warning.empty()) report.warnings.push_back("gate " + std::to_string(i) + ": " + m.warning);
          break;
        }
      }
    } else {
      row.cost = passthrough(g);
    }
    report.total += row.cost;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string lowering_report_csv(const LoweringReport& r) {
  std::ostringstream s;
  s << "gate-index,kind,arity,photons,strategy,cx,h,t,tdag,os,fallback-flag\n";
  for (const auto& row : r.rows) {
    s << row.gate_index << ',' << to_string(row.kind) << ',' << row.arity << ',' << row.photons << ','
      << to_string(r.strategy.kind) << ',' << row.cost.cx() << ',' << row.cost.get("H") << ',' << row.cost.get("T")
      << ',' << row.cost.get("Tdag") << ',' << row.cost.get("OS") << ',' << (row.fallback ? 1 : 0) << '\n';
  }
  return s.str();
}

std::vector<Gate> toffoli_clifford_t(Wire c0, Wire c1, Wire target) {
  return {
      Gate::h(target),      Gate::cx(c1, target), Gate::tdag(target), Gate::cx(c0, target),
      Gate::t(target),      Gate::cx(c1, target), Gate::tdag(target), Gate::cx(c0, target),
      Gate::t(target),      Gate::h(target),      Gate::cx(c0, c1),   Gate::tdag(c1),
      Gate::cx(c0, c1),     Gate::t(c1),          Gate::t(c0),
  };
}

Circuit general_mcx_network(std::size_t arity) {
  if (arity < 1) throw lowering_error("MCX needs at least one control");
  RegisterTable t;
  const auto rc = t.add("c", static_cast<unsigned>(arity), 0, RegisterRole::work);
  const auto rt = t.add("t", 1, 1, RegisterRole::work);
  std::optional<RegisterId> rw;
  if (arity >= 3) rw = t.add("w", static_cast<unsigned>(arity - 2), 2, RegisterRole::work);
  Circuit c(std::move(t), CircuitMeta{0, "general", "C" + std::to_string(arity) + "X with borrowed work qubits"});

  const unsigned m = static_cast<unsigned>(arity);
  const Wire target{rt, 0};
  auto x = [&](unsigned i) { return Wire{rc, i}; };
  if (m == 1) {
    c.append(Gate::cx(x(0), target));
  } else if (m == 2) {
    c.append(Gate::ccx(x(0), x(1), target));
  } else {
    auto w = [&](unsigned i) { return Wire{*rw, i}; };
    // Ladder gate for control i >= 2: Toffoli(x_i, w_{i-2}) onto w_{i-1}, or
    // onto the target for the last control.
    auto ladder = [&](unsigned i) { c.append(Gate::ccx(x(i), w(i - 2), i == m - 1 ? target : w(i - 1))); };
    auto base = [&] { c.append(Gate::ccx(x(0), x(1), w(0))); };
    auto v_chain = [&](unsigned top) {
      for (unsigned i = top; i >= 2; --i) ladder(i);
      base();
      for (unsigned i = 2; i <= top; ++i) ladder(i);
    };
    v_chain(m - 1);
    if (m > 3) {
      v_chain(m - 2);
    } else {
      base();
    }
  }
  c.seal();
  return c;
}

Circuit expand_toffolis(const Circuit& c) {
  Circuit out(c.registers(), c.meta());
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::mcx || g.arity() != 2) {
      out.append(g);
      continue;
    }
    for (const auto& ctl : g.controls) {
      if (ctl.polarity == Polarity::zero) out.append(Gate::x(ctl.wire));
    }
    for (auto& e : toffoli_clifford_t(g.controls[0].wire, g.controls[1].wire, g.targets.front())) out.append(e);
    for (const auto& ctl : g.controls) {
      if (ctl.polarity == Polarity::zero) out.append(Gate::x(ctl.wire));
    }
  }
  if (c.sealed()) out.seal();
  return out;
}

}  // namespace qrs
