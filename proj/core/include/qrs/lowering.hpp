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

#pragma once

// MCX lowering under three cost models:
//
//   general      C_jX -> 4(j-2) Toffolis (j >= 3); Toffoli -> 6 CX, 2 H,
//                3 Tdag, 5 T.
//   ralph        C_jX -> 2j-1 two-qubit gates with one j-level qudit
//                ancilla; counted 1:1 against CX.
//   multiplexed  controls that share a photon collapse through optical
//                switches (OS): all controls on one photon -> one CX; all
//                but one on one photon -> one Toffoli. Anything else falls
//                back to the general tally.
//
// OS counts are reported separately and never folded into CX totals.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrs/circuit.hpp"

namespace qrs {

enum class StrategyKind { general, ralph, multiplexed };

std::string_view to_string(StrategyKind kind);
std::optional<StrategyKind> strategy_from_string(std::string_view s);

struct Strategy {
  StrategyKind kind = StrategyKind::general;
  /// Optical switches per collapsed control (one split + one merge).
  unsigned os_cost_per_control = 2;
  /// When the single leftover control of a collapsed gate shares a photon
  /// with the target, treat the inner Toffoli as a second collapse (one CX)
  /// instead of the 6-CX tally.
  bool nested_collapse = false;

  static Strategy general() { return {StrategyKind::general}; }
  static Strategy ralph() { return {StrategyKind::ralph}; }
  static Strategy multiplexed(unsigned os_cost = 2) { return {StrategyKind::multiplexed, os_cost}; }
};

enum class InnerGate { cx, c2x };

struct GadgetDescriptor {
  unsigned arity = 0;          // controls collapsed through the switches
  int routed_photon = 0;
  unsigned split_stages = 0;
  unsigned merge_stages = 0;
  InnerGate inner = InnerGate::cx;
  std::uint64_t os_count = 0;

  friend bool operator==(const GadgetDescriptor&, const GadgetDescriptor&) = default;
};

/// {CX: 6, H: 2, Tdag: 3, T: 5}.
CostBreakdown toffoli_tally();
/// Toffolis used for a j-control MCX: 0, 1, or 4(j-2).
std::uint64_t general_toffoli_count(std::size_t arity);
CostBreakdown lower_general(std::size_t arity);
CostBreakdown lower_general(const Gate& g);

struct RalphCost {
  CostBreakdown cost;            // two-qubit gates under "C1X"
  unsigned qudit_ancilla_levels = 0;  // 0 when no qudit is needed
};
RalphCost lower_ralph(std::size_t arity);

/// Caveat attached to every Ralph-model report.
extern const char* const kRalphCaveat;

struct MultiplexedLowering {
  std::optional<GadgetDescriptor> gadget;
  CostBreakdown cost;
  bool fallback = false;
  std::string warning;
};
MultiplexedLowering lower_multiplexed(const Gate& g, const PhotonPartition& photons, int target_photon,
                                      const Strategy& s = Strategy::multiplexed());

/// Gadget for a C_kX whose k controls are time bins of one photon.
GadgetDescriptor emit_gadget(unsigned k, unsigned os_cost_per_control = 2);
/// Multi-line textual rendering of a gadget.
std::string render_gadget(const GadgetDescriptor& g);

/// Switch-routing model of a gadget: the split stages send the photon's
/// time-bin component into a dedicated spatial mode only when every
/// collapsed control matches its polarity; the inner gate fires on that
/// mode (and, for C2X, on `extra_control`); the merge stages undo the
/// routing. Returns the new target bit.
bool gadget_apply(const GadgetDescriptor& g, std::span<const std::uint8_t> control_bits,
                  std::span<const Polarity> polarities, bool extra_control, bool target);

struct LoweringRow {
  std::size_t gate_index = 0;
  GateKind kind = GateKind::x;
  std::size_t arity = 0;
  std::string photons;  // e.g. "1:3;2:1"
  CostBreakdown cost;
  bool fallback = false;
};

struct LoweringOptions {
  /// Let DFT gates through as opaque qudit gates (zero CX, tallied under
  /// "DFT") instead of failing.
  bool pass_through_dft = false;
};

struct LoweringReport {
  Strategy strategy;
  std::vector<LoweringRow> rows;
  CostBreakdown total;
  std::vector<GadgetDescriptor> gadgets;
  std::vector<std::string> warnings;
  std::string caveat;  // non-empty for the Ralph model
  unsigned max_qudit_ancilla_levels = 0;

  std::uint64_t cx() const { return total.cx(); }
  std::uint64_t os() const { return total.get("OS"); }
};

/// Lowers every gate of a circuit made of MCX/X/H/T/Tdag. SUM, DFT,
/// CMulAdd and OS gates raise lowering_error naming the gate index.
LoweringReport lower_circuit(const Circuit& c, const Strategy& s, const LoweringOptions& options = {});

/// CSV with columns gate-index,kind,arity,photons,strategy,cx,h,t,tdag,os,fallback.
std::string lowering_report_csv(const LoweringReport& r);

// Explicit constructions used to check the general cost model.

/// Phase-exact Toffoli over {CX, H, T, Tdag}: 6 CX, 2 H, 3 Tdag, 4 T. The
/// cost model's extra T (toffoli_tally) is not emitted.
std::vector<Gate> toffoli_clifford_t(Wire c0, Wire c1, Wire target);

/// Circuit over controls "c" (arity), target "t" and, for arity >= 3,
/// arity-2 borrowed work qubits "w" realizing C_jX with exactly
/// general_toffoli_count(arity) Toffolis. Work qubits are restored for any
/// initial value.
Circuit general_mcx_network(std::size_t arity);

/// Replaces every 2-control MCX with toffoli_clifford_t.
Circuit expand_toffolis(const Circuit& c);

}  // namespace qrs
