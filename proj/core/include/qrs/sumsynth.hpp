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

// Qubit-level SUM gate for a prime qudit dimension d, built as a k-bit
// ripple-carry adder followed by a modulo conversion:
//
//   RCA: |A>|B> -> |A>|(A+B) mod 2^k>, top carry = overflow bit
//   Mod: flag every adder outcome i in [d, 2(d-1)] on its own check-if
//        qubit, then XOR (i mod 2^k) ^ (i mod d) into B under that flag.
//
// Carry and check-if ancillas start at |0> and are not uncomputed.

#include <cstdint>
#include <optional>
#include <vector>

#include "qrs/circuit.hpp"

namespace qrs {

inline constexpr unsigned kDefaultMaxQubitsPerQudit = 10;

/// Photon ids assigned to the SUM-gate registers.
struct PhotonMap {
  int data_a = 0;
  int data_b = 1;
  int ancilla = 2;  // carry and check-if
};

/// Unique k with 2^(k-1) < d <= 2^k.
unsigned qubits_per_qudit(std::uint64_t d);

enum class SumCase {
  a,  // 2(d-1) <= 2^k: no outcome needs the top carry as a control
  b,  // 2(d-1) >  2^k: outcomes >= 2^k add the top carry as a control
};

struct FlagRecord {
  std::uint32_t value = 0;            // adder outcome i in [d, 2(d-1)]
  std::uint32_t pattern = 0;          // i mod 2^k, as seen on B
  bool needs_carry_control = false;   // i >= 2^k
  std::uint32_t correction_mask = 0;  // pattern ^ (i mod d)
  /// Index into the check-if register, or nullopt when the top carry is
  /// the flag (i == 2^k == 2(d-1)).
  std::optional<unsigned> checkif_slot;
};

struct SumPlan {
  std::uint32_t d = 0;
  unsigned k = 0;
  SumCase sum_case = SumCase::a;
  unsigned n_checkif = 0;
  unsigned n_aux = 0;  // k carries + n_checkif
  std::vector<FlagRecord> flags;

  bool carry_substitutes() const { return n_checkif + 1 == flags.size(); }
  /// d - 2 flag qubits, the layout where the top carry holds the last
  /// flag. Differs from n_checkif when no substitution happens.
  unsigned n_checkif_d_minus_2() const { return d - 2; }
};

SumPlan plan(std::uint32_t d, unsigned max_qubits_per_qudit = kDefaultMaxQubitsPerQudit);

/// Registers A, B, carry (k each) and check-if (n_checkif).
RegisterTable sum_register_table(const SumPlan& p, const PhotonMap& photons = {});

/// B <- (A + B) mod 2^k with carry[k-1] holding the overflow, over
/// registers A, B, carry. Tally: 3k-2 C2X and 2k-1 CX.
Circuit synth_rca(unsigned k, const PhotonMap& photons = {});

/// Flag phase then correction phase over sum_register_table(p).
Circuit synth_mod(const SumPlan& p, const PhotonMap& photons = {});

/// synth_rca followed by synth_mod over one register table; sealed.
Circuit synth_sum(std::uint32_t d, const PhotonMap& photons = {});

/// Sum over i in [d, 2(d-1)] of popcount((i mod 2^k) ^ (i mod d)).
std::uint64_t correction_cx_count(std::uint32_t d);

/// Closed-form gate classes {C(k+1)X, CkX, C2X, CX} of synth_sum(d),
/// computed without building a circuit.
CostBreakdown predicted_counts(std::uint32_t d);

/// Same formulas, but case A always counts d-1 flag gates (no credit for
/// the top-carry substitution at 2(d-1) = 2^k).
CostBreakdown table_literal_counts(std::uint32_t d);

}  // namespace qrs
