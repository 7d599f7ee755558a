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

// Exhaustive computational-basis simulation of permutation circuits
// (X and MCX with polarities). This is the verification oracle for every
// synthesized SUM, modulo and GF(2^m) circuit.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qrs/circuit.hpp"

namespace qrs {

class BasisState {
 public:
  explicit BasisState(const RegisterTable& table);

  unsigned width() const { return static_cast<unsigned>(bits_.size()); }
  bool bit(const Wire& w) const { return bits_.at(index(w)) != 0; }
  void set_bit(const Wire& w, bool v) { bits_.at(index(w)) = v ? 1 : 0; }

  /// Register value with wire i as bit i.
  std::uint64_t value(RegisterId reg) const;
  void set_value(RegisterId reg, std::uint64_t v);

  std::span<std::uint8_t> raw() { return bits_; }
  std::span<const std::uint8_t> raw() const { return bits_; }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  unsigned index(const Wire& w) const;

  std::vector<unsigned> offsets_;
  std::vector<unsigned> widths_;
  std::vector<std::uint8_t> bits_;
};

/// Applies every gate in order. Throws unsupported_gate_error naming the
/// first gate that is not X or MCX.
BasisState simulate_basis(const Circuit& c, BasisState s);

struct SumFailure {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t expected = 0;
  std::uint64_t got = 0;
  std::uint64_t a_after = 0;

  friend bool operator==(const SumFailure&, const SumFailure&) = default;
};

struct VerificationReport {
  std::uint32_t d = 0;
  std::uint64_t total_cases = 0;
  std::vector<SumFailure> failures;  // sorted by (a, b)
  std::uint64_t dirty_cases = 0;     // cases leaving any ancilla nonzero
  std::map<std::string, std::uint64_t> dirty_by_register;
  double elapsed_seconds = 0.0;

  bool verified() const { return failures.empty(); }
  std::string summary() const;
};

/// Runs all d^2 inputs (A, B) with ancillas at 0 and checks
/// B' = (A + B) mod d and A' = A. Ancilla final values are tallied only.
VerificationReport verify_sum(std::uint32_t d, const Circuit& c);

inline constexpr unsigned kMaxTruthTableWidth = 24;

/// Input -> output map over `wires` (bit i of an index is wires[i]); every
/// other wire starts at 0. Throws resource_limit_error above 24 wires.
std::vector<std::uint32_t> truth_table(const Circuit& c, std::span<const Wire> wires);

}  // namespace qrs
