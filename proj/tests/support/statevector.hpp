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

// Dense statevector simulator for small {X, H, T, Tdag, MCX} circuits.
// Test-only: used to check lowered networks up to global phase.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qrs/circuit.hpp"

namespace qrs::testing {

using amp = std::complex<double>;

class StateVector {
 public:
  StateVector(const RegisterTable& table, std::uint64_t basis)
      : table_(table), amps_(std::size_t{1} << table.total_width(), amp{0, 0}) {
    amps_.at(basis) = 1;
  }

  const std::vector<amp>& amplitudes() const { return amps_; }

  void apply(const Gate& g) {
    const std::uint64_t t = std::uint64_t{1} << table_.flat_index(g.targets.at(0));
    switch (g.kind) {
      case GateKind::x:
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
          if (!(i & t)) std::swap(amps_[i], amps_[i | t]);
        }
        break;
      case GateKind::mcx: {
        std::uint64_t need = 0, care = 0;
        for (const auto& c : g.controls) {
          const std::uint64_t bit = std::uint64_t{1} << table_.flat_index(c.wire);
          care |= bit;
          if (c.polarity == Polarity::positive) need |= bit;
        }
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
          if (!(i & t) && (i & care) == need) std::swap(amps_[i], amps_[i | t]);
        }
        break;
      }
      case GateKind::h: {
        const double s = 1.0 / std::sqrt(2.0);
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
          if (i & t) continue;
          const amp a = amps_[i], b = amps_[i | t];
          amps_[i] = s * (a + b);
          amps_[i | t] = s * (a - b);
        }
        break;
      }
      case GateKind::t:
      case GateKind::tdag: {
        const double sign = g.kind == GateKind::t ? 1.0 : -1.0;
        const amp phase = std::polar(1.0, sign * std::numbers::pi / 4);
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
          if (i & t) amps_[i] *= phase;
        }
        break;
      }
      default:
        throw std::logic_error("statevector: unsupported gate");
    }
  }

  void run(const Circuit& c) {
    for (const auto& g : c.gates()) apply(g);
  }

 private:
  const RegisterTable& table_;
  std::vector<amp> amps_;
};

/// Column `basis` of the circuit's unitary.
inline std::vector<amp> unitary_column(const Circuit& c, std::uint64_t basis) {
  StateVector s(c.registers(), basis);
  s.run(c);
  return s.amplitudes();
}

/// True when the circuit acts as the basis permutation `perm` up to one
/// global phase shared by every column.
template <typename Perm>
bool equals_permutation_up_to_phase(const Circuit& c, Perm perm, double tol = 1e-9) {
  const std::uint64_t dim = std::uint64_t{1} << c.registers().total_width();
  std::optional<amp> phase;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto col = unitary_column(c, b);
    const std::uint64_t want = perm(b);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if (i == want) {
        if (!phase) phase = col[i];
        if (std::abs(col[i] - *phase) > tol) return false;
      } else if (std::abs(col[i]) > tol) {
        return false;
      }
    }
  }
  return phase && std::abs(std::abs(*phase) - 1.0) < tol;
}

}  // namespace qrs::testing
