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

// Quantum Reed-Solomon encoder building blocks over GF(2^m): the classical
// code pair (C, C-perp), the controlled multiply-add gates
// C(alpha^n): |a>|b> -> |a>|alpha^n a + b>, and their CX-only synthesis.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qrs/circuit.hpp"
#include "qrs/galois.hpp"

namespace qrs {

/// Coefficients over the field, lowest degree first.
using GFPoly = std::vector<std::uint32_t>;
/// Row-major matrix over the field.
using GFMatrix = std::vector<std::vector<std::uint32_t>>;

GFPoly poly_mul(const FieldSpec& f, const GFPoly& a, const GFPoly& b);
/// prod over roots r of (x - r), monic.
GFPoly poly_from_roots(const FieldSpec& f, std::span<const std::uint32_t> roots);
std::uint32_t poly_eval(const FieldSpec& f, const GFPoly& p, std::uint32_t x);

struct RSCodeSpec {
  FieldSpec field = FieldSpec::binary_extension(2);
  unsigned n = 0;  // 2^m - 1
  unsigned k = 0;  // dimension of C
  /// Generator of C-perp: (x - 1)(x - alpha)...(x - alpha^(k-1)).
  GFPoly dual_generator;
  /// Generator of C: (x - alpha)(x - alpha^2)...(x - alpha^(n-k)).
  GFPoly generator;
  GFMatrix g;  // k x n generator of C, systematic [I | P]
  GFMatrix h;  // (n-k) x n parity check of C; row r holds x^r * dual_generator
  bool systematic = true;

  unsigned m() const { return field.degree(); }
};

RSCodeSpec build_code(const FieldSpec& field, unsigned k);
RSCodeSpec build_code(unsigned m, unsigned k, const Config* config = nullptr);

/// message * G.
std::vector<std::uint32_t> encode(const RSCodeSpec& code, std::span<const std::uint32_t> message);
/// H * word^T.
std::vector<std::uint32_t> syndrome(const RSCodeSpec& code, std::span<const std::uint32_t> word);
/// True when G * H^T vanishes.
bool generator_parity_consistent(const RSCodeSpec& code);

/// "C1", "Calpha", "Calpha^2", ...
std::string cmuladd_name(std::uint32_t exponent);

/// Sum over p < m of popcount(alpha^(n+p)).
std::uint64_t cmuladd_formula_count(const FieldSpec& f, std::uint32_t exponent);

/// CX-only circuit over registers "a" and "b" (m wires each) with one CX
/// a[p] -> b[j] for every set entry of mul_by_alpha_matrix(f, exponent).
Circuit synth_cmuladd(const FieldSpec& f, std::uint32_t exponent);

struct CMulAddCheck {
  bool ok = true;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;  // (a, b)
  std::uint32_t expected = 0;
  std::uint32_t got = 0;
};

/// Exhaustive check over all 2^(2m) inputs that (a, b) -> (a, alpha^n a + b),
/// using the first two registers of `c` as a and b.
CMulAddCheck verify_cmuladd(const Circuit& c, const FieldSpec& f, std::uint32_t exponent);

/// DFT on the k - (n-k) ... k-1 message qudits, then one CMulAdd from
/// message qudit i to parity qudit j for every nonzero entry of the
/// parity part of the systematic G. Requires 2k > n.
Circuit synth_encoder_gf2m(const RSCodeSpec& code);

/// Every CMulAdd gate replaced by its synth_cmuladd CX network between the
/// same registers.
Circuit expand_cmuladd(const Circuit& c);

struct EncoderGateRow {
  std::size_t gate_index = 0;
  std::string gate;
  std::uint32_t exponent = 0;
  std::uint64_t cx_count = 0;
  std::uint64_t formula_count = 0;
  bool verified = false;
};

std::vector<EncoderGateRow> encoder_gate_rows(const Circuit& encoder, const FieldSpec& f);
/// CSV with columns gate,exponent,cx-count,formula-count,verified.
std::string encoder_report_csv(std::span<const EncoderGateRow> rows);

}  // namespace qrs
