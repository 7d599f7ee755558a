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

// Exact arithmetic over prime fields GF(d) and binary extension fields
// GF(2^m), plus the Hamming helpers every gate-count formula is built on.
//
// Bit order: bit 0 is the least-significant bit of an integer value. For an
// extension field element, bit p is the coefficient of alpha^p in its
// polynomial representation, so alpha itself is 0b10.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrs/config.hpp"

namespace qrs {

enum class FieldKind { prime, binary_extension };

/// Largest supported extension degree.
inline constexpr unsigned kMaxExtensionDegree = 16;

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// Bitmask polynomials over GF(2): bit i is the coefficient of x^i.
int poly_degree(std::uint64_t poly);
bool is_irreducible_gf2(std::uint64_t poly);
bool is_primitive_gf2(std::uint64_t poly);

/// Built-in primitive polynomial for 1 <= m <= 16 (x^2+x+1 for m = 2). A
/// `gf2m.poly.<m>` entry in `config` overrides it.
std::uint32_t default_primitive_polynomial(unsigned m, const Config* config = nullptr);

class FieldSpec {
 public:
  static FieldSpec prime(std::uint32_t d);
  static FieldSpec binary_extension(unsigned m, std::uint32_t primitive_poly);
  static FieldSpec binary_extension(unsigned m, const Config* config = nullptr);

  FieldKind kind() const { return kind_; }
  bool is_prime() const { return kind_ == FieldKind::prime; }
  /// Number of elements: d, or 2^m.
  std::uint32_t order() const { return order_; }
  /// Extension degree m (1 for prime fields).
  unsigned degree() const { return degree_; }
  /// Primitive polynomial bitmask (0 for prime fields).
  std::uint32_t polynomial() const { return poly_; }

  /// Bit-vector of alpha^i for any i >= 0 (exponent taken mod 2^m - 1).
  std::uint32_t alpha_pow(std::uint64_t i) const;
  /// Discrete log of a nonzero extension element.
  unsigned log_alpha(std::uint32_t value) const;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t inv(std::uint32_t x) const;

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_ && a.poly_ == b.poly_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = alpha^i, i < 2^m - 1
    std::vector<std::uint32_t> log;  // log[v] for v != 0
  };

  FieldSpec() = default;
  void check(std::uint32_t v) const;

  FieldKind kind_ = FieldKind::prime;
  std::uint32_t order_ = 0;
  unsigned degree_ = 1;
  std::uint32_t poly_ = 0;
  std::shared_ptr<const Tables> tables_;
};

/// Carry-less product of two extension elements reduced by `poly`. Does not
/// use the exp/log tables.
std::uint32_t gf2_poly_mulmod(std::uint32_t x, std::uint32_t y, std::uint32_t poly);

class FieldElement {
 public:
  FieldElement(FieldSpec field, std::uint32_t value);

  const FieldSpec& field() const { return field_; }
  std::uint32_t value() const { return value_; }

  /// alpha^exponent, or nullopt for zero (extension fields only).
  std::optional<unsigned> exponent() const;
  static FieldElement from_exponent(const FieldSpec& field, std::uint64_t i);

  /// m-bit vector representation, index p = coefficient of alpha^p.
  std::vector<std::uint8_t> bits() const;
  static FieldElement from_bits(const FieldSpec& field, const std::vector<std::uint8_t>& bits);

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  FieldSpec field_;
  std::uint32_t value_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);

/// Dense m x m matrix over GF(2), stored column-wise as bitmasks.
class BitMatrix {
 public:
  explicit BitMatrix(unsigned size, std::vector<std::uint32_t> columns);

  unsigned size() const { return size_; }
  bool at(unsigned row, unsigned col) const { return ((columns_.at(col) >> row) & 1u) != 0; }
  std::uint32_t column(unsigned col) const { return columns_.at(col); }
  /// M * v over GF(2).
  std::uint32_t apply(std::uint32_t v) const;
  unsigned popcount() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  unsigned size_;
  std::vector<std::uint32_t> columns_;
};

/// Matrix of a -> alpha^n * a; column p is the bit-vector of alpha^(n+p).
BitMatrix mul_by_alpha_matrix(const FieldSpec& field, std::uint64_t n);

unsigned hamming_weight(std::uint64_t v, unsigned width);
unsigned hamming_distance(std::uint64_t a, std::uint64_t b, unsigned width);

}  // namespace qrs
