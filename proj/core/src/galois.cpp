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

#include "qrs/galois.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "qrs/error.hpp"

namespace qrs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

int poly_degree(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

namespace {

std::uint64_t gf2_poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

// First i >= 1 with x^i == 1 mod poly, or 0 if none up to `limit`. Expects
// deg(poly) >= 2 and poly(0) = 1.
std::uint64_t order_of_x(std::uint64_t poly, std::uint64_t limit) {
  const int m = poly_degree(poly);
  const std::uint64_t top = std::uint64_t{1} << m;
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    v <<= 1;
    if (v & top) v ^= poly;
    if (v == 1) return i;
  }
  return 0;
}

constexpr std::array<std::uint32_t, kMaxExtensionDegree + 1> kDefaultPolys = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

}  // namespace

bool is_irreducible_gf2(std::uint64_t poly) {
  const int m = poly_degree(poly);
  if (m < 1) return false;
  if (m == 1) return true;
  // Trial division by every polynomial of degree 1..m/2.
  for (std::uint64_t f = 2; poly_degree(f) <= m / 2; ++f) {
    if (gf2_poly_mod(poly, f) == 0) return false;
  }
  return true;
}

bool is_primitive_gf2(std::uint64_t poly) {
  const int m = poly_degree(poly);
  if (m < 1 || m > static_cast<int>(kMaxExtensionDegree)) return false;
  if (!is_irreducible_gf2(poly)) return false;
  const std::uint64_t group = (std::uint64_t{1} << m) - 1;
  if (m == 1) return true;  // GF(2)*: alpha = 1 generates the single unit.
  return order_of_x(poly, group) == group;
}

std::uint32_t default_primitive_polynomial(unsigned m, const Config* config) {
  if (m < 1 || m > kMaxExtensionDegree) {
    throw unsupported_field_error("extension degree " + std::to_string(m) + " outside [1, " +
                                  std::to_string(kMaxExtensionDegree) + "]");
  }
  if (config != nullptr) {
    if (auto v = config->get_int("gf2m.poly." + std::to_string(m))) {
      return static_cast<std::uint32_t>(*v);
    }
  }
  return kDefaultPolys[m];
}

std::uint32_t gf2_poly_mulmod(std::uint32_t x, std::uint32_t y, std::uint32_t poly) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if ((y >> i) & 1u) acc ^= std::uint64_t{x} << i;
  }
  return static_cast<std::uint32_t>(gf2_poly_mod(acc, poly));
}

FieldSpec FieldSpec::prime(std::uint32_t d) {
  if (!qrs::is_prime(d)) {
    throw invalid_dimension_error("GF(" + std::to_string(d) + "): " + std::to_string(d) + " is not prime");
  }
  FieldSpec f;
  f.kind_ = FieldKind::prime;
  f.order_ = d;
  f.degree_ = 1;
  return f;
}

FieldSpec FieldSpec::binary_extension(unsigned m, std::uint32_t primitive_poly) {
  if (m < 1 || m > kMaxExtensionDegree) {
    throw unsupported_field_error("extension degree " + std::to_string(m) + " outside [1, " +
                                  std::to_string(kMaxExtensionDegree) + "]");
  }
  if (poly_degree(primitive_poly) != static_cast<int>(m)) {
    throw unsupported_field_error("polynomial 0x" + [&] {
      std::ostringstream s;
      s << std::hex << primitive_poly;
      return s.str();
    }() + " does not have degree " + std::to_string(m));
  }
  if (!is_primitive_gf2(primitive_poly)) {
    std::ostringstream s;
    s << "polynomial 0x" << std::hex << primitive_poly << " is not primitive over GF(2)";
    throw unsupported_field_error(s.str());
  }

  FieldSpec f;
  f.kind_ = FieldKind::binary_extension;
  f.degree_ = m;
  f.order_ = std::uint32_t{1} << m;
  f.poly_ = primitive_poly;

  auto tables = std::make_shared<Tables>();
  const std::uint32_t group = f.order_ - 1;
  tables->exp.resize(group);
  tables->log.assign(f.order_, 0);
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    tables->exp[i] = v;
    tables->log[v] = i;
    v <<= 1;
    if (v & f.order_) v ^= primitive_poly;
  }
  f.tables_ = std::move(tables);
  return f;
}

FieldSpec FieldSpec::binary_extension(unsigned m, const Config* config) {
  return binary_extension(m, default_primitive_polynomial(m, config));
}

void FieldSpec::check(std::uint32_t v) const {
  if (v >= order_) {
    throw range_error("value " + std::to_string(v) + " not in " + describe());
  }
}

std::uint32_t FieldSpec::alpha_pow(std::uint64_t i) const {
  if (is_prime()) throw unsupported_field_error("alpha powers need an extension field, got " + describe());
  return tables_->exp[i % tables_->exp.size()];
}

unsigned FieldSpec::log_alpha(std::uint32_t value) const {
  if (is_prime()) throw unsupported_field_error("discrete log needs an extension field, got " + describe());
  check(value);
  if (value == 0) throw range_error("log of zero in " + describe());
  return tables_->log[value];
}

std::uint32_t FieldSpec::add(std::uint32_t x, std::uint32_t y) const {
  check(x);
  check(y);
  if (is_prime()) return static_cast<std::uint32_t>((std::uint64_t{x} + y) % order_);
  return x ^ y;
}

std::uint32_t FieldSpec::sub(std::uint32_t x, std::uint32_t y) const {
  check(x);
  check(y);
  if (is_prime()) return static_cast<std::uint32_t>((std::uint64_t{x} + order_ - y) % order_);
  return x ^ y;
}

std::uint32_t FieldSpec::mul(std::uint32_t x, std::uint32_t y) const {
  check(x);
  check(y);
  if (is_prime()) return static_cast<std::uint32_t>((std::uint64_t{x} * y) % order_);
  if (x == 0 || y == 0) return 0;
  const auto& t = *tables_;
  return t.exp[(t.log[x] + t.log[y]) % t.exp.size()];
}

std::uint32_t FieldSpec::inv(std::uint32_t x) const {
  check(x);
  if (x == 0) throw range_error("zero has no inverse in " + describe());
  if (is_prime()) {
    // x^(d-2) mod d
    std::uint64_t result = 1, base = x, e = order_ - 2;
    while (e) {
      if (e & 1u) result = result * base % order_;
      base = base * base % order_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }
  const auto& t = *tables_;
  const std::uint32_t group = static_cast<std::uint32_t>(t.exp.size());
  return t.exp[(group - t.log[x]) % group];
}

std::string FieldSpec::describe() const {
  std::ostringstream s;
  if (is_prime()) {
    s << "GF(" << order_ << ")";
  } else {
    s << "GF(2^" << degree_ << ", poly=0x" << std::hex << poly_ << ")";
  }
  return s.str();
}

FieldElement::FieldElement(FieldSpec field, std::uint32_t value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_.order()) {
    throw range_error("value " + std::to_string(value_) + " not in " + field_.describe());
  }
}

std::optional<unsigned> FieldElement::exponent() const {
  if (value_ == 0) {
    if (field_.is_prime()) throw unsupported_field_error("exponent representation needs an extension field");
    return std::nullopt;
  }
  return field_.log_alpha(value_);
}

FieldElement FieldElement::from_exponent(const FieldSpec& field, std::uint64_t i) {
  return FieldElement(field, field.alpha_pow(i));
}

std::vector<std::uint8_t> FieldElement::bits() const {
  if (field_.is_prime()) throw unsupported_field_error("bit-vector representation needs an extension field");
  std::vector<std::uint8_t> out(field_.degree());
  for (unsigned p = 0; p < field_.degree(); ++p) out[p] = (value_ >> p) & 1u;
  return out;
}

FieldElement FieldElement::from_bits(const FieldSpec& field, const std::vector<std::uint8_t>& bits) {
  if (field.is_prime()) throw unsupported_field_error("bit-vector representation needs an extension field");
  if (bits.size() != field.degree()) {
    throw range_error("expected " + std::to_string(field.degree()) + " bits, got " + std::to_string(bits.size()));
  }
  std::uint32_t v = 0;
  for (unsigned p = 0; p < bits.size(); ++p) {
    if (bits[p] > 1) throw range_error("bit value must be 0 or 1");
    v |= std::uint32_t{bits[p]} << p;
  }
  return FieldElement(field, v);
}

namespace {
void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (!(x.field() == y.field())) {
    throw field_mismatch_error("operands live in " + x.field().describe() + " and " + y.field().describe());
  }
}
}  // namespace

FieldElement add(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field(), x.field().add(x.value(), y.value()));
}

FieldElement mul(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field(), x.field().mul(x.value(), y.value()));
}

BitMatrix::BitMatrix(unsigned size, std::vector<std::uint32_t> columns) : size_(size), columns_(std::move(columns)) {
  if (columns_.size() != size_) throw range_error("BitMatrix needs exactly one column per dimension");
  const std::uint32_t mask = size_ >= 32 ? ~0u : ((1u << size_) - 1);
  for (auto c : columns_) {
    if (c & ~mask) throw range_error("BitMatrix column has bits outside the matrix");
  }
}

std::uint32_t BitMatrix::apply(std::uint32_t v) const {
  std::uint32_t out = 0;
  for (unsigned p = 0; p < size_; ++p) {
    if ((v >> p) & 1u) out ^= columns_[p];
  }
  return out;
}

unsigned BitMatrix::popcount() const {
  unsigned n = 0;
  for (auto c : columns_) n += static_cast<unsigned>(std::popcount(c));
  return n;
}

BitMatrix mul_by_alpha_matrix(const FieldSpec& field, std::uint64_t n) {
  if (field.is_prime()) {
    throw unsupported_field_error("multiplier matrices need an extension field, got " + field.describe());
  }
  if (n >= field.order() - 1) {
    throw range_error("exponent " + std::to_string(n) + " outside [0, " + std::to_string(field.order() - 1) + ")");
  }
  std::vector<std::uint32_t> cols(field.degree());
  for (unsigned p = 0; p < field.degree(); ++p) cols[p] = field.alpha_pow(n + p);
  return BitMatrix(field.degree(), std::move(cols));
}

unsigned hamming_weight(std::uint64_t v, unsigned width) {
  if (width > 64) throw range_error("Hamming width above 64");
  if (width < 64 && (v >> width) != 0) {
    throw range_error("value " + std::to_string(v) + " does not fit in " + std::to_string(width) + " bits");
  }
  return static_cast<unsigned>(std::popcount(v));
}

unsigned hamming_distance(std::uint64_t a, std::uint64_t b, unsigned width) {
  hamming_weight(a, width);
  hamming_weight(b, width);
  return hamming_weight(a ^ b, width);
}

}  // namespace qrs
