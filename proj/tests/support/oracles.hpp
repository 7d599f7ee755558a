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

// Reference computations written independently of the library code they
// check. Slow on purpose.

#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace qrs::oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p < n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

/// Schoolbook GF(2)[x] product reduced bit by bit.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, unsigned m) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1u) acc ^= std::uint64_t{a} << i;
  }
  for (int bit = 2 * static_cast<int>(m); bit >= static_cast<int>(m); --bit) {
    if ((acc >> bit) & 1u) acc ^= std::uint64_t{poly} << (bit - static_cast<int>(m));
  }
  return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t gf_pow_alpha(std::uint64_t e, std::uint32_t poly, unsigned m) {
  std::uint32_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) v = gf_mul(v, 2, poly, m);
  return v;
}

inline unsigned bits_for(std::uint64_t d) {
  unsigned k = 0;
  while ((std::uint64_t{1} << k) < d) ++k;
  return k;
}

/// Gate classes of the SUM circuit, enumerated value by value.
inline std::map<std::string, std::uint64_t> sum_gate_classes(std::uint32_t d) {
  const unsigned k = bits_for(d);
  const std::uint32_t two_k = 1u << k;
  std::map<std::string, std::uint64_t> out;
  auto bump = [&](const std::string& key, std::uint64_t n) {
    if (n) out[key] += n;
  };
  bump("C2X", 3 * k - 2);
  bump("C1X", 2 * k - 1);
  for (std::uint32_t i = d; i <= 2 * (d - 1); ++i) {
    const bool carry_is_flag = i == two_k && 2 * (d - 1) == two_k;
    if (!carry_is_flag) bump("C" + std::to_string(i >= two_k ? k + 1 : k) + "X", 1);
    bump("C1X", static_cast<std::uint64_t>(std::popcount((i % two_k) ^ (i % d))));
  }
  return out;
}

}  // namespace qrs::oracle
