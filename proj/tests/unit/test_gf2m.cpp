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

#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "qrs/error.hpp"
#include "qrs/gf2m.hpp"
#include "qrs/lowering.hpp"

using namespace qrs;

namespace {

Circuit drop_gate(const Circuit& c, std::size_t index) {
  Circuit out(c.registers(), c.meta());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != index) out.append(c[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("[3,2] code over GF(4)") {
  const auto code = build_code(2, 2);
  const std::uint32_t a = 0b10, a2 = 0b11;
  CHECK(code.dual_generator == GFPoly{a, a2, 1});  // x^2 + (1+a)x + a
  CHECK(code.generator == GFPoly{a, 1});
  CHECK(code.g == GFMatrix{{1, 0, a}, {0, 1, a2}});
  CHECK(code.h == GFMatrix{{a, a2, 1}});
  CHECK(generator_parity_consistent(code));
}

TEST_CASE("code construction properties") {
  for (unsigned m = 2; m <= 4; ++m) {
    const auto f = FieldSpec::binary_extension(m);
    const unsigned n = f.order() - 1;
    for (unsigned k = 1; k < n; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const auto code = build_code(f, k);
      CHECK(code.generator.size() == n - k + 1);
      CHECK(code.dual_generator.size() == k + 1);
      CHECK(code.g.size() == k);
      CHECK(code.h.size() == n - k);
      CHECK(generator_parity_consistent(code));
      for (unsigned i = 1; i <= n - k; ++i) CHECK(poly_eval(f, code.generator, f.alpha_pow(i)) == 0);
      for (unsigned i = 0; i < k; ++i) CHECK(poly_eval(f, code.dual_generator, f.alpha_pow(i)) == 0);
      std::vector<std::uint32_t> msg(k, 0);
      CHECK(syndrome(code, encode(code, msg)) == std::vector<std::uint32_t>(n - k, 0));
      for (unsigned i = 0; i < k; ++i) {
        std::fill(msg.begin(), msg.end(), 0);
        msg[i] = 1;
        const auto word = encode(code, msg);
        CHECK(syndrome(code, word) == std::vector<std::uint32_t>(n - k, 0));
        for (unsigned j = 0; j < k; ++j) CHECK(word[j] == (i == j ? 1u : 0u));
        // Every codeword is a multiple of g(x): it vanishes at the roots of g.
        for (unsigned r = 1; r <= n - k; ++r) CHECK(poly_eval(f, GFPoly(word.begin(), word.end()), f.alpha_pow(r)) == 0);
      }
    }
  }
  CHECK_THROWS_AS(build_code(2, 0), range_error);
  CHECK_THROWS_AS(build_code(2, 3), range_error);
  CHECK_THROWS_AS(build_code(FieldSpec::prime(5), 2), unsupported_field_error);
}

TEST_CASE("CMulAdd family over GF(4)") {
  const auto f = FieldSpec::binary_extension(2);
  CHECK(count(synth_cmuladd(f, 0)).cx() == 2);
  CHECK(count(synth_cmuladd(f, 1)).cx() == 3);
  CHECK(count(synth_cmuladd(f, 2)).cx() == 3);
  for (std::uint32_t n = 0; n < 3; ++n) {
    const auto c = synth_cmuladd(f, n);
    CHECK(verify_cmuladd(c, f, n).ok);
    CHECK(count(c).total() == count(c).cx());
  }
  CHECK(cmuladd_name(0) == "C1");
  CHECK(cmuladd_name(1) == "Calpha");
  CHECK(cmuladd_name(2) == "Calpha^2");
}

TEST_CASE("a deleted CX is caught with a witness") {
  const auto f = FieldSpec::binary_extension(2);
  const auto c = synth_cmuladd(f, 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto broken = drop_gate(c, i);
    const auto check = verify_cmuladd(broken, f, 1);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.witness.has_value());
    const auto [a, b] = *check.witness;
    CHECK(check.expected == (oracle::gf_mul(0b10, a, 0b111, 2) ^ b));
    CHECK(check.got != check.expected);
  }
  CHECK_FALSE(verify_cmuladd(synth_cmuladd(f, 2), f, 1).ok);
}

TEST_CASE("GF(8) C1 is verified over all 64 pairs") {
  const auto f = FieldSpec::binary_extension(3);
  CHECK(verify_cmuladd(synth_cmuladd(f, 0), f, 0).ok);
  CHECK(count(synth_cmuladd(f, 0)).cx() == 3);
}

TEST_CASE("CX count formula and semantics for every m <= 8 and exponent") {
  for (unsigned m = 1; m <= 8; ++m) {
    const auto f = FieldSpec::binary_extension(m);
    const std::uint32_t n_max = std::max<std::uint32_t>(f.order() - 1, 1);
    bool counts = true, semantics = true;
    for (std::uint32_t n = 0; n < n_max; ++n) {
      const auto c = synth_cmuladd(f, n);
      std::uint64_t expected = 0;
      for (unsigned p = 0; p < m; ++p) expected += std::popcount(oracle::gf_pow_alpha(n + p, f.polynomial(), m));
      counts &= count(c).cx() == expected && cmuladd_formula_count(f, n) == expected;
      if (m <= 6 || n % 17 == 0) semantics &= verify_cmuladd(c, f, n).ok;
    }
    CAPTURE(m);
    CHECK(counts);
    CHECK(semantics);
  }
}

TEST_CASE("GF(4) encoder") {
  const auto code = build_code(2, 2);
  const auto enc = synth_encoder_gf2m(code);
  const auto tally = count(enc);
  CHECK(tally == CostBreakdown{{"DFT", 1}, {"CMulAdd", 2}});
  CHECK(enc[0].kind == GateKind::dft);
  CHECK(enc[0].targets == enc.registers().wires(1));
  CHECK(enc[1].exponent == 1);
  CHECK(enc[2].exponent == 2);
  CHECK(enc.meta().note.find("worked GF(4)") != std::string::npos);

  const auto rows = encoder_gate_rows(enc, code.field);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].gate == "Calpha");
  CHECK(rows[1].gate == "Calpha^2");
  std::uint64_t sum = 0;
  for (const auto& r : rows) {
    CHECK(r.verified);
    CHECK(r.cx_count == r.formula_count);
    sum += r.cx_count;
  }
  const auto expanded = expand_cmuladd(enc);
  CHECK(count(expanded).cx() == sum);
  CHECK(count(expanded).get("CMulAdd") == 0);
  CHECK(encoder_report_csv(rows) == "gate,exponent,cx-count,formula-count,verified\nCalpha,1,3,3,true\n"
                                    "Calpha^2,2,3,3,true\n");
}

TEST_CASE("encoders contain no multi-control gates and lower identically") {
  for (unsigned m = 2; m <= 8; ++m) {
    const auto f = FieldSpec::binary_extension(m);
    const auto code = build_code(f, (f.order()) / 2);
    const auto enc = synth_encoder_gf2m(code);
    const auto expanded = expand_cmuladd(enc);
    CAPTURE(m);
    for (const auto& g : expanded.gates()) CHECK(g.arity() <= 1);
    const LoweringOptions pass{true};
    const auto general = lower_circuit(expanded, Strategy::general(), pass);
    const auto mux = lower_circuit(expanded, Strategy::multiplexed(), pass);
    CHECK(general.cx() == mux.cx());
    CHECK(general.cx() == count(expanded).cx());
    if (m > 2) CHECK(enc.meta().note.find("generalized") != std::string::npos);
  }
}

TEST_CASE("unsupported encoder configurations are explicit errors") {
  CHECK_THROWS_AS(synth_encoder_gf2m(build_code(3, 3)), unsupported_configuration_error);
  CHECK_NOTHROW(synth_encoder_gf2m(build_code(3, 4)));
  CHECK_THROWS_AS(synth_cmuladd(FieldSpec::prime(5), 0), unsupported_field_error);
}
