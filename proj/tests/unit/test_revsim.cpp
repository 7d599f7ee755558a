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

#include <chrono>

#include "qrs/error.hpp"
#include "qrs/lowering.hpp"
#include "qrs/revsim.hpp"
#include "qrs/sumsynth.hpp"

using namespace qrs;

namespace {

RegisterTable wires_table(unsigned n) {
  RegisterTable t;
  t.add("q", n, 0, RegisterRole::work);
  return t;
}

Circuit drop_gate(const Circuit& c, std::size_t index) {
  Circuit out(c.registers(), c.meta());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != index) out.append(c[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("basis simulation") {
  Circuit c(wires_table(2));
  const auto q0 = c.registers().wire("q", 0), q1 = c.registers().wire("q", 1);
  BasisState s(c.registers());
  CHECK(simulate_basis(c, s) == s);

  c.append(Gate::x(q0));
  auto out = simulate_basis(c, s);
  CHECK(out.bit(q0));

  Circuit z(wires_table(2));
  z.append(Gate::mcx({{q0, Polarity::zero}}, q1));
  out = simulate_basis(z, BasisState(z.registers()));
  CHECK(out.bit(q1));
  BasisState one(z.registers());
  one.set_bit(q0, true);
  CHECK_FALSE(simulate_basis(z, one).bit(q1));
}

TEST_CASE("non-permutation gates are rejected by index") {
  Circuit c(wires_table(2));
  const auto q0 = c.registers().wire("q", 0);
  c.append(Gate::x(q0));
  c.append(Gate::h(q0));
  CHECK_THROWS_WITH_AS(simulate_basis(c, BasisState(c.registers())), doctest::Contains("gate 1"),
                       unsupported_gate_error);
}

TEST_CASE("simulation is deterministic and does not alter its input") {
  const auto c = synth_sum(11);
  BasisState s(c.registers());
  s.set_value(c.registers().id_of("A"), 9);
  s.set_value(c.registers().id_of("B"), 8);
  const BasisState copy = s;
  const auto r1 = simulate_basis(c, s);
  const auto r2 = simulate_basis(c, s);
  CHECK(s == copy);
  CHECK(r1 == r2);
  CHECK(r1.value(c.registers().id_of("B")) == 6);
}

TEST_CASE("truth tables") {
  Circuit cx(wires_table(2));
  const auto q0 = cx.registers().wire("q", 0), q1 = cx.registers().wire("q", 1);
  cx.append(Gate::cx(q0, q1));
  const std::vector<Wire> w{q0, q1};
  CHECK(truth_table(cx, w) == std::vector<std::uint32_t>{0b00, 0b11, 0b10, 0b01});

  Circuit c3(wires_table(4));
  const auto& t = c3.registers();
  c3.append(Gate::mcx({{t.wire("q", 0), Polarity::positive},
                       {t.wire("q", 1), Polarity::positive},
                       {t.wire("q", 2), Polarity::positive}},
                      t.wire("q", 3)));
  const auto tt = truth_table(c3, t.wires(0));
  for (std::uint32_t v = 0; v < 16; ++v) CHECK(tt[v] == ((v & 7) == 7 ? v ^ 8 : v));

  const auto rca = synth_rca(2);
  std::vector<Wire> ab = rca.registers().wires(rca.registers().id_of("A"));
  for (const auto& x : rca.registers().wires(rca.registers().id_of("B"))) ab.push_back(x);
  const auto add = truth_table(rca, ab);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) CHECK(add[a | (b << 2)] == (a | (((a + b) % 4) << 2)));
  }

  Circuit wide(wires_table(25));
  CHECK_THROWS_AS(truth_table(wide, wide.registers().wires(0)), resource_limit_error);
}

TEST_CASE("verify_sum passes for every prime up to 61") {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t d : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u}) {
    const auto r = verify_sum(d, synth_sum(d));
    CAPTURE(r.summary());
    CHECK(r.verified());
    CHECK(r.total_cases == std::uint64_t{d} * d);
  }
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 60.0);
}

TEST_CASE("deleting a correction CX fails exactly on the affected sums") {
  const auto c = synth_sum(5);
  // The last gate is a CX of the value-8 correction (IXX) from the top carry.
  const std::size_t last = c.size() - 1;
  REQUIRE(c[last].arity() == 1);
  const auto r = verify_sum(5, drop_gate(c, last));
  CHECK_FALSE(r.verified());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].a == 4);
  CHECK(r.failures[0].b == 4);

  // A CX of the value-6 correction (XXX) breaks the three pairs summing to 6.
  std::size_t value6 = 0;
  const auto& t = c.registers();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].arity() == 1 && c[i].controls[0].wire == t.wire("check-if", 1)) value6 = i;
  }
  REQUIRE(value6 != 0);
  const auto r6 = verify_sum(5, drop_gate(c, value6));
  REQUIRE(r6.failures.size() == 3);
  for (const auto& f : r6.failures) CHECK(f.a + f.b == 6);
  CHECK(r6.failures[0].a < r6.failures[1].a);
}

TEST_CASE("report fields") {
  const auto r = verify_sum(7, synth_sum(7));
  CHECK(r.d == 7);
  CHECK(r.elapsed_seconds >= 0.0);
  CHECK(r.dirty_cases > 0);
  CHECK(r.summary().find("49/49") != std::string::npos);
}
