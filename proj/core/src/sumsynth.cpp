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

#include "qrs/sumsynth.hpp"

#include <bit>

#include "qrs/error.hpp"
#include "qrs/galois.hpp"

namespace qrs {

namespace {

struct SumWires {
  RegisterId a, b, carry;
  std::optional<RegisterId> checkif;
};

SumWires lookup(const RegisterTable& t) {
  return {t.id_of("A"), t.id_of("B"), t.id_of("carry"), t.find("check-if")};
}

void require_prime_dimension(std::uint32_t d) {
  if (d < 3 || !is_prime(d)) {
    throw invalid_dimension_error("SUM gate dimension must be an odd prime, got " + std::to_string(d));
  }
}

// Bit 0: carry0 = A0 B0, B0 ^= A0.
// Bit i: carry_i = maj(A_i, B_i, carry_{i-1}) via three Toffolis, then
//        B_i ^= A_i ^ carry_{i-1}.
void emit_rca(Circuit& c, const SumWires& r, unsigned k) {
  const Wire a0{r.a, 0}, b0{r.b, 0}, c0{r.carry, 0};
  c.append(Gate::ccx(a0, b0, c0));
  c.append(Gate::cx(a0, b0));
  for (unsigned i = 1; i < k; ++i) {
    const Wire a{r.a, i}, b{r.b, i}, cin{r.carry, i - 1}, cout{r.carry, i};
    c.append(Gate::ccx(a, b, cout));
    c.append(Gate::ccx(a, cin, cout));
    c.append(Gate::ccx(b, cin, cout));
    c.append(Gate::cx(a, b));
    c.append(Gate::cx(cin, b));
  }
}

void emit_mod(Circuit& c, const SumWires& r, const SumPlan& p) {
  const Wire top_carry{r.carry, p.k - 1};
  auto flag_wire = [&](const FlagRecord& f) {
    return f.checkif_slot ? Wire{*r.checkif, *f.checkif_slot} : top_carry;
  };

  for (const auto& f : p.flags) {
    if (!f.checkif_slot) continue;
    std::vector<Control> controls;
    for (unsigned bit = 0; bit < p.k; ++bit) {
      controls.push_back({Wire{r.b, bit}, ((f.pattern >> bit) & 1u) ? Polarity::positive : Polarity::zero});
    }
    if (f.needs_carry_control) controls.push_back({top_carry, Polarity::positive});
    c.append(Gate::mcx(std::move(controls), flag_wire(f)));
  }

  for (const auto& f : p.flags) {
    for (unsigned bit = 0; bit < p.k; ++bit) {
      if ((f.correction_mask >> bit) & 1u) c.append(Gate::cx(flag_wire(f), Wire{r.b, bit}));
    }
  }
}

std::string sum_note(const SumPlan& p) {
  return "SUM gate d=" + std::to_string(p.d) + ", k=" + std::to_string(p.k) + ", case " +
         (p.sum_case == SumCase::a ? "A" : "B") +
         "; carry and check-if ancillas start at 0 and are not uncomputed";
}

}  // namespace

unsigned qubits_per_qudit(std::uint64_t d) {
  if (d < 2) throw invalid_dimension_error("qudit dimension must be >= 2");
  return static_cast<unsigned>(std::bit_width(d - 1));
}

SumPlan plan(std::uint32_t d, unsigned max_qubits_per_qudit) {
  require_prime_dimension(d);
  SumPlan p;
  p.d = d;
  p.k = qubits_per_qudit(d);
  if (p.k > max_qubits_per_qudit) {
    throw invalid_dimension_error("d=" + std::to_string(d) + " needs k=" + std::to_string(p.k) +
                                  " qubits per qudit, above the limit " + std::to_string(max_qubits_per_qudit));
  }
  const std::uint32_t top = std::uint32_t{1} << p.k;
  const std::uint32_t max_sum = 2 * (d - 1);
  p.sum_case = max_sum <= top ? SumCase::a : SumCase::b;
  const bool substitute = max_sum == top;

  unsigned slot = 0;
  for (std::uint32_t i = d; i <= max_sum; ++i) {
    FlagRecord f;
    f.value = i;
    f.pattern = i % top;
    f.needs_carry_control = i >= top;
    f.correction_mask = f.pattern ^ (i % d);
    if (!(substitute && i == top)) f.checkif_slot = slot++;
    p.flags.push_back(f);
  }
  p.n_checkif = slot;
  p.n_aux = p.k + p.n_checkif;
  return p;
}

RegisterTable sum_register_table(const SumPlan& p, const PhotonMap& photons) {
  RegisterTable t;
  t.add("A", p.k, photons.data_a, RegisterRole::data_a);
  t.add("B", p.k, photons.data_b, RegisterRole::data_b);
  t.add("carry", p.k, photons.ancilla, RegisterRole::carry);
  if (p.n_checkif > 0) t.add("check-if", p.n_checkif, photons.ancilla, RegisterRole::check_if);
  return t;
}

Circuit synth_rca(unsigned k, const PhotonMap& photons) {
  if (k < 1) throw range_error("ripple-carry adder needs k >= 1");
  RegisterTable t;
  t.add("A", k, photons.data_a, RegisterRole::data_a);
  t.add("B", k, photons.data_b, RegisterRole::data_b);
  t.add("carry", k, photons.ancilla, RegisterRole::carry);
  Circuit c(std::move(t), CircuitMeta{0, "", "ripple-carry adder k=" + std::to_string(k)});
  emit_rca(c, lookup(c.registers()), k);
  c.seal();
  return c;
}

Circuit synth_mod(const SumPlan& p, const PhotonMap& photons) {
  Circuit c(sum_register_table(p, photons), CircuitMeta{p.d, "", "modulo conversion, " + sum_note(p)});
  emit_mod(c, lookup(c.registers()), p);
  c.seal();
  return c;
}

Circuit synth_sum(std::uint32_t d, const PhotonMap& photons) {
  const auto p = plan(d);
  Circuit c(sum_register_table(p, photons), CircuitMeta{d, "", sum_note(p)});
  const auto r = lookup(c.registers());
  emit_rca(c, r, p.k);
  emit_mod(c, r, p);
  c.seal();
  return c;
}

std::uint64_t correction_cx_count(std::uint32_t d) {
  require_prime_dimension(d);
  const unsigned k = qubits_per_qudit(d);
  const std::uint64_t top = std::uint64_t{1} << k;
  std::uint64_t n = 0;
  for (std::uint64_t i = d; i <= 2 * (std::uint64_t{d} - 1); ++i) n += hamming_distance(i % top, i % d, k);
  return n;
}

namespace {

CostBreakdown closed_form(std::uint32_t d, bool credit_substitution) {
  require_prime_dimension(d);
  const std::uint64_t k = qubits_per_qudit(d);
  const std::uint64_t top = std::uint64_t{1} << k;
  const std::uint64_t dd = d;

  CostBreakdown out;
  out.add(CostBreakdown::mcx_key(2), 3 * k - 2);
  out.add(CostBreakdown::mcx_key(1), 2 * k - 1 + correction_cx_count(d));
  if (2 * (dd - 1) <= top) {
    const bool substitutes = 2 * (dd - 1) == top;
    out.add(CostBreakdown::mcx_key(k), dd - 1 - (credit_substitution && substitutes ? 1 : 0));
  } else {
    out.add(CostBreakdown::mcx_key(k + 1), 2 * dd - top - 1);
    out.add(CostBreakdown::mcx_key(k), top - dd);
  }
  return out;
}

}  // namespace

CostBreakdown predicted_counts(std::uint32_t d) { return closed_form(d, true); }

CostBreakdown table_literal_counts(std::uint32_t d) { return closed_form(d, false); }

}  // namespace qrs
