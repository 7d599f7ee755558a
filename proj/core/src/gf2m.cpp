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

#include "qrs/gf2m.hpp"

#include <map>
#include <sstream>

#include "qrs/error.hpp"
#include "qrs/revsim.hpp"

namespace qrs {

GFPoly poly_mul(const FieldSpec& f, const GFPoly& a, const GFPoly& b) {
  if (a.empty() || b.empty()) return {};
  GFPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return out;
}

GFPoly poly_from_roots(const FieldSpec& f, std::span<const std::uint32_t> roots) {
  GFPoly p{1};
  for (auto r : roots) p = poly_mul(f, p, GFPoly{f.sub(0, r), 1});
  return p;
}

std::uint32_t poly_eval(const FieldSpec& f, const GFPoly& p, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

namespace {

// Solves A x = rhs for square invertible A.
std::vector<std::uint32_t> solve(const FieldSpec& f, GFMatrix a, std::vector<std::uint32_t> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw unsupported_configuration_error("parity-check block is singular");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const auto inv = f.inv(a[col][col]);
    for (auto& v : a[col]) v = f.mul(v, inv);
    rhs[col] = f.mul(rhs[col], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const auto factor = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
      rhs[r] = f.sub(rhs[r], f.mul(factor, rhs[col]));
    }
  }
  return rhs;
}

}  // namespace

RSCodeSpec build_code(const FieldSpec& field, unsigned k) {
  if (field.is_prime()) throw unsupported_field_error("QRS encoder over GF(2^m) needs an extension field");
  RSCodeSpec code;
  code.field = field;
  code.n = field.order() - 1;
  if (k < 1 || k >= code.n) {
    throw range_error("message length K=" + std::to_string(k) + " outside [1, " + std::to_string(code.n) + ")");
  }
  code.k = k;
  const unsigned r = code.n - k;

  std::vector<std::uint32_t> dual_roots, roots;
  for (unsigned i = 0; i < k; ++i) dual_roots.push_back(field.alpha_pow(i));
  for (unsigned i = 1; i <= r; ++i) roots.push_back(field.alpha_pow(i));
  code.dual_generator = poly_from_roots(field, dual_roots);
  code.generator = poly_from_roots(field, roots);

  code.h.assign(r, std::vector<std::uint32_t>(code.n, 0));
  for (unsigned row = 0; row < r; ++row) {
    for (unsigned i = 0; i < code.dual_generator.size(); ++i) code.h[row][row + i] = code.dual_generator[i];
  }

  // G = [I | P] with H1 + H2 P^T = 0, H = [H1 | H2] split after column k.
  GFMatrix h2(r, std::vector<std::uint32_t>(r));
  for (unsigned row = 0; row < r; ++row) {
    for (unsigned c = 0; c < r; ++c) h2[row][c] = code.h[row][k + c];
  }
  code.g.assign(k, std::vector<std::uint32_t>(code.n, 0));
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::uint32_t> rhs(r);
    for (unsigned row = 0; row < r; ++row) rhs[row] = field.sub(0, code.h[row][i]);
    const auto p = solve(field, h2, rhs);
    code.g[i][i] = 1;
    for (unsigned c = 0; c < r; ++c) code.g[i][k + c] = p[c];
  }
  return code;
}

RSCodeSpec build_code(unsigned m, unsigned k, const Config* config) {
  return build_code(FieldSpec::binary_extension(m, config), k);
}

std::vector<std::uint32_t> encode(const RSCodeSpec& code, std::span<const std::uint32_t> message) {
  if (message.size() != code.k) throw range_error("message must have K symbols");
  std::vector<std::uint32_t> out(code.n, 0);
  for (unsigned i = 0; i < code.k; ++i) {
    for (unsigned c = 0; c < code.n; ++c) out[c] = code.field.add(out[c], code.field.mul(message[i], code.g[i][c]));
  }
  return out;
}

std::vector<std::uint32_t> syndrome(const RSCodeSpec& code, std::span<const std::uint32_t> word) {
  if (word.size() != code.n) throw range_error("word must have n symbols");
  std::vector<std::uint32_t> out(code.h.size(), 0);
  for (std::size_t r = 0; r < code.h.size(); ++r) {
    for (unsigned c = 0; c < code.n; ++c) out[r] = code.field.add(out[r], code.field.mul(code.h[r][c], word[c]));
  }
  return out;
}

bool generator_parity_consistent(const RSCodeSpec& code) {
  for (const auto& row : code.g) {
    for (auto s : syndrome(code, row)) {
      if (s != 0) return false;
    }
  }
  return true;
}

std::string cmuladd_name(std::uint32_t exponent) {
  if (exponent == 0) return "C1";
  if (exponent == 1) return "Calpha";
  return "Calpha^" + std::to_string(exponent);
}

std::uint64_t cmuladd_formula_count(const FieldSpec& f, std::uint32_t exponent) {
  std::uint64_t n = 0;
  for (unsigned p = 0; p < f.degree(); ++p) n += hamming_weight(f.alpha_pow(std::uint64_t{exponent} + p), f.degree());
  return n;
}

namespace {

void emit_cmuladd(Circuit& c, const FieldSpec& f, std::uint32_t exponent, RegisterId a, RegisterId b) {
  const auto matrix = mul_by_alpha_matrix(f, exponent);
  for (unsigned p = 0; p < f.degree(); ++p) {
    for (unsigned j = 0; j < f.degree(); ++j) {
      if (matrix.at(j, p)) c.append(Gate::cx(Wire{a, p}, Wire{b, j}));
    }
  }
}

}  // namespace

Circuit synth_cmuladd(const FieldSpec& f, std::uint32_t exponent) {
  if (f.is_prime()) throw unsupported_field_error("CMulAdd needs an extension field");
  RegisterTable t;
  const auto a = t.add("a", f.degree(), 0, RegisterRole::gf_message);
  const auto b = t.add("b", f.degree(), 1, RegisterRole::gf_code);
  Circuit c(std::move(t), CircuitMeta{f.order(), "", cmuladd_name(exponent) + " over " + f.describe()});
  emit_cmuladd(c, f, exponent, a, b);
  c.seal();
  return c;
}

CMulAddCheck verify_cmuladd(const Circuit& c, const FieldSpec& f, std::uint32_t exponent) {
  const auto& t = c.registers();
  const unsigned m = f.degree();
  if (t.size() < 2 || t[0].width != m || t[1].width != m) {
    throw resolution_error("CMulAdd check needs two " + std::to_string(m) + "-wire registers");
  }
  std::vector<Wire> wires = t.wires(0);
  for (const auto& w : t.wires(1)) wires.push_back(w);
  const auto table = truth_table(c, wires);
  const std::uint32_t mask = f.order() - 1;
  const std::uint32_t multiplier = f.alpha_pow(exponent);

  CMulAddCheck check;
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const std::uint32_t out = table[a | (b << m)];
      const std::uint32_t expected = f.add(f.mul(multiplier, a), b);
      const std::uint32_t got_a = out & mask, got_b = out >> m;
      if (got_a != a || got_b != expected) {
        check.ok = false;
        check.witness = {a, b};
        check.expected = expected;
        check.got = got_b;
        return check;
      }
    }
  }
  return check;
}

Circuit synth_encoder_gf2m(const RSCodeSpec& code) {
  if (2 * code.k <= code.n) {
    throw unsupported_configuration_error("encoder needs C-perp inside C (2K > n); got K=" + std::to_string(code.k) +
                                          ", n=" + std::to_string(code.n));
  }
  if (!code.systematic || !generator_parity_consistent(code)) {
    throw unsupported_configuration_error("encoder needs a consistent systematic generator matrix");
  }
  const auto& f = code.field;
  RegisterTable t;
  std::vector<RegisterId> q;
  for (unsigned i = 0; i < code.n; ++i) {
    q.push_back(t.add("q" + std::to_string(i), f.degree(), static_cast<int>(i),
                      i < code.k ? RegisterRole::gf_message : RegisterRole::gf_code));
  }
  const unsigned logical = 2 * code.k - code.n;
  const bool worked_case = f.degree() == 2 && code.k == 2;
  std::ostringstream note;
  note << "[[" << code.n << "," << logical << "]] encoder over " << f.describe() << ", K=" << code.k
       << (worked_case ? "; worked GF(4) construction" : "; generalized construction beyond the worked GF(4) case")
       << "; DFT gates are opaque qudit gates";
  Circuit c(std::move(t), CircuitMeta{f.order(), "", note.str()});

  for (unsigned i = logical; i < code.k; ++i) c.append(Gate::dft(f.order(), c.registers().wires(q[i])));
  for (unsigned i = 0; i < code.k; ++i) {
    for (unsigned j = code.k; j < code.n; ++j) {
      const auto v = code.g[i][j];
      if (v == 0) continue;
      c.append(Gate::cmuladd(f, f.log_alpha(v), c.registers().wires(q[i]), c.registers().wires(q[j])));
    }
  }
  c.seal();
  return c;
}

Circuit expand_cmuladd(const Circuit& c) {
  Circuit out(c.registers(), c.meta());
  std::map<std::pair<std::uint32_t, std::uint32_t>, FieldSpec> fields;
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::cmuladd) {
      out.append(g);
      continue;
    }
    const unsigned m = static_cast<unsigned>(g.controls.size());
    auto it = fields.find({m, g.poly});
    if (it == fields.end()) it = fields.emplace(std::make_pair(m, g.poly), FieldSpec::binary_extension(m, g.poly)).first;
    emit_cmuladd(out, it->second, g.exponent % (g.dimension - 1), g.controls.front().wire.reg, g.targets.front().reg);
  }
  if (c.sealed()) out.seal();
  return out;
}

std::vector<EncoderGateRow> encoder_gate_rows(const Circuit& encoder, const FieldSpec& f) {
  std::vector<EncoderGateRow> rows;
  std::map<std::uint32_t, std::pair<std::uint64_t, bool>> cache;
  for (std::size_t i = 0; i < encoder.size(); ++i) {
    const auto& g = encoder[i];
    if (g.kind != GateKind::cmuladd) continue;
    auto it = cache.find(g.exponent);
    if (it == cache.end()) {
      const auto circuit = synth_cmuladd(f, g.exponent);
      it = cache.emplace(g.exponent, std::make_pair(count(circuit).cx(), verify_cmuladd(circuit, f, g.exponent).ok))
               .first;
    }
    rows.push_back({i, cmuladd_name(g.exponent), g.exponent, it->second.first, cmuladd_formula_count(f, g.exponent),
                    it->second.second});
  }
  return rows;
}

std::string encoder_report_csv(std::span<const EncoderGateRow> rows) {
  std::ostringstream s;
  s << "gate,exponent,cx-count,formula-count,verified\n";
  for (const auto& r : rows) {
    s << r.gate << ',' << r.exponent << ',' << r.cx_count << ',' << r.formula_count << ','
      << (r.verified ? "true" : "false") << '\n';
  }
  return s.str();
}

}  // namespace qrs
