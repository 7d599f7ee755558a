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

#include "qrs/revsim.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>
#include <tuple>

#include "qrs/error.hpp"

namespace qrs {

namespace {

// Circuit flattened to wire offsets so the inner loop never touches the
// register table.
class PermutationProgram {
 public:
  explicit PermutationProgram(const Circuit& c) {
    const auto& t = c.registers();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& g = c[i];
      if (g.kind != GateKind::x && g.kind != GateKind::mcx) {
        throw unsupported_gate_error("gate " + std::to_string(i) + " (" + gate_class(g) +
                                     ") is not a permutation gate; basis simulation supports X and MCX only");
      }
      Op op;
      op.target = t.flat_index(g.targets.front());
      op.first_control = controls_.size();
      for (const auto& ctl : g.controls) {
        controls_.push_back({t.flat_index(ctl.wire), static_cast<std::uint8_t>(ctl.polarity == Polarity::positive)});
      }
      op.n_controls = g.controls.size();
      ops_.push_back(op);
    }
  }

  void run(std::span<std::uint8_t> bits) const {
    for (const auto& op : ops_) {
      bool fire = true;
      for (std::size_t j = 0; j < op.n_controls; ++j) {
        const auto& c = controls_[op.first_control + j];
        if (bits[c.index] != c.want) {
          fire = false;
          break;
        }
      }
      if (fire) bits[op.target] ^= 1;
    }
  }

 private:
  struct Op {
    unsigned target;
    std::size_t first_control;
    std::size_t n_controls;
  };
  struct Ctl {
    unsigned index;
    std::uint8_t want;
  };
  std::vector<Op> ops_;
  std::vector<Ctl> controls_;
};

RegisterId find_role(const RegisterTable& t, RegisterRole role) {
  for (RegisterId i = 0; i < t.size(); ++i) {
    if (t[i].role == role) return i;
  }
  throw resolution_error("circuit has no " + std::string(to_string(role)) + " register");
}

}  // namespace

BasisState::BasisState(const RegisterTable& table) {
  for (const auto& r : table.registers()) {
    offsets_.push_back(static_cast<unsigned>(bits_.size()));
    widths_.push_back(r.width);
    bits_.resize(bits_.size() + r.width, 0);
  }
}

unsigned BasisState::index(const Wire& w) const {
  if (w.reg >= offsets_.size() || w.index >= widths_[w.reg]) throw resolution_error("wire outside basis state");
  return offsets_[w.reg] + w.index;
}

std::uint64_t BasisState::value(RegisterId reg) const {
  if (reg >= offsets_.size()) throw resolution_error("register outside basis state");
  if (widths_[reg] > 64) throw range_error("register wider than 64 bits");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < widths_[reg]; ++i) v |= std::uint64_t{bits_[offsets_[reg] + i]} << i;
  return v;
}

void BasisState::set_value(RegisterId reg, std::uint64_t v) {
  if (reg >= offsets_.size()) throw resolution_error("register outside basis state");
  const unsigned w = widths_[reg];
  if (w < 64 && (v >> w) != 0) throw range_error("value does not fit register");
  for (unsigned i = 0; i < w; ++i) bits_[offsets_[reg] + i] = (v >> i) & 1u;
}

BasisState simulate_basis(const Circuit& c, BasisState s) {
  if (s.width() != c.registers().total_width()) throw resolution_error("basis state width does not match circuit");
  PermutationProgram(c).run(s.raw());
  return s;
}

std::string VerificationReport::summary() const {
  std::ostringstream s;
  s << "d=" << d << ": " << (total_cases - failures.size()) << "/" << total_cases << " cases pass";
  s << ", " << dirty_cases << " leave ancillas dirty";
  s << ", " << elapsed_seconds << " s";
  s << (verified() ? " [VERIFIED]" : " [FAILED]");
  return s.str();
}

VerificationReport verify_sum(std::uint32_t d, const Circuit& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto& t = c.registers();
  const RegisterId ra = find_role(t, RegisterRole::data_a);
  const RegisterId rb = find_role(t, RegisterRole::data_b);
  if ((std::uint64_t{1} << t[ra].width) < d || (std::uint64_t{1} << t[rb].width) < d) {
    throw range_error("data registers too narrow for d=" + std::to_string(d));
  }
  const PermutationProgram program(c);

  struct Partial {
    std::vector<SumFailure> failures;
    std::uint64_t dirty_cases = 0;
    std::map<std::string, std::uint64_t> dirty_by_register;
  };

  auto run_rows = [&](std::uint32_t a_begin, std::uint32_t a_end, Partial& out) {
    BasisState s(t);
    for (std::uint32_t a = a_begin; a < a_end; ++a) {
      for (std::uint32_t b = 0; b < d; ++b) {
        std::fill(s.raw().begin(), s.raw().end(), 0);
        s.set_value(ra, a);
        s.set_value(rb, b);
        program.run(s.raw());
        const std::uint32_t expected = (a + b) % d;
        const auto got = s.value(rb);
        const auto a_after = s.value(ra);
        if (got != expected || a_after != a) out.failures.push_back({a, b, expected, got, a_after});
        bool dirty = false;
        for (RegisterId r = 0; r < t.size(); ++r) {
          if (r == ra || r == rb) continue;
          for (unsigned i = 0; i < t[r].width; ++i) {
            if (s.bit({r, i})) {
              ++out.dirty_by_register[t[r].name];
              dirty = true;
              break;
            }
          }
        }
        if (dirty) ++out.dirty_cases;
      }
    }
  };

  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, std::min(8u, d));
  std::vector<Partial> partials(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint32_t lo = d * w / workers, hi = d * (w + 1) / workers;
      pool.emplace_back([&, lo, hi, w] { run_rows(lo, hi, partials[w]); });
    }
  }

  VerificationReport report;
  report.d = d;
  report.total_cases = std::uint64_t{d} * d;
  for (auto& p : partials) {
    report.failures.insert(report.failures.end(), p.failures.begin(), p.failures.end());
    report.dirty_cases += p.dirty_cases;
    for (const auto& [k, v] : p.dirty_by_register) report.dirty_by_register[k] += v;
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SumFailure& x, const SumFailure& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::uint32_t> truth_table(const Circuit& c, std::span<const Wire> wires) {
  if (wires.size() > kMaxTruthTableWidth) {
    throw resource_limit_error("truth table over " + std::to_string(wires.size()) + " wires exceeds the limit of " +
                               std::to_string(kMaxTruthTableWidth));
  }
  const auto& t = c.registers();
  std::vector<unsigned> idx;
  for (const auto& w : wires) {
    t.validate(w);
    idx.push_back(t.flat_index(w));
  }
  const PermutationProgram program(c);
  std::vector<std::uint8_t> bits(t.total_width());
  std::vector<std::uint32_t> table(std::size_t{1} << wires.size());
  for (std::uint32_t in = 0; in < table.size(); ++in) {
    std::fill(bits.begin(), bits.end(), 0);
    for (unsigned i = 0; i < idx.size(); ++i) bits[idx[i]] = (in >> i) & 1u;
    program.run(bits);
    std::uint32_t out = 0;
    for (unsigned i = 0; i < idx.size(); ++i) out |= std::uint32_t{bits[idx[i]]} << i;
    table[in] = out;
  }
  return table;
}

}  // namespace qrs
