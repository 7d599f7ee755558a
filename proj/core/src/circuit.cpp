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

#include "qrs/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qrs/error.hpp"
#include "qrs/galois.hpp"

namespace qrs {

namespace {

constexpr std::pair<RegisterRole, std::string_view> kRoleNames[] = {
    {RegisterRole::data_a, "data-A"},         {RegisterRole::data_b, "data-B"},
    {RegisterRole::carry, "carry"},           {RegisterRole::check_if, "check-if"},
    {RegisterRole::gf_message, "gf-message"}, {RegisterRole::gf_code, "gf-code"},
    {RegisterRole::work, "work"},
};

constexpr std::pair<GateKind, std::string_view> kKindNames[] = {
    {GateKind::x, "X"},     {GateKind::h, "H"},     {GateKind::t, "T"},
    {GateKind::tdag, "Tdag"}, {GateKind::mcx, "MCX"}, {GateKind::sum, "SUM"},
    {GateKind::dft, "DFT"}, {GateKind::cmuladd, "CMulAdd"}, {GateKind::os, "OS"},
};

bool is_single_qubit(GateKind k) {
  return k == GateKind::x || k == GateKind::h || k == GateKind::t || k == GateKind::tdag || k == GateKind::os;
}

std::vector<Control> positive(const std::vector<Wire>& wires) {
  std::vector<Control> out;
  out.reserve(wires.size());
  for (const auto& w : wires) out.push_back({w, Polarity::positive});
  return out;
}

std::string describe_wire(const RegisterTable& t, const Wire& w) {
  if (w.reg < t.size()) return t[w.reg].name + "[" + std::to_string(w.index) + "]";
  return "#" + std::to_string(w.reg) + "[" + std::to_string(w.index) + "]";
}

// True when `wires` is exactly register `id` in index order.
bool covers_register(const RegisterTable& t, const std::vector<Wire>& wires, RegisterId& id) {
  if (wires.empty()) return false;
  id = wires.front().reg;
  if (wires.size() != t[id].width) return false;
  for (unsigned i = 0; i < wires.size(); ++i) {
    if (wires[i].reg != id || wires[i].index != i) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(RegisterRole role) {
  for (auto [r, n] : kRoleNames) {
    if (r == role) return n;
  }
  return "work";
}

std::optional<RegisterRole> role_from_string(std::string_view s) {
  for (auto [r, n] : kRoleNames) {
    if (n == s) return r;
  }
  return std::nullopt;
}

bool is_qudit_role(RegisterRole role) {
  return role == RegisterRole::data_a || role == RegisterRole::data_b || role == RegisterRole::gf_message ||
         role == RegisterRole::gf_code;
}

std::string_view to_string(GateKind kind) {
  for (auto [k, n] : kKindNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_string(std::string_view s) {
  for (auto [k, n] : kKindNames) {
    if (n == s) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// RegisterTable

RegisterId RegisterTable::add(std::string name, unsigned width, int photon, RegisterRole role) {
  if (name.empty()) throw invalid_gate_error("register name must not be empty");
  if (width < 1) throw invalid_gate_error("register '" + name + "' must have width >= 1");
  if (find(name)) throw invalid_gate_error("duplicate register name '" + name + "'");
  registers_.push_back({std::move(name), width, photon, role});
  offsets_.push_back(total_width_);
  total_width_ += width;
  return registers_.size() - 1;
}

const Register& RegisterTable::operator[](RegisterId id) const {
  if (id >= registers_.size()) throw resolution_error("register id " + std::to_string(id) + " does not exist");
  return registers_[id];
}

std::optional<RegisterId> RegisterTable::find(std::string_view name) const {
  for (RegisterId i = 0; i < registers_.size(); ++i) {
    if (registers_[i].name == name) return i;
  }
  return std::nullopt;
}

RegisterId RegisterTable::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw resolution_error("unknown register '" + std::string(name) + "'");
}

Wire RegisterTable::wire(std::string_view name, unsigned index) const {
  Wire w{id_of(name), index};
  validate(w);
  return w;
}

std::vector<Wire> RegisterTable::wires(RegisterId id) const {
  std::vector<Wire> out;
  for (unsigned i = 0; i < (*this)[id].width; ++i) out.push_back({id, i});
  return out;
}

void RegisterTable::validate(const Wire& w) const {
  if (w.reg >= registers_.size()) {
    throw resolution_error("wire refers to unknown register id " + std::to_string(w.reg));
  }
  if (w.index >= registers_[w.reg].width) {
    throw resolution_error("wire " + registers_[w.reg].name + "[" + std::to_string(w.index) +
                           "] out of range (width " + std::to_string(registers_[w.reg].width) + ")");
  }
}

unsigned RegisterTable::offset(RegisterId id) const {
  if (id >= offsets_.size()) throw resolution_error("register id " + std::to_string(id) + " does not exist");
  return offsets_[id];
}

void RegisterTable::set_photon(RegisterId id, int photon) {
  if (id >= registers_.size()) throw resolution_error("register id " + std::to_string(id) + " does not exist");
  registers_[id].photon = photon;
}

// ---------------------------------------------------------------------------
// Gate

Gate Gate::x(Wire target) { return Gate{GateKind::x, {}, {target}}; }
Gate Gate::h(Wire target) { return Gate{GateKind::h, {}, {target}}; }
Gate Gate::t(Wire target) { return Gate{GateKind::t, {}, {target}}; }
Gate Gate::tdag(Wire target) { return Gate{GateKind::tdag, {}, {target}}; }
Gate Gate::os(Wire target) { return Gate{GateKind::os, {}, {target}}; }

Gate Gate::cx(Wire control, Wire target, Polarity polarity) {
  return Gate{GateKind::mcx, {{control, polarity}}, {target}};
}

Gate Gate::ccx(Wire c0, Wire c1, Wire target) {
  return Gate{GateKind::mcx, {{c0, Polarity::positive}, {c1, Polarity::positive}}, {target}};
}

Gate Gate::mcx(std::vector<Control> controls, Wire target) {
  return Gate{GateKind::mcx, std::move(controls), {target}};
}

Gate Gate::sum(std::uint32_t d, const std::vector<Wire>& source, std::vector<Wire> target) {
  Gate g{GateKind::sum, positive(source), std::move(target)};
  g.dimension = d;
  return g;
}

Gate Gate::dft(std::uint32_t d, std::vector<Wire> reg) {
  Gate g{GateKind::dft, {}, std::move(reg)};
  g.dimension = d;
  return g;
}

Gate Gate::cmuladd(const FieldSpec& field, std::uint32_t exponent, const std::vector<Wire>& source,
                   std::vector<Wire> target) {
  if (field.is_prime()) throw unsupported_field_error("CMulAdd needs a binary extension field");
  Gate g{GateKind::cmuladd, positive(source), std::move(target)};
  g.dimension = field.order();
  g.exponent = exponent;
  g.poly = field.polynomial();
  return g;
}

void validate_gate(const RegisterTable& table, const Gate& g) {
  for (const auto& c : g.controls) table.validate(c.wire);
  for (const auto& t : g.targets) table.validate(t);

  std::set<Wire> seen;
  auto note = [&](const Wire& w) {
    if (!seen.insert(w).second) {
      throw invalid_gate_error(std::string(to_string(g.kind)) + " gate uses wire " + describe_wire(table, w) +
                               " more than once");
    }
  };
  for (const auto& c : g.controls) note(c.wire);
  for (const auto& t : g.targets) note(t);

  const std::string kind{to_string(g.kind)};
  if (g.kind != GateKind::mcx) {
    for (const auto& c : g.controls) {
      if (c.polarity != Polarity::positive) {
        throw invalid_gate_error(kind + " gate: zero-polarity controls are only allowed on MCX");
      }
    }
  }

  if (is_single_qubit(g.kind)) {
    if (!g.controls.empty() || g.targets.size() != 1) {
      throw invalid_gate_error(kind + " gate takes no controls and exactly one target");
    }
    return;
  }

  switch (g.kind) {
    case GateKind::mcx:
      if (g.controls.empty() || g.targets.size() != 1) {
        throw invalid_gate_error("MCX gate needs at least one control and exactly one target");
      }
      return;
    case GateKind::dft: {
      RegisterId id = 0;
      if (!g.controls.empty() || !covers_register(table, g.targets, id) || !is_qudit_role(table[id].role)) {
        throw invalid_gate_error("DFT gate must act on one whole qudit register");
      }
      if (g.dimension < 2) throw invalid_gate_error("DFT gate needs a dimension >= 2");
      return;
    }
    case GateKind::sum:
    case GateKind::cmuladd: {
      std::vector<Wire> source;
      for (const auto& c : g.controls) source.push_back(c.wire);
      RegisterId src = 0, dst = 0;
      if (!covers_register(table, source, src) || !covers_register(table, g.targets, dst)) {
        throw invalid_gate_error(kind + " gate must span one whole source and one whole target register");
      }
      if (!is_qudit_role(table[src].role) || !is_qudit_role(table[dst].role)) {
        throw invalid_gate_error(kind + " gate acts on qudit registers only");
      }
      if (table[src].width != table[dst].width) {
        throw invalid_gate_error(kind + " gate registers must have equal width");
      }
      if (g.kind == GateKind::sum && g.dimension < 2) throw invalid_gate_error("SUM gate needs a dimension >= 2");
      if (g.kind == GateKind::cmuladd) {
        if (g.dimension != (std::uint32_t{1} << table[src].width)) {
          throw invalid_gate_error("CMulAdd field order must be 2^width of its registers");
        }
        if (poly_degree(g.poly) != static_cast<int>(table[src].width)) {
          throw invalid_gate_error("CMulAdd polynomial degree must equal register width");
        }
      }
      return;
    }
    default:
      return;
  }
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(RegisterTable registers, CircuitMeta meta) : registers_(std::move(registers)), meta_(std::move(meta)) {}

Circuit& Circuit::append(Gate g) {
  if (sealed_) throw sealed_circuit_error("cannot append to a sealed circuit");
  validate_gate(registers_, g);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (!(other.registers_ == registers_)) {
    throw resolution_error("cannot concatenate circuits over different register tables");
  }
  for (const auto& g : other.gates_) append(g);
  return *this;
}

// ---------------------------------------------------------------------------
// CostBreakdown

CostBreakdown::CostBreakdown(std::initializer_list<std::pair<const std::string, std::uint64_t>> init) {
  for (const auto& [k, v] : init) add(k, v);
}

std::string CostBreakdown::mcx_key(std::size_t arity) { return "C" + std::to_string(arity) + "X"; }

std::uint64_t CostBreakdown::get(std::string_view key) const {
  auto it = counts_.find(std::string(key));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CostBreakdown::total() const {
  std::uint64_t n = 0;
  for (const auto& [k, v] : counts_) n += v;
  return n;
}

void CostBreakdown::add(const std::string& key, std::uint64_t n) {
  if (n != 0) counts_[key] += n;
}

CostBreakdown& CostBreakdown::operator+=(const CostBreakdown& other) {
  for (const auto& [k, v] : other.counts_) add(k, v);
  return *this;
}

CostBreakdown CostBreakdown::scaled(std::uint64_t factor) const {
  CostBreakdown out;
  for (const auto& [k, v] : counts_) out.add(k, v * factor);
  return out;
}

CostBreakdown CostBreakdown::restricted(std::span<const std::string> keys) const {
  CostBreakdown out;
  for (const auto& k : keys) out.add(k, get(k));
  return out;
}

std::string CostBreakdown::to_string() const {
  std::vector<std::pair<std::size_t, std::string>> mcx;
  std::vector<std::string> other;
  for (const auto& [k, v] : counts_) {
    if (k.size() > 2 && k.front() == 'C' && k.back() == 'X' &&
        std::all_of(k.begin() + 1, k.end() - 1, [](char ch) { return ch >= '0' && ch <= '9'; })) {
      mcx.emplace_back(std::stoul(k.substr(1, k.size() - 2)), k);
    } else {
      other.push_back(k);
    }
  }
  std::sort(mcx.begin(), mcx.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::ostringstream s;
  s << "{";
  bool first = true;
  auto emit = [&](const std::string& k) {
    s << (first ? "" : ", ") << k << ": " << counts_.at(k);
    first = false;
  };
  for (const auto& [a, k] : mcx) emit(k);
  for (const auto& k : other) emit(k);
  s << "}";
  return s.str();
}

std::string gate_class(const Gate& g) {
  if (g.kind == GateKind::mcx) return CostBreakdown::mcx_key(g.arity());
  return std::string(to_string(g.kind));
}

CostBreakdown count(const Circuit& c) {
  CostBreakdown out;
  for (const auto& g : c.gates()) out.add(gate_class(g));
  return out;
}

PhotonPartition photon_partition(const Circuit& c, const Gate& g) {
  if (g.kind != GateKind::mcx) throw invalid_gate_error("photon_partition expects an MCX gate");
  PhotonPartition out;
  for (const auto& ctl : g.controls) out[c.registers().photon_of(ctl.wire)].push_back(ctl);
  return out;
}

Circuit normalize_polarities(const Circuit& c) {
  Circuit out(c.registers(), c.meta());
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::mcx) {
      out.append(g);
      continue;
    }
    std::vector<Wire> flipped;
    Gate plain = g;
    for (auto& ctl : plain.controls) {
      if (ctl.polarity == Polarity::zero) {
        flipped.push_back(ctl.wire);
        ctl.polarity = Polarity::positive;
      }
    }
    for (const auto& w : flipped) out.append(Gate::x(w));
    out.append(plain);
    for (const auto& w : flipped) out.append(Gate::x(w));
  }
  if (c.sealed()) out.seal();
  return out;
}

Circuit reversed(const Circuit& c) {
  Circuit out(c.registers(), c.meta());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(*it);
  if (c.sealed()) out.seal();
  return out;
}

}  // namespace qrs
