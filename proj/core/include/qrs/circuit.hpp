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

// Gate-level intermediate representation: registers grouped into photons,
// typed gates with per-control polarity, ordered circuits and exact
// gate-class tallies.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrs {

class FieldSpec;

enum class RegisterRole { data_a, data_b, carry, check_if, gf_message, gf_code, work };

std::string_view to_string(RegisterRole role);
std::optional<RegisterRole> role_from_string(std::string_view s);
/// Registers that hold one qudit as a block of qubits.
bool is_qudit_role(RegisterRole role);

struct Register {
  std::string name;
  unsigned width = 0;
  int photon = 0;
  RegisterRole role = RegisterRole::work;

  friend bool operator==(const Register&, const Register&) = default;
};

using RegisterId = std::size_t;

struct Wire {
  RegisterId reg = 0;
  unsigned index = 0;

  friend auto operator<=>(const Wire&, const Wire&) = default;
};

class RegisterTable {
 public:
  RegisterId add(std::string name, unsigned width, int photon, RegisterRole role);

  std::size_t size() const { return registers_.size(); }
  const Register& operator[](RegisterId id) const;
  std::span<const Register> registers() const { return registers_; }

  std::optional<RegisterId> find(std::string_view name) const;
  /// Throws resolution_error for an unknown name.
  RegisterId id_of(std::string_view name) const;
  /// Resolve (name, index); throws resolution_error when out of range.
  Wire wire(std::string_view name, unsigned index) const;
  std::vector<Wire> wires(RegisterId id) const;
  void validate(const Wire& w) const;

  unsigned total_width() const { return total_width_; }
  unsigned offset(RegisterId id) const;
  unsigned flat_index(const Wire& w) const { return offset(w.reg) + w.index; }
  int photon_of(const Wire& w) const { return (*this)[w.reg].photon; }
  void set_photon(RegisterId id, int photon);

  friend bool operator==(const RegisterTable& a, const RegisterTable& b) { return a.registers_ == b.registers_; }

 private:
  std::vector<Register> registers_;
  std::vector<unsigned> offsets_;
  unsigned total_width_ = 0;
};

enum class GateKind { x, h, t, tdag, mcx, sum, dft, cmuladd, os };

std::string_view to_string(GateKind kind);
std::optional<GateKind> gate_kind_from_string(std::string_view s);

enum class Polarity { positive, zero };

struct Control {
  Wire wire;
  Polarity polarity = Polarity::positive;

  friend bool operator==(const Control&, const Control&) = default;
};

/// One gate record. Qudit gates (SUM, DFT, CMulAdd) list whole registers:
/// SUM and CMulAdd put the source register in `controls` and the
/// destination register in `targets`.
struct Gate {
  GateKind kind = GateKind::x;
  std::vector<Control> controls;
  std::vector<Wire> targets;
  std::uint32_t dimension = 0;  // SUM/DFT qudit dimension; CMulAdd field order
  std::uint32_t exponent = 0;   // CMulAdd: multiply by alpha^exponent
  std::uint32_t poly = 0;       // CMulAdd: primitive polynomial of the field

  static Gate x(Wire target);
  static Gate h(Wire target);
  static Gate t(Wire target);
  static Gate tdag(Wire target);
  static Gate os(Wire target);
  static Gate cx(Wire control, Wire target, Polarity polarity = Polarity::positive);
  static Gate ccx(Wire c0, Wire c1, Wire target);
  static Gate mcx(std::vector<Control> controls, Wire target);
  static Gate sum(std::uint32_t d, const std::vector<Wire>& source, std::vector<Wire> target);
  static Gate dft(std::uint32_t d, std::vector<Wire> reg);
  static Gate cmuladd(const FieldSpec& field, std::uint32_t exponent, const std::vector<Wire>& source,
                      std::vector<Wire> target);

  std::size_t arity() const { return controls.size(); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws invalid_gate_error or resolution_error if `g` is malformed
/// against `table`.
void validate_gate(const RegisterTable& table, const Gate& g);

struct CircuitMeta {
  std::uint32_t d = 0;
  std::string strategy;
  std::string note;

  friend bool operator==(const CircuitMeta&, const CircuitMeta&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(RegisterTable registers, CircuitMeta meta = {});

  /// Validates and appends; throws sealed_circuit_error once sealed.
  Circuit& append(Gate g);
  /// Appends every gate of `other`, which must share this register table.
  Circuit& append(const Circuit& other);
  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  const RegisterTable& registers() const { return registers_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  const Gate& operator[](std::size_t i) const { return gates_.at(i); }

  const CircuitMeta& meta() const { return meta_; }
  CircuitMeta& meta() { return meta_; }

 private:
  RegisterTable registers_;
  std::vector<Gate> gates_;
  CircuitMeta meta_;
  bool sealed_ = false;
};

/// Exact integer tallies keyed by gate class: "C{j}X" per control arity,
/// "X", "H", "T", "Tdag", "OS", "SUM", "DFT", "CMulAdd". Zero counts are
/// never stored, so equality ignores absent keys.
class CostBreakdown {
 public:
  CostBreakdown() = default;
  CostBreakdown(std::initializer_list<std::pair<const std::string, std::uint64_t>> init);

  static std::string mcx_key(std::size_t arity);

  std::uint64_t get(std::string_view key) const;
  std::uint64_t mcx(std::size_t arity) const { return get(mcx_key(arity)); }
  std::uint64_t cx() const { return mcx(1); }
  std::uint64_t total() const;

  void add(const std::string& key, std::uint64_t n = 1);
  CostBreakdown& operator+=(const CostBreakdown& other);
  friend CostBreakdown operator+(CostBreakdown a, const CostBreakdown& b) { return a += b; }
  CostBreakdown scaled(std::uint64_t factor) const;
  /// Keep only the listed classes.
  CostBreakdown restricted(std::span<const std::string> keys) const;

  const std::map<std::string, std::uint64_t>& entries() const { return counts_; }
  /// Deterministic "{C3X: 4, C2X: 7, C1X: 14}" rendering, MCX classes by
  /// descending arity first.
  std::string to_string() const;

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;

 private:
  std::map<std::string, std::uint64_t> counts_;
};

std::string gate_class(const Gate& g);
CostBreakdown count(const Circuit& c);

/// Controls of an MCX gate grouped by the photon of their register.
using PhotonPartition = std::map<int, std::vector<Control>>;
PhotonPartition photon_partition(const Circuit& c, const Gate& g);

/// Expands zero-polarity MCX controls into X pairs around a positive
/// control. The added gates are tallied under "X".
Circuit normalize_polarities(const Circuit& c);

/// Gate order reversed. For circuits of self-inverse gates this is the
/// inverse.
Circuit reversed(const Circuit& c);

}  // namespace qrs
