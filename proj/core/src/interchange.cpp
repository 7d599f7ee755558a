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

#include "qrs/interchange.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qrs/error.hpp"

namespace qrs {

using nlohmann::json;

namespace {

json wire_json(const RegisterTable& t, const Wire& w) { return {{"reg", t[w.reg].name}, {"idx", w.index}}; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw parse_error(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::int64_t get_int(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint32_t get_u32(const json& obj, const char* key, const std::string& where) {
  const auto v = get_int(obj, key, where);
  if (v < 0 || v > 0xFFFFFFFFll) fail(where + "." + key, "out of range");
  return static_cast<std::uint32_t>(v);
}

Wire parse_wire(const RegisterTable& t, const json& obj, const std::string& where) {
  const auto name = get_string(obj, "reg", where);
  const auto idx = get_u32(obj, "idx", where);
  try {
    return t.wire(name, idx);
  } catch (const resolution_error& e) {
    fail(where, e.what());
  }
}

}  // namespace

std::string serialize(const Circuit& c) {
  const auto& t = c.registers();
  json doc;
  doc["registers"] = json::array();
  for (const auto& r : t.registers()) {
    doc["registers"].push_back(
        {{"name", r.name}, {"width", r.width}, {"photon", r.photon}, {"role", std::string(to_string(r.role))}});
  }
  doc["gates"] = json::array();
  for (const auto& g : c.gates()) {
    json jg;
    jg["kind"] = std::string(to_string(g.kind));
    if (g.kind == GateKind::sum || g.kind == GateKind::dft || g.kind == GateKind::cmuladd) jg["d"] = g.dimension;
    if (g.kind == GateKind::cmuladd) {
      jg["n"] = g.exponent;
      jg["poly"] = g.poly;
    }
    jg["controls"] = json::array();
    for (const auto& ctl : g.controls) {
      auto jc = wire_json(t, ctl.wire);
      jc["pol"] = ctl.polarity == Polarity::positive ? "positive" : "zero";
      jg["controls"].push_back(std::move(jc));
    }
    jg["targets"] = json::array();
    for (const auto& w : g.targets) jg["targets"].push_back(wire_json(t, w));
    doc["gates"].push_back(std::move(jg));
  }
  doc["meta"] = {{"d", c.meta().d}, {"strategy", c.meta().strategy}, {"note", c.meta().note}};
  return doc.dump(1);
}

Circuit parse_circuit(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected an object");

  RegisterTable table;
  const auto& regs = field(doc, "registers", "document");
  if (!regs.is_array()) fail("registers", "expected an array");
  for (std::size_t i = 0; i < regs.size(); ++i) {
    const std::string where = "registers[" + std::to_string(i) + "]";
    const auto name = get_string(regs[i], "name", where);
    const auto width = get_u32(regs[i], "width", where);
    const auto photon = get_int(regs[i], "photon", where);
    const auto role_name = get_string(regs[i], "role", where);
    const auto role = role_from_string(role_name);
    if (!role) fail(where + ".role", "unknown role '" + role_name + "'");
    try {
      table.add(name, width, static_cast<int>(photon), *role);
    } catch (const error& e) {
      fail(where, e.what());
    }
  }

  CircuitMeta meta;
  if (auto it = doc.find("meta"); it != doc.end()) {
    if (!it->is_object()) fail("meta", "expected an object");
    if (it->contains("d")) meta.d = get_u32(*it, "d", "meta");
    if (it->contains("strategy")) meta.strategy = get_string(*it, "strategy", "meta");
    if (it->contains("note")) meta.note = get_string(*it, "note", "meta");
  }

  Circuit c(table, meta);
  const auto& gates = field(doc, "gates", "document");
  if (!gates.is_array()) fail("gates", "expected an array");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string where = "gates[" + std::to_string(i) + "]";
    const auto& jg = gates[i];
    const auto kind_name = get_string(jg, "kind", where);
    const auto kind = gate_kind_from_string(kind_name);
    if (!kind) fail(where + ".kind", "unknown gate kind '" + kind_name + "'");

    Gate g;
    g.kind = *kind;
    if (jg.contains("d")) g.dimension = get_u32(jg, "d", where);
    if (jg.contains("n")) g.exponent = get_u32(jg, "n", where);
    if (jg.contains("poly")) g.poly = get_u32(jg, "poly", where);

    static const json no_controls = json::array();
    const auto& controls = jg.contains("controls") ? jg.at("controls") : no_controls;
    if (!controls.is_array()) fail(where + ".controls", "expected an array");
    for (std::size_t j = 0; j < controls.size(); ++j) {
      const std::string cw = where + ".controls[" + std::to_string(j) + "]";
      Control ctl{parse_wire(table, controls[j], cw)};
      const auto pol = get_string(controls[j], "pol", cw);
      if (pol == "positive") {
        ctl.polarity = Polarity::positive;
      } else if (pol == "zero") {
        ctl.polarity = Polarity::zero;
      } else {
        fail(cw + ".pol", "unknown polarity '" + pol + "'");
      }
      g.controls.push_back(ctl);
    }
    const auto& targets = field(jg, "targets", where);
    if (!targets.is_array()) fail(where + ".targets", "expected an array");
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const std::string tw = where + ".targets[" + std::to_string(j) + "]";
      if (targets[j].is_object() && targets[j].contains("pol")) fail(tw + ".pol", "targets carry no polarity");
      g.targets.push_back(parse_wire(table, targets[j], tw));
    }

    try {
      c.append(std::move(g));
    } catch (const error& e) {
      fail(where, e.what());
    }
  }
  c.seal();
  return c;
}

void write_circuit_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << serialize(c) << '\n';
  if (!out) throw io_error("write to '" + path + "' failed");
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

}  // namespace qrs
