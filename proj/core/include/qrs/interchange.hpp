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

// Circuit interchange document (JSON):
//
//   {
//     "registers": [{"name": "B", "width": 3, "photon": 1, "role": "data-B"}, ...],
//     "gates": [{"kind": "MCX",
//                "controls": [{"reg": "B", "idx": 0, "pol": "zero"}],
//                "targets": [{"reg": "check-if", "idx": 0}]}, ...],
//     "meta": {"d": 5, "strategy": "", "note": ""}
//   }
//
// SUM and DFT gates carry "d"; CMulAdd carries "d" (field order), "n"
// (exponent) and "poly". "pol" is "positive" or "zero".

#include <string>
#include <string_view>

#include "qrs/circuit.hpp"

namespace qrs {

std::string serialize(const Circuit& c);
/// Returns a sealed circuit. Throws parse_error naming the offending field.
Circuit parse_circuit(std::string_view document);

void write_circuit_file(const Circuit& c, const std::string& path);
Circuit read_circuit_file(const std::string& path);

}  // namespace qrs
