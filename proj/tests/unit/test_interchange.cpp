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

#include <filesystem>
#include <random>

#include "qrs/error.hpp"
#include "qrs/interchange.hpp"
#include "qrs/sumsynth.hpp"
#include "random_circuit.hpp"

using namespace qrs;

TEST_CASE("synth_sum(5) round-trips") {
  const auto c = synth_sum(5);
  const auto back = parse_circuit(serialize(c));
  CHECK(back.sealed());
  CHECK(count(back) == count(c));
  CHECK(back.gates() == c.gates());
  CHECK(back.registers() == c.registers());
  CHECK(back.meta() == c.meta());
}

TEST_CASE("malformed documents name the field") {
  const std::string regs = R"("registers": [{"name": "q", "width": 2, "photon": 0, "role": "work"}])";
  auto doc = [&](const std::string& gates) { return "{" + regs + R"(, "gates": [)" + gates + R"(], "meta": {}})"; };

  CHECK_NOTHROW(parse_circuit(doc(R"({"kind": "H", "targets": [{"reg": "q", "idx": 0}]})")));
  CHECK_THROWS_WITH_AS(parse_circuit(doc(R"({"kind": "FOO", "targets": [{"reg": "q", "idx": 0}]})")),
                       doctest::Contains("gates[0].kind"), parse_error);
  CHECK_THROWS_AS(parse_circuit(doc(R"({"kind": "H", "targets": [{"reg": "q", "idx": 0, "pol": "zero"}]})")),
                  parse_error);
  CHECK_THROWS_AS(
      parse_circuit(doc(R"({"kind": "H", "controls": [{"reg": "q", "idx": 1, "pol": "positive"}],
                            "targets": [{"reg": "q", "idx": 0}]})")),
      parse_error);
  CHECK_THROWS_WITH_AS(
      parse_circuit(doc(R"({"kind": "MCX", "controls": [{"reg": "q", "idx": 1, "pol": "sideways"}],
                            "targets": [{"reg": "q", "idx": 0}]})")),
      doctest::Contains("gates[0].controls[0].pol"), parse_error);
  CHECK_THROWS_AS(parse_circuit(doc(R"({"kind": "X", "targets": [{"reg": "nope", "idx": 0}]})")), parse_error);
  CHECK_THROWS_AS(parse_circuit("{ not json"), parse_error);
  CHECK_THROWS_AS(parse_circuit(R"({"gates": []})"), parse_error);
}

TEST_CASE("1000 random circuits round-trip with identical counts") {
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 1000; ++i) {
    const auto c = testing::random_circuit(rng);
    const auto back = parse_circuit(serialize(c));
    REQUIRE(count(back) == count(c));
    REQUIRE(back.gates() == c.gates());
    REQUIRE(back.registers() == c.registers());
  }
}

TEST_CASE("file round-trip and I/O errors") {
  const auto path = std::filesystem::temp_directory_path() / "qrs_interchange_test.json";
  const auto c = synth_sum(7);
  write_circuit_file(c, path.string());
  CHECK(count(read_circuit_file(path.string())) == count(c));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_circuit_file(path.string()), io_error);
}
