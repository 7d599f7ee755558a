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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "qrs/analysis.hpp"
#include "qrs/error.hpp"
#include "qrs/sumsynth.hpp"

using namespace qrs;

namespace {

const SweepReport& full_sweep() {
  static const SweepReport report = sweep(3, 257);
  return report;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("SUM gate count") {
  CHECK(sum_gate_count(5) == 13);
  CHECK(sum_gate_count(3) == 4);
  CHECK(sum_gate_count(139) == (19321 + 139 - 4) / 2);
  CHECK(sum_gate_count(139) == 9728);
  for (std::uint32_t d = 3; d <= 257; ++d) {
    if (!oracle::is_prime(d)) continue;
    const std::uint64_t twice = std::uint64_t{d} * d + d - 4;
    CHECK(twice % 2 == 0);
    CHECK(sum_gate_count(d) * 2 == twice);
  }
  CHECK_THROWS_AS(sum_gate_count(9), invalid_dimension_error);
  CHECK_THROWS_AS(sum_gate_count(2), invalid_dimension_error);
}

TEST_CASE("sieve") {
  const auto p = primes_in(1, 60);
  CHECK(p.front() == 2);
  CHECK(p.back() == 59);
  const auto all = primes_in(0, 3000);
  for (std::uint32_t n = 0; n <= 3000; ++n) {
    CAPTURE(n);
    REQUIRE(std::binary_search(all.begin(), all.end(), n) == oracle::is_prime(n));
  }
  CHECK(primes_in(20, 10).empty());
}

TEST_CASE("sweep rows") {
  const auto& r = full_sweep();
  CHECK(r.diagnostics.empty());
  CHECK(r.rows.size() == 54);
  CHECK(r.rows.front().d == 3);
  CHECK(r.rows.back().d == 257);
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i - 1].d < r.rows[i].d);
  for (const auto& row : r.rows) {
    CAPTURE(row.d);
    CHECK(row.n_sum_gates == sum_gate_count(row.d));
    CHECK(*row.ntot_general == row.n_sum_gates * *row.nsum_general);
    CHECK(*row.ntot_ralph == row.n_sum_gates * *row.nsum_ralph);
    CHECK(*row.ntot_multiplexed == row.n_sum_gates * *row.nsum_multiplexed);
    CHECK(*row.ratio_general >= 1.0);
    CHECK(*row.nsum_general >= *row.nsum_ralph);
    CHECK(*row.nsum_general >= *row.nsum_multiplexed);
    CHECK(row.convention == std::string(kDefaultConventionId));
    CHECK(row.n_aux == row.k + row.n_checkif);
  }
}

TEST_CASE("Ralph undercuts the multiplexed count only for d < 11") {
  for (const auto& row : full_sweep().rows) {
    CAPTURE(row.d);
    CHECK((*row.nsum_ralph < *row.nsum_multiplexed) == (row.d < 11));
    CHECK((*row.ratio_ralph < 1.0) == (row.d < 11));
  }
}

TEST_CASE("rows are synthesized, lowered and match an independent closed form") {
  // Cost per gate class over the value-by-value gate enumeration. For k > 2
  // the class alone tells adder Toffolis (C2X) from flag gates (C_kX).
  for (std::uint32_t d : {5u, 7u, 17u, 139u, 257u}) {
    const auto classes = oracle::sum_gate_classes(d);
    std::uint64_t general = 0, mux = 0;
    const unsigned k = oracle::bits_for(d);
    for (const auto& [key, n] : classes) {
      const unsigned j = static_cast<unsigned>(std::stoul(key.substr(1)));
      general += n * (j == 1 ? 1 : (j == 2 ? 6 : 24 * (j - 2)));
      mux += n * (j == 1 || j == k ? 1 : 6);
    }
    const auto row = sweep_row(d);
    CAPTURE(d);
    CHECK(*row.nsum_general == general);
    CHECK(*row.nsum_multiplexed == mux);
  }
}

TEST_CASE("RCA columns are flat on each plateau") {
  std::map<unsigned, std::uint64_t> seen;
  for (const auto& row : full_sweep().rows) {
    auto [it, fresh] = seen.emplace(row.k, row.rca_cx_general);
    if (!fresh) CHECK(it->second == row.rca_cx_general);
    CHECK(row.rca_cx_general == (3 * row.k - 2) * 6 + 2 * row.k - 1);
  }
}

TEST_CASE("selected strategies only") {
  SweepOptions o;
  o.strategies = {StrategyKind::multiplexed};
  const auto r = sweep(3, 31, o);
  for (const auto& row : r.rows) {
    CHECK_FALSE(row.nsum_general.has_value());
    CHECK(row.nsum_multiplexed.has_value());
    CHECK_FALSE(row.ratio_general.has_value());
  }
  CHECK_THROWS_AS(ratio_curve(r), unsupported_configuration_error);
  const auto csv = render_csv(r);
  CHECK(csv.find("\n3,2,4,,,") != std::string::npos);
}

TEST_CASE("sweep output is independent of the worker count") {
  SweepOptions one, many;
  one.workers = 1;
  many.workers = 7;
  CHECK(render_csv(sweep(3, 131, one)) == render_csv(sweep(3, 131, many)));
}

TEST_CASE("conventions") {
  CHECK(find_convention("qrs-default-v1").multiplexed.os_cost_per_control == 2);
  CHECK(find_convention("qrs-nested-collapse-v1").multiplexed.nested_collapse);
  CHECK_THROWS_AS(find_convention("v0"), config_error);
  const auto cfg = Config::parse("convention.id = qrs-nested-collapse-v1\n");
  CHECK(convention_from(&cfg).id == "qrs-nested-collapse-v1");
  CHECK(convention_from(nullptr).id == "qrs-default-v1");

  SweepOptions nested;
  nested.convention = "qrs-nested-collapse-v1";
  const auto a = sweep_row(7);
  const auto b = sweep_row(7, nested);
  CHECK(*b.nsum_multiplexed == *a.nsum_multiplexed - 5 * 5);
  CHECK(*b.nsum_general == *a.nsum_general);
  CHECK(b.convention == "qrs-nested-collapse-v1");
}

TEST_CASE("ratio curve and jumps") {
  const auto curve = ratio_curve(full_sweep());
  CHECK(curve.points.size() == 54);
  CHECK(curve.jumps == std::vector<std::uint32_t>{5, 11, 17, 37, 67, 131, 257});
  CHECK(first_prime_above_power(5) == 37);
  CHECK(first_prime_above_power(8) == 257);
  CHECK(curve.at(139).has_value());
  CHECK_FALSE(curve.at(140).has_value());
}

TEST_CASE("CSV rendering") {
  CHECK(csv_header() ==
        "d,k,n_sum_gates,nsum_general,nsum_ralph,nsum_multiplexed,ntot_general,ntot_ralph,ntot_multiplexed,"
        "ratio_general,ratio_ralph,n_checkif,n_aux,os_count,n_dft,convention");
  const auto r = sweep(5, 5);
  const auto csv = render_csv(r);
  CHECK(csv == csv_header() + "\n5,3,13,128,50,59,1664,650,767,2.169492,0.847458,3,6,18,2,qrs-default-v1\n");
  const auto aux = render_aux_csv(r);
  CHECK(aux.rfind("d,k,rca_cx_general,rca_cx_multiplexed,n_checkif,checkif_cx_general,checkif_cx_multiplexed\n", 0) ==
        0);
  CHECK(aux.find("\n5,3,47,47,3,72,3\n") != std::string::npos);
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "qrs_analysis_test";
  std::filesystem::remove_all(dir);
  const auto report = sweep(3, 40);

  const auto csv = dir / "r.csv";
  emit_csv(report, csv);
  CHECK(slurp(csv) == render_csv(report));

  const auto empty_path = dir / "empty.csv";
  CHECK_THROWS_AS(emit_csv(SweepReport{}, empty_path), range_error);
  CHECK_FALSE(std::filesystem::exists(empty_path));

  for (const char* name : {"nsum", "ntot", "ratio", "checkif", "rca", "sumcount"}) {
    const auto series = report_series(report, name);
    CHECK_FALSE(series.empty());
    const auto path = dir / (std::string(name) + ".svg");
    emit_svg(series, default_svg_options(name), path);
    const auto svg = slurp(path);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
  }
  CHECK_THROWS_AS(report_series(report, "bogus"), range_error);
  CHECK_THROWS_AS(emit_csv(report, "/proc/qrs-no-such-dir/r.csv"), io_error);

  ::setenv("QRS_OUT_DIR", dir.c_str(), 1);
  CHECK(resolve_output_path("x.csv") == dir / "x.csv");
  CHECK(resolve_output_path("/abs/x.csv") == std::filesystem::path("/abs/x.csv"));
  ::unsetenv("QRS_OUT_DIR");
  CHECK(resolve_output_path("x.csv") == std::filesystem::path("x.csv"));
  std::filesystem::remove_all(dir);
}
