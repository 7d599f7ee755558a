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

// Sweep engine over prime qudit dimensions: SUM-gate totals per lowering
// strategy, ratio curves with jump detection, and CSV/SVG rendering.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrs/config.hpp"
#include "qrs/lowering.hpp"

namespace qrs {

/// (d^2 + d - 4) / 2 SUM gates for the QRS encoder over GF(d).
std::uint64_t sum_gate_count(std::uint32_t d);

/// Primes in [lo, hi] by sieve.
std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi);

/// Named, versioned set of counting choices. Every CSV row carries the id.
struct Convention {
  std::string id;
  std::string description;
  Strategy general = Strategy::general();
  Strategy ralph = Strategy::ralph();
  Strategy multiplexed = Strategy::multiplexed();

  const Strategy& strategy(StrategyKind kind) const;
};

inline constexpr std::string_view kDefaultConventionId = "qrs-default-v1";

std::span<const Convention> conventions();
/// Throws config_error for an unknown id.
const Convention& find_convention(std::string_view id);
/// The `convention.id` key of `config`, or the default.
const Convention& convention_from(const Config* config);

struct SweepRow {
  std::uint32_t d = 0;
  unsigned k = 0;
  std::uint64_t n_sum_gates = 0;
  std::optional<std::uint64_t> nsum_general, nsum_ralph, nsum_multiplexed;
  std::optional<std::uint64_t> ntot_general, ntot_ralph, ntot_multiplexed;
  std::optional<double> ratio_general, ratio_ralph;
  unsigned n_checkif = 0;
  unsigned n_aux = 0;
  std::uint64_t os_count = 0;  // per SUM gate, multiplexed strategy
  std::uint64_t n_dft = 0;
  std::string convention;

  // Columns of the auxiliary CSV.
  std::uint64_t rca_cx_general = 0;
  std::uint64_t rca_cx_multiplexed = 0;
  std::uint64_t checkif_cx_general = 0;
  std::uint64_t checkif_cx_multiplexed = 0;

  std::optional<std::uint64_t> nsum(StrategyKind kind) const;
};

struct SweepReport {
  std::string convention;
  std::vector<StrategyKind> strategies;
  std::vector<SweepRow> rows;          // sorted by d
  std::vector<std::string> diagnostics;  // rows dropped by the consistency gate

  const SweepRow* find(std::uint32_t d) const;
};

struct SweepOptions {
  std::vector<StrategyKind> strategies{StrategyKind::general, StrategyKind::ralph, StrategyKind::multiplexed};
  std::string convention{kDefaultConventionId};
  unsigned workers = 0;  // 0: hardware concurrency
};

/// One row per prime in [d_min, d_max], computed by synthesizing and
/// lowering synth_sum(d). A row whose gate classes disagree with
/// predicted_counts(d) is dropped and described in `diagnostics`.
SweepReport sweep(std::uint32_t d_min, std::uint32_t d_max, const SweepOptions& options = {});
SweepRow sweep_row(std::uint32_t d, const SweepOptions& options = {});

struct RatioPoint {
  std::uint32_t d = 0;
  double r = 0;
};

struct RatioCurve {
  std::vector<RatioPoint> points;
  /// First prime above a power of two at which R rises over the previous
  /// prime.
  std::vector<std::uint32_t> jumps;

  std::optional<double> at(std::uint32_t d) const;
};

/// R = N_SUM(general) / N_SUM(multiplexed); needs both columns.
RatioCurve ratio_curve(const SweepReport& report);

/// Smallest prime above 2^k.
std::uint32_t first_prime_above_power(unsigned k);

std::string csv_header();
std::string render_csv(const SweepReport& report);
/// d,k,rca_cx_general,rca_cx_multiplexed,n_checkif,checkif_cx_general,checkif_cx_multiplexed
std::string render_aux_csv(const SweepReport& report);

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct SvgOptions {
  std::string title;
  std::string x_label = "d";
  std::string y_label;
  bool log_y = false;
  unsigned width = 720;
  unsigned height = 440;
  /// Vertical guide lines, e.g. powers of two.
  std::vector<double> guides;
};

/// Series names: nsum, ntot, ratio, checkif, rca, sumcount.
std::vector<Series> report_series(const SweepReport& report, std::string_view name);
SvgOptions default_svg_options(std::string_view series_name);
std::string render_svg(std::span<const Series> series, const SvgOptions& options);

/// Relative paths resolve under $QRS_OUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::filesystem::path& p);

/// Both throw range_error for an empty report (no file is created) and
/// io_error with the path on write failure.
void emit_csv(const SweepReport& report, const std::filesystem::path& path);
void emit_svg(std::span<const Series> series, const SvgOptions& options, const std::filesystem::path& path);

}  // namespace qrs
