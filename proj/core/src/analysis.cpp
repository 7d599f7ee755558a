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

#include "qrs/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "qrs/error.hpp"
#include "qrs/galois.hpp"
#include "qrs/sumsynth.hpp"

namespace qrs {

std::uint64_t sum_gate_count(std::uint32_t d) {
  if (d < 3 || !is_prime(d)) throw invalid_dimension_error("SUM count needs an odd prime, got d=" + std::to_string(d));
  const std::uint64_t dd = d;
  return (dd * dd + dd - 4) / 2;
}

std::vector<std::uint32_t> primes_in(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(std::size_t{hi} + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (std::uint32_t i = std::max<std::uint32_t>(lo, 2); i <= hi; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

const Strategy& Convention::strategy(StrategyKind kind) const {
  switch (kind) {
    case StrategyKind::general:
      return general;
    case StrategyKind::ralph:
      return ralph;
    case StrategyKind::multiplexed:
      break;
  }
  return multiplexed;
}

namespace {

std::vector<Convention> make_registry() {
  std::vector<Convention> r;
  r.push_back(Convention{
      std::string(kDefaultConventionId),
      "Toffoli = 6 CX; C_jX (j>=3) = 4(j-2) Toffolis; Ralph C_jX = 2j-1 CX-equivalent; cross-photon C2X = 6 CX; "
      "collapsed gate with one leftover control = 1 Toffoli; X, H, T, Tdag and OS excluded from CX totals; "
      "DFT = 0 CX",
      Strategy::general(), Strategy::ralph(), Strategy::multiplexed(2)});
  Strategy nested = Strategy::multiplexed(2);
  nested.nested_collapse = true;
  r.push_back(Convention{"qrs-nested-collapse-v1",
                         "as qrs-default-v1, but a collapsed gate whose leftover control shares the target's photon "
                         "costs 1 CX",
                         Strategy::general(), Strategy::ralph(), nested});
  return r;
}

}  // namespace

std::span<const Convention> conventions() {
  static const std::vector<Convention> registry = make_registry();
  return registry;
}

const Convention& find_convention(std::string_view id) {
  for (const auto& c : conventions()) {
    if (c.id == id) return c;
  }
  throw config_error("unknown convention id '" + std::string(id) + "'");
}

const Convention& convention_from(const Config* config) {
  if (config == nullptr) return find_convention(kDefaultConventionId);
  return find_convention(config->get_or("convention.id", std::string(kDefaultConventionId)));
}

std::optional<std::uint64_t> SweepRow::nsum(StrategyKind kind) const {
  switch (kind) {
    case StrategyKind::general:
      return nsum_general;
    case StrategyKind::ralph:
      return nsum_ralph;
    case StrategyKind::multiplexed:
      break;
  }
  return nsum_multiplexed;
}

const SweepRow* SweepReport::find(std::uint32_t d) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), d, [](const SweepRow& r, std::uint32_t v) { return r.d < v; });
  return it != rows.end() && it->d == d ? &*it : nullptr;
}

namespace {

struct RowOutcome {
  std::optional<SweepRow> row;
  std::string diagnostic;
};

LoweringReport lower_for(std::uint32_t d, const Circuit& c, const Strategy& s) {
  try {
    return lower_circuit(c, s);
  } catch (const lowering_error& e) {
    throw lowering_error("d=" + std::to_string(d) + ": " + e.what());
  }
}

RowOutcome compute_row(std::uint32_t d, const SweepOptions& options) {
  const Convention& conv = find_convention(options.convention);
  const SumPlan p = plan(d);
  const Circuit c = synth_sum(d);

  const std::vector<std::string> classes{CostBreakdown::mcx_key(p.k + 1), CostBreakdown::mcx_key(p.k),
                                         CostBreakdown::mcx_key(2), CostBreakdown::mcx_key(1)};
  const auto synthesized = count(c).restricted(classes);
  const auto predicted = predicted_counts(d).restricted(classes);
  if (synthesized != predicted) {
    return {std::nullopt, "d=" + std::to_string(d) + ": synthesized " + synthesized.to_string() +
                              " disagrees with predicted " + predicted.to_string()};
  }

  SweepRow row;
  row.d = d;
  row.k = p.k;
  row.n_sum_gates = sum_gate_count(d);
  row.n_checkif = p.n_checkif;
  row.n_aux = p.n_aux;
  row.n_dft = (d - 1) / 2;
  row.convention = conv.id;

  for (auto kind : options.strategies) {
    const auto cx = lower_for(d, c, conv.strategy(kind)).cx();
    const auto tot = cx * row.n_sum_gates;
    switch (kind) {
      case StrategyKind::general:
        row.nsum_general = cx;
        row.ntot_general = tot;
        break;
      case StrategyKind::ralph:
        row.nsum_ralph = cx;
        row.ntot_ralph = tot;
        break;
      case StrategyKind::multiplexed:
        row.nsum_multiplexed = cx;
        row.ntot_multiplexed = tot;
        break;
    }
  }
  row.os_count = lower_for(d, c, conv.multiplexed).os();
  if (row.nsum_multiplexed && *row.nsum_multiplexed > 0) {
    const double mux = static_cast<double>(*row.nsum_multiplexed);
    if (row.nsum_general) row.ratio_general = static_cast<double>(*row.nsum_general) / mux;
    if (row.nsum_ralph) row.ratio_ralph = static_cast<double>(*row.nsum_ralph) / mux;
  }

  const Circuit rca = synth_rca(p.k);
  row.rca_cx_general = lower_for(d, rca, conv.general).cx();
  row.rca_cx_multiplexed = lower_for(d, rca, conv.multiplexed).cx();
  const Circuit mod = synth_mod(p);
  const auto correction = correction_cx_count(d);
  row.checkif_cx_general = lower_for(d, mod, conv.general).cx() - correction;
  row.checkif_cx_multiplexed = lower_for(d, mod, conv.multiplexed).cx() - correction;
  return {std::move(row), {}};
}

}  // namespace

SweepRow sweep_row(std::uint32_t d, const SweepOptions& options) {
  auto outcome = compute_row(d, options);
  if (!outcome.row) throw resolution_error(outcome.diagnostic);
  return std::move(*outcome.row);
}

SweepReport sweep(std::uint32_t d_min, std::uint32_t d_max, const SweepOptions& options) {
  if (d_min > d_max) throw range_error("empty sweep range [" + std::to_string(d_min) + ", " + std::to_string(d_max) + "]");
  if (options.strategies.empty()) throw range_error("sweep needs at least one strategy");
  const Convention& conv = find_convention(options.convention);

  SweepReport report;
  report.convention = conv.id;
  report.strategies = options.strategies;

  const auto primes = primes_in(std::max<std::uint32_t>(d_min, 3), d_max);
  std::vector<RowOutcome> outcomes(primes.size());
  std::vector<std::exception_ptr> errors(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        outcomes[i] = compute_row(primes[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(primes.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (outcomes[i].row) {
      report.rows.push_back(std::move(*outcomes[i].row));
    } else {
      report.diagnostics.push_back(std::move(outcomes[i].diagnostic));
    }
  }
  return report;
}

std::optional<double> RatioCurve::at(std::uint32_t d) const {
  for (const auto& p : points) {
    if (p.d == d) return p.r;
  }
  return std::nullopt;
}

std::uint32_t first_prime_above_power(unsigned k) {
  if (k > 30) throw range_error("power 2^" + std::to_string(k) + " out of range");
  std::uint64_t n = (std::uint64_t{1} << k) + 1;
  while (!is_prime(n)) ++n;
  return static_cast<std::uint32_t>(n);
}

RatioCurve ratio_curve(const SweepReport& report) {
  RatioCurve curve;
  for (const auto& row : report.rows) {
    if (!row.nsum_general || !row.nsum_multiplexed) {
      throw unsupported_configuration_error("ratio curve needs general and multiplexed columns (missing at d=" +
                                            std::to_string(row.d) + ")");
    }
    if (row.ratio_general) curve.points.push_back({row.d, *row.ratio_general});
  }
  if (curve.points.size() < 2) return curve;
  for (unsigned k = 1; (std::uint64_t{1} << k) < curve.points.back().d; ++k) {
    const auto cross = first_prime_above_power(k);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      if (curve.points[i].d != cross) continue;
      if (curve.points[i].r > curve.points[i - 1].r) curve.jumps.push_back(cross);
      break;
    }
  }
  return curve;
}

std::string csv_header() {
  return "d,k,n_sum_gates,nsum_general,nsum_ralph,nsum_multiplexed,ntot_general,ntot_ralph,ntot_multiplexed,"
         "ratio_general,ratio_ralph,n_checkif,n_aux,os_count,n_dft,convention";
}

namespace {

template <typename T>
void put(std::ostream& s, const std::optional<T>& v) {
  if (!v) return;
  if constexpr (std::is_floating_point_v<T>) {
    s << std::fixed << std::setprecision(6) << *v;
  } else {
    s << *v;
  }
}

void require_rows(const SweepReport& report) {
  if (report.rows.empty()) throw range_error("sweep report has no rows");
}

}  // namespace

std::string render_csv(const SweepReport& report) {
  require_rows(report);
  std::ostringstream s;
  s << csv_header() << '\n';
  for (const auto& r : report.rows) {
    s << r.d << ',' << r.k << ',' << r.n_sum_gates << ',';
    put(s, r.nsum_general);
    s << ',';
    put(s, r.nsum_ralph);
    s << ',';
    put(s, r.nsum_multiplexed);
    s << ',';
    put(s, r.ntot_general);
    s << ',';
    put(s, r.ntot_ralph);
    s << ',';
    put(s, r.ntot_multiplexed);
    s << ',';
    put(s, r.ratio_general);
    s << ',';
    put(s, r.ratio_ralph);
    s << ',' << r.n_checkif << ',' << r.n_aux << ',' << r.os_count << ',' << r.n_dft << ',' << r.convention << '\n';
  }
  return s.str();
}

std::string render_aux_csv(const SweepReport& report) {
  require_rows(report);
  std::ostringstream s;
  s << "d,k,rca_cx_general,rca_cx_multiplexed,n_checkif,checkif_cx_general,checkif_cx_multiplexed\n";
  for (const auto& r : report.rows) {
    s << r.d << ',' << r.k << ',' << r.rca_cx_general << ',' << r.rca_cx_multiplexed << ',' << r.n_checkif << ','
      << r.checkif_cx_general << ',' << r.checkif_cx_multiplexed << '\n';
  }
  return s.str();
}

std::vector<Series> report_series(const SweepReport& report, std::string_view name) {
  std::vector<Series> out;
  auto column = [&](std::string label, auto get) {
    Series s{std::move(label), {}};
    for (const auto& r : report.rows) {
      if (auto v = get(r)) s.points.emplace_back(r.d, static_cast<double>(*v));
    }
    if (!s.points.empty()) out.push_back(std::move(s));
  };
  auto plain = [](auto member) {
    return [member](const SweepRow& r) { return std::optional<double>(static_cast<double>(r.*member)); };
  };
  if (name == "nsum") {
    column("general", [](const SweepRow& r) { return r.nsum_general; });
    column("ralph", [](const SweepRow& r) { return r.nsum_ralph; });
    column("multiplexed", [](const SweepRow& r) { return r.nsum_multiplexed; });
  } else if (name == "ntot") {
    column("general", [](const SweepRow& r) { return r.ntot_general; });
    column("ralph", [](const SweepRow& r) { return r.ntot_ralph; });
    column("multiplexed", [](const SweepRow& r) { return r.ntot_multiplexed; });
  } else if (name == "ratio") {
    column("general/multiplexed", [](const SweepRow& r) { return r.ratio_general; });
    column("ralph/multiplexed", [](const SweepRow& r) { return r.ratio_ralph; });
  } else if (name == "checkif") {
    column("check-if qubits", plain(&SweepRow::n_checkif));
    column("check-if CX (multiplexed)", plain(&SweepRow::checkif_cx_multiplexed));
  } else if (name == "rca") {
    column("RCA CX (general)", plain(&SweepRow::rca_cx_general));
    column("RCA CX (multiplexed)", plain(&SweepRow::rca_cx_multiplexed));
  } else if (name == "sumcount") {
    column("SUM gates", plain(&SweepRow::n_sum_gates));
  } else {
    throw range_error("unknown series '" + std::string(name) + "' (nsum, ntot, ratio, checkif, rca, sumcount)");
  }
  return out;
}

SvgOptions default_svg_options(std::string_view series_name) {
  SvgOptions o;
  o.title = std::string(series_name);
  if (series_name == "nsum") {
    o.y_label = "CX per SUM gate";
    o.log_y = true;
  } else if (series_name == "ntot") {
    o.y_label = "CX for the whole encoder";
    o.log_y = true;
  } else if (series_name == "ratio") {
    o.y_label = "R";
  } else if (series_name == "checkif") {
    o.y_label = "check-if";
  } else if (series_name == "rca") {
    o.y_label = "CX in the adder";
  } else if (series_name == "sumcount") {
    o.y_label = "SUM gates";
  }
  for (double g = 4; g <= 1 << 16; g *= 2) o.guides.push_back(g);
  return o;
}

namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(std::span<const Series> series, const SvgOptions& o) {
  double x0 = std::numeric_limits<double>::max(), x1 = std::numeric_limits<double>::lowest();
  double y0 = x0, y1 = x1;
  auto ty = [&](double y) { return o.log_y ? std::log10(y) : y; };
  std::size_t n_points = 0;
  for (const auto& s : series) {
    for (auto [x, y] : s.points) {
      if (o.log_y && y <= 0) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, ty(y));
      y1 = std::max(y1, ty(y));
      ++n_points;
    }
  }
  if (n_points == 0) throw range_error("nothing to plot");
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  if (!o.log_y) y0 = std::min(y0, 0.0);

  const double left = 70, right = 20, top = 40, bottom = 50;
  const double w = o.width - left - right, h = o.height - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * w; };
  auto py = [&](double y) { return top + h - (ty(y) - y0) / (y1 - y0) * h; };
  static const char* palette[] = {"#1f5fbf", "#d0342c", "#2a9d4b", "#8e44ad", "#e67e22", "#555555"};

  std::ostringstream s;
  s << std::fixed << std::setprecision(2);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\"" << o.height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << o.width / 2.0 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape_xml(o.title)
    << "</text>\n";
  for (double g : o.guides) {
    if (g < x0 || g > x1) continue;
    s << "<line x1=\"" << px(g) << "\" y1=\"" << top << "\" x2=\"" << px(g) << "\" y2=\"" << top + h
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  s << "<line x1=\"" << left << "\" y1=\"" << top + h << "\" x2=\"" << left + w << "\" y2=\"" << top + h
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + h
    << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
    const double label = o.log_y ? std::pow(10.0, yv) : yv;
    s << "<text x=\"" << px(xv) << "\" y=\"" << top + h + 16 << "\" text-anchor=\"middle\">"
      << std::setprecision(0) << xv << "</text>\n";
    s << "<text x=\"" << left - 6 << "\" y=\"" << top + h - h * i / 4 + 4 << "\" text-anchor=\"end\">"
      << std::setprecision(label < 10 ? 2 : 0) << label << "</text>\n";
    s << std::setprecision(2);
  }
  s << "<text x=\"" << left + w / 2 << "\" y=\"" << o.height - 10 << "\" text-anchor=\"middle\">"
    << escape_xml(o.x_label) << "</text>\n";
  s << "<text x=\"16\" y=\"" << top + h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << top + h / 2
    << ")\">" << escape_xml(o.y_label) << (o.log_y ? " (log)" : "") << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = palette[i % std::size(palette)];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : series[i].points) {
      if (o.log_y && y <= 0) continue;
      s << px(x) << ',' << py(y) << ' ';
    }
    s << "\"/>\n";
    s << "<text x=\"" << left + 10 << "\" y=\"" << top + 14 + 14.0 * i << "\" fill=\"" << color << "\">"
      << escape_xml(series[i].name) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::filesystem::path resolve_output_path(const std::filesystem::path& p) {
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("QRS_OUT_DIR"); dir != nullptr && *dir != '\0') return std::filesystem::path(dir) / p;
  return p;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw io_error("write to '" + path.string() + "' failed");
}

}  // namespace

void emit_csv(const SweepReport& report, const std::filesystem::path& path) {
  write_text(path, render_csv(report));
}

void emit_svg(std::span<const Series> series, const SvgOptions& options, const std::filesystem::path& path) {
  write_text(path, render_svg(series, options));
}

}  // namespace qrs
