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

// qrs: command-line front end for SUM-gate synthesis, lowering, GF(2^m)
// encoders, exhaustive verification and sweeps.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "qrs/analysis.hpp"
#include "qrs/config.hpp"
#include "qrs/error.hpp"
#include "qrs/gf2m.hpp"
#include "qrs/interchange.hpp"
#include "qrs/lowering.hpp"
#include "qrs/revsim.hpp"
#include "qrs/sumsynth.hpp"

namespace {

// Resolves against QRS_OUT_DIR and creates missing parent directories.
std::filesystem::path output_path(const std::string& p) {
  auto path = qrs::resolve_output_path(p);
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  return path;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qrs::io_error("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw qrs::io_error("write to '" + path.string() + "' failed");
}

std::string render_row(const qrs::FieldSpec& f, const std::vector<std::uint32_t>& row) {
  auto name = [&](std::uint32_t v) -> std::string {
    if (v == 0) return "0";
    const auto e = f.log_alpha(v);
    if (e == 0) return "1";
    return e == 1 ? "a" : "a^" + std::to_string(e);
  };
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? ", " : "") + name(row[i]);
  return s + "]";
}

qrs::Circuit without_gate(const qrs::Circuit& c, std::size_t index) {
  if (index >= c.size()) {
    throw qrs::range_error("gate index " + std::to_string(index) + " out of range (circuit has " +
                           std::to_string(c.size()) + " gates)");
  }
  qrs::Circuit out(c.registers(), c.meta());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != index) out.append(c[i]);
  }
  out.seal();
  return out;
}

std::vector<qrs::StrategyKind> parse_strategies(const std::string& list) {
  std::vector<qrs::StrategyKind> out;
  std::stringstream s(list);
  std::string item;
  while (std::getline(s, item, ',')) {
    auto k = qrs::strategy_from_string(item);
    if (!k) throw qrs::config_error("unknown strategy '" + item + "'");
    out.push_back(*k);
  }
  return out;
}

struct Globals {
  std::string config_path;
  std::optional<qrs::Config> config;
  const qrs::Config* get() {
    if (!config && !config_path.empty()) config = qrs::Config::load(config_path);
    return config ? &*config : nullptr;
  }
};

int run_synth_sum(std::uint32_t d, const std::string& emit, bool oracle) {
  const auto p = qrs::plan(d);
  const auto c = qrs::synth_sum(d);
  const auto counts = qrs::count(c);
  std::cout << "SUM gate, d=" << d << ", k=" << p.k << ", case " << (p.sum_case == qrs::SumCase::a ? "A" : "B")
            << ", check-if qubits " << p.n_checkif << ", ancillas " << p.n_aux
            << (p.carry_substitutes() ? " (top carry holds the last flag)" : "") << "\n";
  std::cout << "gates " << c.size() << ": " << counts.to_string() << "\n";
  if (!emit.empty()) {
    qrs::write_circuit_file(c, output_path(emit).string());
    std::cout << "wrote " << output_path(emit).string() << "\n";
  }
  if (!oracle) return 0;
  const std::vector<std::string> keys{qrs::CostBreakdown::mcx_key(p.k + 1), qrs::CostBreakdown::mcx_key(p.k),
                                      qrs::CostBreakdown::mcx_key(2), qrs::CostBreakdown::mcx_key(1)};
  const auto predicted = qrs::predicted_counts(d).restricted(keys);
  const auto got = counts.restricted(keys);
  std::cout << "predicted   " << predicted.to_string() << "\n";
  std::cout << "synthesized " << got.to_string() << "\n";
  const bool ok = predicted == got;
  std::cout << (ok ? "PASS" : "FAIL") << " oracle d=" << d << "\n";
  return ok ? 0 : 1;
}

int run_lower(const std::string& in, const std::string& strategy, unsigned os_cost, const std::string& report_path,
              bool expand, bool pass_dft) {
  auto kind = qrs::strategy_from_string(strategy);
  if (!kind) throw qrs::config_error("unknown strategy '" + strategy + "' (general, ralph, multiplexed)");
  qrs::Strategy s{*kind, os_cost};
  auto c = qrs::read_circuit_file(in);
  if (expand) c = qrs::expand_cmuladd(c);
  const auto report = qrs::lower_circuit(c, s, qrs::LoweringOptions{pass_dft});
  write_file(output_path(report_path), qrs::lowering_report_csv(report));
  std::cout << "strategy " << strategy << ": " << report.total.to_string() << "\n";
  std::cout << "CX " << report.cx() << ", OS " << report.os() << "\n";
  if (!report.caveat.empty()) std::cout << "caveat: " << report.caveat << "\n";
  for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

int run_gf2m(unsigned m, std::optional<unsigned> k_opt, std::optional<std::string> poly, const std::string& emit,
             const std::string& report_path, const qrs::Config* config) {
  const auto field = poly ? qrs::FieldSpec::binary_extension(m, static_cast<std::uint32_t>(std::stoul(*poly, nullptr, 0)))
                          : qrs::FieldSpec::binary_extension(m, config);
  const unsigned n = field.order() - 1;
  const unsigned k = k_opt.value_or((n + 1) / 2);
  const auto code = qrs::build_code(field, k);
  std::cout << field.describe() << ", n=" << n << ", K=" << k << "\n";
  std::cout << "g_perp(x) coefficients (ascending): " << render_row(field, code.dual_generator) << "\n";
  std::cout << "g(x) coefficients (ascending): " << render_row(field, code.generator) << "\n";
  if (n <= 15) {
    std::cout << "G =\n";
    for (const auto& row : code.g) std::cout << "  " << render_row(field, row) << "\n";
    std::cout << "H =\n";
    for (const auto& row : code.h) std::cout << "  " << render_row(field, row) << "\n";
  }
  std::cout << "G*H^T = 0: " << (qrs::generator_parity_consistent(code) ? "yes" : "NO") << "\n";

  const auto encoder = qrs::synth_encoder_gf2m(code);
  const auto rows = qrs::encoder_gate_rows(encoder, field);
  if (!emit.empty()) qrs::write_circuit_file(encoder, output_path(emit).string());
  write_file(output_path(report_path), qrs::encoder_report_csv(rows));

  const auto expanded = qrs::expand_cmuladd(encoder);
  const qrs::LoweringOptions pass{true};
  const auto general = qrs::lower_circuit(expanded, qrs::Strategy::general(), pass);
  const auto mux = qrs::lower_circuit(expanded, qrs::Strategy::multiplexed(), pass);
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.verified && r.cx_count == r.formula_count;
  std::cout << "encoder: " << qrs::count(encoder).to_string() << "\n";
  std::cout << "classical-part CX: general " << general.cx() << ", multiplexed " << mux.cx() << "\n";
  std::cout << "note: " << encoder.meta().note << "\n";
  std::cout << (all_ok ? "all CMulAdd gates verified" : "CMulAdd verification FAILED") << "\n";
  return all_ok ? 0 : 1;
}

int run_verify(std::uint32_t d, std::optional<std::size_t> mutate) {
  auto c = qrs::synth_sum(d);
  if (mutate) {
    std::cout << "removing gate " << *mutate << " (" << qrs::gate_class(c[*mutate]) << ")\n";
    c = without_gate(c, *mutate);
  }
  const auto report = qrs::verify_sum(d, c);
  std::cout << report.summary() << "\n";
  for (const auto& f : report.failures) {
    std::cout << "  A=" << f.a << " B=" << f.b << " expected " << f.expected << " got " << f.got << "\n";
  }
  return report.verified() ? 0 : 1;
}

int run_sweep(std::uint32_t lo, std::uint32_t hi, const std::string& strategies, const std::string& out,
              const std::string& svg, const std::string& series, const qrs::Config* config) {
  qrs::SweepOptions options;
  options.strategies = parse_strategies(strategies);
  options.convention = qrs::convention_from(config).id;
  const auto report = qrs::sweep(lo, hi, options);
  for (const auto& diag : report.diagnostics) std::cerr << "dropped row: " << diag << "\n";
  const auto path = output_path(out);
  qrs::emit_csv(report, path);
  std::cout << "wrote " << report.rows.size() << " rows to " << path.string() << " (convention " << report.convention
            << ")\n";
  if (!svg.empty()) {
    const auto s = qrs::report_series(report, series);
    const auto svg_path = output_path(svg);
    qrs::emit_svg(s, qrs::default_svg_options(series), svg_path);
    std::cout << "wrote " << svg_path.string() << "\n";
  }
  return report.diagnostics.empty() ? 0 : 1;
}

int run_gadget(unsigned k, unsigned os_cost) {
  std::cout << qrs::render_gadget(qrs::emit_gadget(k, os_cost));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrs: qubit-level cost models for qudit QRS encoders"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--config", globals.config_path, "key=value configuration file")->check(CLI::ExistingFile);

  int status = 0;

  auto* synth = app.add_subcommand("synth-sum", "Synthesize the qubit-level SUM gate for a prime d");
  std::uint32_t synth_d = 0;
  std::string synth_emit;
  bool synth_oracle = false;
  synth->add_option("--d", synth_d, "prime qudit dimension")->required();
  synth->add_option("--emit", synth_emit, "write the circuit document here");
  synth->add_flag("--oracle", synth_oracle, "compare against the closed-form gate counts");
  synth->callback([&] { status = run_synth_sum(synth_d, synth_emit, synth_oracle); });

  auto* lower = app.add_subcommand("lower", "Lower a circuit document under a cost model");
  std::string lower_in, lower_strategy, lower_report;
  unsigned lower_os = 2;
  bool lower_expand = false, lower_pass_dft = false;
  lower->add_option("--in", lower_in, "circuit document")->required()->check(CLI::ExistingFile);
  lower->add_option("--strategy", lower_strategy, "general, ralph or multiplexed")
      ->required()
      ->check(CLI::IsMember({"general", "ralph", "multiplexed"}));
  lower->add_option("--os-cost", lower_os, "optical switches per collapsed control")->check(CLI::PositiveNumber);
  lower->add_option("--report", lower_report, "per-gate CSV report")->required();
  lower->add_flag("--expand-cmuladd", lower_expand, "replace CMulAdd gates by their CX networks first");
  lower->add_flag("--pass-dft", lower_pass_dft, "count DFT gates as opaque instead of failing");
  lower->callback(
      [&] { status = run_lower(lower_in, lower_strategy, lower_os, lower_report, lower_expand, lower_pass_dft); });

  auto* gf = app.add_subcommand("gf2m", "Build the GF(2^m) encoder and its CMulAdd report");
  unsigned gf_m = 0;
  std::optional<unsigned> gf_k;
  std::optional<std::string> gf_poly;
  std::string gf_emit, gf_report;
  gf->add_option("--m", gf_m, "extension degree")->required();
  gf->add_option("--k", gf_k, "message length K (default (n+1)/2)");
  gf->add_option("--poly", gf_poly, "primitive polynomial bitmask, e.g. 0x7");
  gf->add_option("--emit", gf_emit, "write the encoder document here")->required();
  gf->add_option("--report", gf_report, "CMulAdd CSV report")->required();
  gf->callback([&] { status = run_gf2m(gf_m, gf_k, gf_poly, gf_emit, gf_report, globals.get()); });

  auto* verify = app.add_subcommand("verify", "Exhaustively check the SUM gate for a prime d");
  std::uint32_t verify_d = 0;
  std::optional<std::size_t> verify_mutate;
  verify->add_option("--d", verify_d, "prime qudit dimension")->required();
  verify->add_option("--mutate", verify_mutate, "delete this gate index before checking");
  verify->callback([&] { status = run_verify(verify_d, verify_mutate); });

  auto* sweep = app.add_subcommand("sweep", "Sweep prime dimensions and write the cost report");
  std::uint32_t sweep_lo = 3, sweep_hi = 257;
  std::string sweep_strategies = "general,ralph,multiplexed", sweep_out = "report.csv", sweep_svg,
              sweep_series = "nsum";
  sweep->add_option("--d-min", sweep_lo, "smallest dimension");
  sweep->add_option("--d-max", sweep_hi, "largest dimension");
  sweep->add_option("--strategies", sweep_strategies, "comma-separated strategies");
  sweep->add_option("--out", sweep_out, "CSV path (relative paths honor QRS_OUT_DIR)");
  sweep->add_option("--svg", sweep_svg, "optional SVG chart path");
  sweep->add_option("--series", sweep_series, "nsum, ntot, ratio, checkif, rca or sumcount");
  sweep->callback([&] {
    status = run_sweep(sweep_lo, sweep_hi, sweep_strategies, sweep_out, sweep_svg, sweep_series, globals.get());
  });

  auto* gadget = app.add_subcommand("gadget", "Describe the multiplexed C_kX gadget");
  unsigned gadget_k = 0, gadget_os = 2;
  gadget->add_option("--k", gadget_k, "number of time-bin controls")->required()->check(CLI::PositiveNumber);
  gadget->add_option("--os-cost", gadget_os, "optical switches per control")->check(CLI::PositiveNumber);
  gadget->callback([&] { status = run_gadget(gadget_k, gadget_os); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const qrs::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
