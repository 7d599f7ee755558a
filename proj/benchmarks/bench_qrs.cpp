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

#include <benchmark/benchmark.h>

#include "qrs/analysis.hpp"
#include "qrs/gf2m.hpp"
#include "qrs/lowering.hpp"
#include "qrs/revsim.hpp"
#include "qrs/sumsynth.hpp"

namespace {

void BM_SynthSum(benchmark::State& state) {
  const auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrs::synth_sum(d));
}
BENCHMARK(BM_SynthSum)->Arg(5)->Arg(61)->Arg(139)->Arg(257);

void BM_VerifySum(benchmark::State& state) {
  const auto d = static_cast<std::uint32_t>(state.range(0));
  const auto c = qrs::synth_sum(d);
  for (auto _ : state) benchmark::DoNotOptimize(qrs::verify_sum(d, c));
  state.SetItemsProcessed(state.iterations() * d * d);
}
BENCHMARK(BM_VerifySum)->Arg(13)->Arg(61)->Arg(127)->Unit(benchmark::kMillisecond);

void BM_LowerMultiplexed(benchmark::State& state) {
  const auto c = qrs::synth_sum(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qrs::lower_circuit(c, qrs::Strategy::multiplexed()));
}
BENCHMARK(BM_LowerMultiplexed)->Arg(139)->Arg(257);

void BM_LowerGeneral(benchmark::State& state) {
  const auto c = qrs::synth_sum(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qrs::lower_circuit(c, qrs::Strategy::general()));
}
BENCHMARK(BM_LowerGeneral)->Arg(139)->Arg(257);

void BM_Sweep(benchmark::State& state) {
  qrs::SweepOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qrs::sweep(3, 257, o));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CMulAddVerify(benchmark::State& state) {
  const auto f = qrs::FieldSpec::binary_extension(static_cast<unsigned>(state.range(0)));
  const auto c = qrs::synth_cmuladd(f, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qrs::verify_cmuladd(c, f, 1));
}
BENCHMARK(BM_CMulAddVerify)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
