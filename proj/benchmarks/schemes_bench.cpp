// Copyright 2026 The mbu Authors
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

#include "mbu/modarith.hpp"
#include "mbu/program.hpp"
#include "mbu/resources.hpp"
#include "mbu/schemes.hpp"
#include "mbu/verify.hpp"

namespace {

using namespace mbu;

const std::uint64_t kModuli[] = {15, 21, 57, 255};

void BM_BuildSchemeC(benchmark::State& state) {
  const auto p = SchemeParams::make(kModuli[state.range(0)], 2);
  const auto l = RegisterLayout::make(p.width);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_scheme_c(p, l));
  }
  state.SetLabel("N=" + std::to_string(p.modulus));
}
BENCHMARK(BM_BuildSchemeC)->DenseRange(0, 3);

void BM_SimulateScheme(benchmark::State& state) {
  const auto kind = static_cast<SchemeKind>(state.range(0));
  const auto p = SchemeParams::make(kModuli[state.range(1)], 2);
  const auto l = RegisterLayout::make(p.width);
  const auto program = build_scheme(kind, p, l);
  const auto input = scheme_input_state(p, 1, l);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_program(program, input, ++seed));
  }
  state.SetLabel(std::string(to_string(kind)) + " N=" + std::to_string(p.modulus));
}
BENCHMARK(BM_SimulateScheme)->ArgsProduct({{0, 1, 2}, {0, 1, 2}});

void BM_DenseSimulation(benchmark::State& state) {
  const auto p = SchemeParams::make(15, 7);
  const auto l = RegisterLayout::make(p.width);
  const auto program = build_scheme_a(p, l);
  const auto input = StateVector::basis(l.total, l.index_of(false, 3, 0), Storage::kDense);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_program(program, input, 0));
  }
}
BENCHMARK(BM_DenseSimulation)->Unit(benchmark::kMillisecond);

void BM_VerifyAllOutcomes(benchmark::State& state) {
  const auto p = SchemeParams::make(kModuli[state.range(0)], 2);
  const SchemeVerifier verifier(SchemeKind::kC, p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verifier.verify(1, AllOutcomes{}));
  }
  state.SetLabel("N=" + std::to_string(p.modulus));
}
BENCHMARK(BM_VerifyAllOutcomes)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_CompareSchemes(benchmark::State& state) {
  const auto p = SchemeParams::make(kModuli[state.range(0)], 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_schemes(p));
  }
  state.SetLabel("N=" + std::to_string(p.modulus));
}
BENCHMARK(BM_CompareSchemes)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
