// Copyright 2026 The Orthograph Authors
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

// Serial reference against the OpenMP kernels for the exhaustive sweeps.

#include <benchmark/benchmark.h>

#include "orthograph/sweep.hpp"

namespace {

using orthograph::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_Heights(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthograph::sweep_heights(static_cast<int>(state.range(0)), mode(state)));
  }
}

void BM_GammaCriterion(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        orthograph::sweep_gamma_criterion(static_cast<int>(state.range(0)), mode(state)));
  }
}

void BM_ClosedLinks(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        orthograph::sweep_closed_links(static_cast<int>(state.range(0)), mode(state)));
  }
}

void BM_Automorphisms(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        orthograph::sweep_automorphisms(static_cast<int>(state.range(0)), mode(state)));
  }
}

void BM_Properties(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        orthograph::sweep_properties(static_cast<int>(state.range(0)), mode(state)));
  }
}

}  // namespace

BENCHMARK(BM_Heights)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaCriterion)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedLinks)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Automorphisms)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Properties)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
