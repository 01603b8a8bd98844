// Copyright 2026 The mbco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "mbco/block_evolution.hpp"
#include "mbco/observables.hpp"

namespace {

using namespace mbco;

const AnnealSchedule kSchedule = AnnealSchedule::linear(11.0, 15.0);

void BM_CleanBlock(benchmark::State& state) {
  const ChainSpec chain{160, 1.0, 0.4};
  const double tau = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_clean_block(0.7, chain, kSchedule, tau));
  }
}
BENCHMARK(BM_CleanBlock)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_DisorderedBlock(benchmark::State& state) {
  const ChainSpec chain{160, 1.0, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evolve_disordered_block(0.7, chain, kSchedule, 1.01, Complex(0.02, -0.01), 10.0));
  }
}
BENCHMARK(BM_DisorderedBlock)->Unit(benchmark::kMicrosecond);

// Whole chain at one anneal time, single thread.
void BM_QuenchPoint(benchmark::State& state) {
  const ChainSpec chain{static_cast<int>(state.range(0)), 1.0, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quench_sweep(chain, kSchedule, {10.0}));
  }
}
BENCHMARK(BM_QuenchPoint)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

}  // namespace
