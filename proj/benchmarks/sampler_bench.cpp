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

#include <vector>

#include <benchmark/benchmark.h>

#include "mbco/shim.hpp"

namespace {

using namespace mbco;

void BM_NoisySampler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IsingProblem problem{std::vector<double>(n, 1.0), std::vector<double>(n, 0.0),
                             std::vector<double>(n, 0.0)};
  const NoisySamplerConfig cfg = random_faults(n, 0.05, 0.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(noisy_sampler(problem, cfg, 1000));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_NoisySampler)->Arg(16)->Arg(160)->Unit(benchmark::kMillisecond);

}  // namespace
