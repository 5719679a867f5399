// SPDX-License-Identifier: Apache-2.0
//
// risdof: sum-DoF analysis of active-RIS-assisted two-user MIMO interference channels
// Copyright (C) 2026 The risdof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "risdof/dof.hpp"
#include "risdof/oracle.hpp"
#include "risdof/scheme.hpp"
#include "risdof/transceiver.hpp"

using namespace risdof;

namespace {

void BM_AchievableSumdof(benchmark::State& state) {
  const auto cfg = canonicalize(10, 10, 10, 10);
  int r = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(achievable_sumdof(cfg, RisConfig{r}));
    r = (r + 7) % 205;
  }
}
BENCHMARK(BM_AchievableSumdof);

void BM_BruteForceOptimum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cfg = canonicalize(n, n, n, n);
  const RisConfig ris{2 * n * n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::case_optimum(cfg, ris, CaseLabel::Case1));
  }
}
BENCHMARK(BM_BruteForceOptimum)->Arg(10)->Arg(40)->Arg(160);

void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cfg = canonicalize(n, n, n, n);
  const RisConfig ris{2 * n * n};
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize(cfg, ris, CaseLabel::Case1, seed++));
  }
}
BENCHMARK(BM_Synthesize)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RunScheme(benchmark::State& state) {
  const auto cfg = canonicalize(6, 4, 3, 3);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scheme(cfg, RisConfig{8}, CaseLabel::Case1, seed++));
  }
}
BENCHMARK(BM_RunScheme)->Unit(benchmark::kMicrosecond);

void BM_SumRate(benchmark::State& state) {
  const auto run = run_scheme(canonicalize(10, 10, 10, 10), RisConfig{200}, CaseLabel::Case1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_rate(run.instance.effective, run.precoders, run.alloc, 100.0));
  }
}
BENCHMARK(BM_SumRate)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
