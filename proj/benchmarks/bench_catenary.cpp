// Copyright 2026 The catrobot Authors
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

#include "catrobot/catenary.hpp"

namespace {

void BM_SolveA(benchmark::State& state) {
  const double span_ratio = static_cast<double>(state.range(0)) / 100.0;
  const double s = span_ratio;  // length fixed at 2 m
  for (auto _ : state) {
    benchmark::DoNotOptimize(catrobot::solve_a(2.0, s));
  }
}
BENCHMARK(BM_SolveA)->Arg(20)->Arg(35)->Arg(49)->Arg(90);

void BM_SolveTwoPoint(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(catrobot::solve_two_point(2.0, 0.7, 0.2));
  }
}
BENCHMARK(BM_SolveTwoPoint);

void BM_SolveCatenaryWithRates(benchmark::State& state) {
  const catrobot::CableSpec cable{2.0, 0.0076};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        catrobot::solve_catenary(cable, 0.35, 0.1, -0.05));
  }
}
BENCHMARK(BM_SolveCatenaryWithRates);

void BM_TensionPair(benchmark::State& state) {
  const catrobot::CableSpec cable{2.0, 0.05639};
  const catrobot::CatenarySolution sol = catrobot::solve_catenary(cable, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(catrobot::tension_pair(cable, sol));
  }
}
BENCHMARK(BM_TensionPair);

}  // namespace
