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

#include "catrobot/dynamics.hpp"
#include "catrobot/scenario.hpp"

namespace {

void BM_CoupledStep(benchmark::State& state) {
  const catrobot::QuadrotorParams params =
      catrobot::QuadrotorParams::defaults(0.0076);
  catrobot::CoupledState coupled;
  coupled.cable = {2.0, 0.0076};
  coupled.quad_a.x = {0.0, -0.35, 1.3};
  coupled.quad_b.x = {0.0, 0.35, 1.3};
  const catrobot::ControlCommand hover{params.mass * params.gravity, {}};
  for (auto _ : state) {
    coupled = catrobot::step(coupled, hover, hover, params, 1e-3);
    benchmark::DoNotOptimize(coupled);
  }
}
BENCHMARK(BM_CoupledStep);

void BM_CableForces(benchmark::State& state) {
  catrobot::CoupledState coupled;
  coupled.cable = {2.0, 0.05};
  coupled.quad_a.x = {0.0, -0.3, 1.0};
  coupled.quad_b.x = {0.05, 0.4, 1.15};
  for (auto _ : state) {
    benchmark::DoNotOptimize(catrobot::cable_forces(coupled));
  }
}
BENCHMARK(BM_CableForces);

void BM_FlowerScenarioSecond(benchmark::State& state) {
  catrobot::ScenarioSpec spec = catrobot::builtin_scenario("exp1_flower");
  spec.sim.duration = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(catrobot::run_scenario(spec));
  }
}
BENCHMARK(BM_FlowerScenarioSecond)->Unit(benchmark::kMillisecond);

}  // namespace
