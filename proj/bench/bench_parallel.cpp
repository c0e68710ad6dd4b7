// Copyright 2026 The irj Authors
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


// Serial reference against the OpenMP kernels.

#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "irj/design_search.hpp"
#include "irj/execution.hpp"
#include "irj/joint_model.hpp"
#include "irj/tendon.hpp"

namespace {

using irj::Execution;

irj::JointSpec MakeJoint(double band_width) {
  irj::JointSpec j;
  j.section = irj::SectionSpec::Symmetric(0.0335, 50e-6, 6890.0, band_width);
  j.length = 0.06;
  j.wrinkle_strain = 0.333;
  j.elastic_slope = 20.0;
  j.plateau_onset_angle = 0.3;
  return j;
}

void BM_RoutingSweep(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  std::vector<double> angles;
  for (int k = 0; k < n; ++k) angles.push_back(std::numbers::pi * k / n);
  const irj::JointSpec joint = MakeJoint(std::numbers::pi / 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(irj::RoutingSweep(joint, angles, angles, 0.02, exec));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RoutingSweep)
    ->ArgNames({"parallel", "grid"})
    ->ArgsProduct({{0, 1}, {32, 128}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_EnumerateDesigns(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  irj::DesignProblem p;
  p.available_units = {MakeJoint(0.4), MakeJoint(0.8), MakeJoint(1.2), MakeJoint(1.6)};
  p.orifice_layout = {{0.02, 0.0}, {0.0, 0.02}, {-0.014, 0.014}};
  p.allowed_rotations = {0.0, 0.5 * std::numbers::pi};
  p.target_sequence = {0, 1, 2, 3};
  p.target_directions = {std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  for (auto _ : state) {
    benchmark::DoNotOptimize(irj::EnumerateDesigns(p, exec));
  }
  state.counters["candidates"] = p.SpaceSize();
}
BENCHMARK(BM_EnumerateDesigns)
    ->ArgNames({"parallel"})
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
