// Copyright 2026 The hiddenqutrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "hiddenqutrit/hilbert.hpp"
#include "hiddenqutrit/measurement.hpp"
#include "hiddenqutrit/scenario.hpp"
#include "hiddenqutrit/tomography.hpp"

namespace {

hq::ScenarioParams scenario(hq::ScenarioKind kind, double flux) {
  hq::ScenarioParams params;
  params.kind = kind;
  params.flux = flux;
  params.seed = 7;
  return params;
}

void BM_PrepareScenario(benchmark::State& state) {
  const auto params = scenario(hq::ScenarioKind::NoonDephased, 1e4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hq::prepare_scenario(params));
  }
}
BENCHMARK(BM_PrepareScenario);

void BM_PartialTraceHidden(benchmark::State& state) {
  hq::Vector2c h, v;
  h << 1.0, 0.0;
  v << 0.0, 1.0;
  const int dim = static_cast<int>(state.range(0));
  const auto [a, b] = hq::mode_pair_from_delay(h, v, 60.0, 100.0, dim);
  const auto rho = hq::FullDensityMatrix::from_state(
      hq::FullTwoPhotonState::symmetrize(a, b));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hq::partial_trace_hidden(rho));
  }
}
BENCHMARK(BM_PartialTraceHidden)->DenseRange(2, 4);

void BM_BornProbability(benchmark::State& state) {
  const auto rho =
      hq::prepare_scenario(scenario(hq::ScenarioKind::NoonDistinguishable,
                                    1e4));
  const auto settings = hq::table1_settings();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hq::born_probability(rho, settings[i++ % settings.size()]));
  }
}
BENCHMARK(BM_BornProbability);

void BM_SimulateCounts(benchmark::State& state) {
  const auto rho = hq::prepare_scenario(
      scenario(hq::ScenarioKind::NoonDistinguishable, 1e4));
  const auto settings = hq::table1_settings();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hq::simulate_counts(rho, settings, 1e4, seed++));
  }
}
BENCHMARK(BM_SimulateCounts);

void BM_LinearReconstruct(benchmark::State& state) {
  const auto params = scenario(hq::ScenarioKind::NoonDistinguishable, 1e4);
  const auto rho = hq::prepare_scenario(params);
  const auto records =
      hq::simulate_counts(rho, hq::table1_settings(), params.flux, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hq::linear_reconstruct(records, true));
  }
}
BENCHMARK(BM_LinearReconstruct);

void BM_MleReconstruct(benchmark::State& state) {
  const auto params = scenario(hq::ScenarioKind::NoonDistinguishable,
                               static_cast<double>(state.range(0)));
  const auto rho = hq::prepare_scenario(params);
  const auto records =
      hq::simulate_counts(rho, hq::table1_settings(), params.flux, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hq::mle_reconstruct(records));
  }
}
BENCHMARK(BM_MleReconstruct)->Arg(100)->Arg(10000)->Unit(
    benchmark::kMicrosecond);

void BM_NllGradient(benchmark::State& state) {
  const auto params = scenario(hq::ScenarioKind::NoonDistinguishable, 1e4);
  const auto rho = hq::prepare_scenario(params);
  const auto records =
      hq::simulate_counts(rho, hq::table1_settings(), params.flux, 7);
  const hq::PoissonNllModel model(records);
  const Eigen::VectorXd point =
      hq::PoissonNllModel::params_from_state(rho.matrix(), params.flux);
  Eigen::VectorXd grad(hq::PoissonNllModel::kNumParams);
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.value_and_gradient(point, grad));
  }
}
BENCHMARK(BM_NllGradient);

}  // namespace

BENCHMARK_MAIN();
