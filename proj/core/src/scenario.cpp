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

#include "hiddenqutrit/scenario.hpp"

#include <cmath>

#include "hiddenqutrit/hilbert.hpp"

namespace hq {

namespace {

struct ScenarioEntry {
  ScenarioKind kind;
  const char* name;
  char label;
};

constexpr ScenarioEntry kScenarios[] = {
    {ScenarioKind::HvOverlapped, "hv_overlapped", 'a'},
    {ScenarioKind::HvDelayed, "hv_delayed", 'b'},
    {ScenarioKind::HvPartial, "hv_partial", 'c'},
    {ScenarioKind::NoonIndistinguishable, "noon_indistinguishable", 'd'},
    {ScenarioKind::NoonDistinguishable, "noon_distinguishable", 'e'},
    {ScenarioKind::NoonNaiveComparison, "noon_naive_comparison", 'f'},
    {ScenarioKind::NoonDephased, "noon_dephased", 'g'},
};

}  // namespace

std::string scenario_name(ScenarioKind kind) {
  for (const auto& e : kScenarios) {
    if (e.kind == kind) return e.name;
  }
  throw ValidationError("unknown scenario");
}

ScenarioKind scenario_from_name(const std::string& name) {
  for (const auto& e : kScenarios) {
    if (name == e.name) return e.kind;
  }
  throw ValidationError("unknown scenario: " + name);
}

std::vector<ScenarioKind> all_scenarios() {
  std::vector<ScenarioKind> kinds;
  for (const auto& e : kScenarios) kinds.push_back(e.kind);
  return kinds;
}

char scenario_figure_label(ScenarioKind kind) {
  for (const auto& e : kScenarios) {
    if (e.kind == kind) return e.label;
  }
  throw ValidationError("unknown scenario");
}

double resolve_delay(const ScenarioParams& params) {
  if (params.delay) {
    return *params.delay;
  }
  switch (params.kind) {
    case ScenarioKind::HvOverlapped:
    case ScenarioKind::NoonIndistinguishable:
    case ScenarioKind::NoonDephased:
      return 0.0;
    case ScenarioKind::HvDelayed:
    case ScenarioKind::NoonDistinguishable:
    case ScenarioKind::NoonNaiveComparison:
      return 10.0 * params.coherence_time;
    case ScenarioKind::HvPartial:
      // gamma^2 = exp(-d^2 / tau^2) = 1/3.
      return params.coherence_time * std::sqrt(std::log(3.0));
  }
  throw ValidationError("unknown scenario");
}

Method scenario_method(ScenarioKind kind) {
  return kind == ScenarioKind::NoonNaiveComparison ? Method::Naive
                                                   : Method::Mle;
}

VisibleDensityMatrix prepare_scenario(const ScenarioParams& params) {
  Vector2c h, v;
  h << 1.0, 0.0;
  v << 0.0, 1.0;
  const double delay = resolve_delay(params);
  const auto [mode_a, mode_b] =
      mode_pair_from_delay(h, v, delay, params.coherence_time);
  const auto state = FullTwoPhotonState::symmetrize(mode_a, mode_b);
  VisibleDensityMatrix rho =
      partial_trace_hidden(FullDensityMatrix::from_state(state));
  switch (params.kind) {
    case ScenarioKind::HvOverlapped:
    case ScenarioKind::HvDelayed:
    case ScenarioKind::HvPartial:
      return rho;
    case ScenarioKind::NoonIndistinguishable:
    case ScenarioKind::NoonDistinguishable:
    case ScenarioKind::NoonNaiveComparison:
      return apply_unitary(rho,
                           waveplate_unitary(WaveplateKind::Quarter, 45.0));
    case ScenarioKind::NoonDephased:
      return collective_dephasing(
          apply_unitary(rho,
                        waveplate_unitary(WaveplateKind::Quarter, 45.0)),
          params.dephasing_stdev, params.rotation_angle_deg);
  }
  throw ValidationError("unknown scenario");
}

}  // namespace hq
