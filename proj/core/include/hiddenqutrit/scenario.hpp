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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/tomography.hpp"
#include "hiddenqutrit/types.hpp"

namespace hq {

// The canonical experiment family: an H and a V photon with a controllable
// arrival-time delay, optionally converted to a NOON state by a common
// quarter-waveplate at 45 degrees, optionally collectively dephased.
enum class ScenarioKind {
  HvOverlapped,           // delay 0: pure |psi+>
  HvDelayed,              // delay >> coherence time: 50/50 psi+ / psi-
  HvPartial,              // delay tuned so gamma^2 = 1/3: 2:1 psi+ / psi-
  NoonIndistinguishable,  // QWP at 45 on the overlapped pair: pure NOON
  NoonDistinguishable,    // QWP at 45 on the delayed pair
  NoonNaiveComparison,    // same state as NoonDistinguishable, naive fit
  NoonDephased,           // collectively dephased NOON
};

std::string scenario_name(ScenarioKind kind);
ScenarioKind scenario_from_name(const std::string& name);
std::vector<ScenarioKind> all_scenarios();  // figure order a..g

// Single-letter figure label a..g.
char scenario_figure_label(ScenarioKind kind);

struct ScenarioParams {
  ScenarioKind kind = ScenarioKind::HvOverlapped;
  double coherence_time = 100.0;
  // When unset, resolved per kind: 0 for the overlapped/NOON-pure cases,
  // 10 * coherence_time for the delayed ones, sqrt(ln 3) * coherence_time
  // for the partial case.
  std::optional<double> delay;
  double flux = 1e5;
  std::uint64_t seed = 42;
  double dephasing_stdev = 2.0;     // radians; NoonDephased only
  double rotation_angle_deg = 3.0;  // dephasing-frame rotation; NoonDephased
};

double resolve_delay(const ScenarioParams& params);

// The reconstruction method the scenario is meant to showcase: naive for
// NoonNaiveComparison, MLE otherwise.
Method scenario_method(ScenarioKind kind);

// Builds the scenario's true visible state by symmetrizing the delayed
// mode pair in the full space, tracing out the hidden bins, and applying
// the scenario's optics.
VisibleDensityMatrix prepare_scenario(const ScenarioParams& params);

}  // namespace hq
