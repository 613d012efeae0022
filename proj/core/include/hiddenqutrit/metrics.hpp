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

#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/types.hpp"

namespace hq {

// <target| rho |target>, clamped to [0, 1].
double fidelity(const VisibleDensityMatrix& rho, const PureVisibleState& target);

// Wootters concurrence, evaluated in the product basis via the spin-flipped
// matrix rho (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
double concurrence(const VisibleDensityMatrix& rho);

// Tr[rho^2].
double purity(const VisibleDensityMatrix& rho);

struct PopulationSummary {
  double p_hh = 0.0;
  double p_psi_plus = 0.0;
  double p_vv = 0.0;
  double p_psi_minus = 0.0;
};

PopulationSummary populations(const VisibleDensityMatrix& rho);

}  // namespace hq
