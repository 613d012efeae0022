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

#include <string>
#include <vector>

#include "hiddenqutrit/measurement.hpp"
#include "hiddenqutrit/metrics.hpp"
#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/tomography.hpp"

namespace hq {

// Count records: a JSON array of objects with keys h_deg, q_deg, kind
// ("HH"/"HV"), counts, exposure.
std::string counts_to_json(const std::vector<CountRecord>& records);
std::vector<CountRecord> counts_from_json(const std::string& text);

// States and fits share a matrix layout: {"basis": [...], "re": 4x4,
// "im": 4x4}; fits add flux, method and per-method diagnostics (nll and
// iterations for mle; residual and psd_projected for linear/naive).
std::string state_to_json(const VisibleDensityMatrix& rho);
std::string result_to_json(const TomographyResult& result);

// Accepts either a bare state or a fit result; `require_psd` as in
// VisibleDensityMatrix::from_matrix.
VisibleDensityMatrix state_from_json(const std::string& text,
                                     bool require_psd = true);

struct MetricsReport {
  double fidelity_noon = 0.0;
  double concurrence = 0.0;
  double purity = 0.0;
  PopulationSummary populations;
};

MetricsReport compute_metrics(const VisibleDensityMatrix& rho);
std::string metrics_to_json(const MetricsReport& report);

}  // namespace hq
