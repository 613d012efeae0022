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

#include "hiddenqutrit/measurement.hpp"

#include <random>

#include "hiddenqutrit/errors.hpp"

namespace hq {

std::string kind_to_string(ProjectorKind kind) {
  return kind == ProjectorKind::HH ? "HH" : "HV";
}

ProjectorKind kind_from_string(const std::string& s) {
  if (s == "HH") return ProjectorKind::HH;
  if (s == "HV") return ProjectorKind::HV;
  throw ValidationError("unknown projector kind: " + s);
}

std::vector<MeasurementSetting> table1_settings() {
  using K = ProjectorKind;
  return {
      {0.0, 0.0, K::HH},    {22.5, 45.0, K::HV}, {45.0, 22.5, K::HH},
      {0.0, 0.0, K::HV},    {22.5, 0.0, K::HH},  {11.25, 0.0, K::HH},
      {22.5, 0.0, K::HV},   {45.0, 0.0, K::HH},  {0.0, 22.5, K::HV},
      {22.5, 22.5, K::HH},
  };
}

Matrix4c coincidence_projector(ProjectorKind kind) {
  Matrix4c p = Matrix4c::Zero();
  if (kind == ProjectorKind::HH) {
    p(kHH, kHH) = 1.0;
  } else {
    p(kPsiPlus, kPsiPlus) = 1.0;
    p(kPsiMinus, kPsiMinus) = 1.0;
  }
  return p;
}

Matrix4c detection_operator(const MeasurementSetting& setting) {
  const Matrix4c t =
      two_photon_unitary(analyzer_unitary(setting.h_deg, setting.q_deg));
  return t * coincidence_projector(setting.kind) * t.adjoint();
}

double born_probability(const VisibleDensityMatrix& rho,
                        const MeasurementSetting& setting) {
  const double raw =
      (rho.matrix() * detection_operator(setting)).trace().real();
  if (raw < -1e-9 || raw > 1.0 + 1e-9) {
    throw ValidationError("born_probability: value outside [0, 1]");
  }
  return std::min(1.0, std::max(0.0, raw));
}

std::vector<CountRecord> simulate_counts(
    const VisibleDensityMatrix& rho,
    const std::vector<MeasurementSetting>& settings, double flux,
    std::uint64_t seed, double exposure) {
  if (!(flux > 0.0) || !(exposure > 0.0)) {
    throw ValidationError("simulate_counts: flux and exposure must be > 0");
  }
  std::mt19937_64 rng(seed);
  std::vector<CountRecord> records;
  records.reserve(settings.size());
  for (const auto& s : settings) {
    const double mean = flux * exposure * born_probability(rho, s);
    std::int64_t counts = 0;
    if (mean > 0.0) {
      std::poisson_distribution<std::int64_t> poisson(mean);
      counts = poisson(rng);
    }
    records.push_back({s, counts, exposure});
  }
  return records;
}

}  // namespace hq
