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
#include <string>
#include <vector>

#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/types.hpp"

namespace hq {

// Coincidence outcome collected after the common analyzer: both photons in
// the transmitted (H) port, or one in each port.
enum class ProjectorKind { HH, HV };

std::string kind_to_string(ProjectorKind kind);
ProjectorKind kind_from_string(const std::string& s);

struct MeasurementSetting {
  double h_deg = 0.0;
  double q_deg = 0.0;
  ProjectorKind kind = ProjectorKind::HH;
};

// The canonical 10-setting tomography schedule: waveplate angle pairs
// (0,0), (22.5,45), (45,22.5), (0,0), (22.5,0), (11.25,0), (22.5,0),
// (45,0), (0,22.5), (22.5,22.5) with outcomes HH for rows 1,3,5,6,8,10
// and HV for rows 2,4,7,9.
std::vector<MeasurementSetting> table1_settings();

// Coincidence projector in the coupled basis, before any waveplates:
// HH -> diag(1,0,0,0); HV -> diag(0,1,0,1) (both |psi+> and |psi-> put one
// photon in each port).
Matrix4c coincidence_projector(ProjectorKind kind);

// Heisenberg-picture detection operator T(U) P T(U)^dag with
// U = analyzer_unitary(h, q). Hermitian, idempotent, block-structured; the
// psi- diagonal entry is 0 for HH and 1 for HV.
Matrix4c detection_operator(const MeasurementSetting& setting);

// Tr[rho O]; clamped to [0,1], raising ValidationError if the raw value is
// outside [-1e-9, 1 + 1e-9].
double born_probability(const VisibleDensityMatrix& rho,
                        const MeasurementSetting& setting);

struct CountRecord {
  MeasurementSetting setting;
  std::int64_t counts = 0;
  double exposure = 1.0;
};

// Poisson draws with mean flux * exposure * born_probability per setting,
// from a generator seeded once with `seed`. Same seed, same records.
std::vector<CountRecord> simulate_counts(
    const VisibleDensityMatrix& rho,
    const std::vector<MeasurementSetting>& settings, double flux,
    std::uint64_t seed, double exposure = 1.0);

}  // namespace hq
