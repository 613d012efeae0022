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

#include <cmath>

#include <doctest.h>

#include "hiddenqutrit/measurement.hpp"
#include "test_support.hpp"

using namespace hq;
using hqtest::Rng;

namespace {

VisibleDensityMatrix coupled_basis_density(int index) {
  Matrix4c m = Matrix4c::Zero();
  m(index, index) = 1.0;
  return VisibleDensityMatrix::from_matrix(m);
}

int projector_rank(const Matrix4c& op) {
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(op, Eigen::EigenvaluesOnly);
  int rank = 0;
  for (int i = 0; i < 4; ++i) {
    const double v = es.eigenvalues()(i);
    CHECK(std::min(std::abs(v), std::abs(v - 1.0)) <= 1e-8);
    if (v > 0.5) ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("table1_settings is the fixed 10-row schedule") {
  const auto settings = table1_settings();
  REQUIRE(settings.size() == 10);
  const double want[10][2] = {{0.0, 0.0},   {22.5, 45.0}, {45.0, 22.5},
                              {0.0, 0.0},   {22.5, 0.0},  {11.25, 0.0},
                              {22.5, 0.0},  {45.0, 0.0},  {0.0, 22.5},
                              {22.5, 22.5}};
  const ProjectorKind kinds[10] = {
      ProjectorKind::HH, ProjectorKind::HV, ProjectorKind::HH,
      ProjectorKind::HV, ProjectorKind::HH, ProjectorKind::HH,
      ProjectorKind::HV, ProjectorKind::HH, ProjectorKind::HV,
      ProjectorKind::HH};
  int hh = 0, hv = 0;
  for (int i = 0; i < 10; ++i) {
    CHECK(settings[i].h_deg == want[i][0]);
    CHECK(settings[i].q_deg == want[i][1]);
    CHECK(settings[i].kind == kinds[i]);
    (settings[i].kind == ProjectorKind::HH ? hh : hv) += 1;
  }
  CHECK(hh == 6);
  CHECK(hv == 4);
}

TEST_CASE("projector kind strings round-trip") {
  CHECK(kind_to_string(ProjectorKind::HH) == "HH");
  CHECK(kind_to_string(ProjectorKind::HV) == "HV");
  CHECK(kind_from_string("HH") == ProjectorKind::HH);
  CHECK(kind_from_string("HV") == ProjectorKind::HV);
  CHECK_THROWS_AS(kind_from_string("VV"), ValidationError);
}

TEST_CASE("coincidence projectors in the coupled basis") {
  Matrix4c hh = coincidence_projector(ProjectorKind::HH);
  CHECK(hh(kHH, kHH) == Complex(1.0, 0.0));
  CHECK(hh.trace() == Complex(1.0, 0.0));
  Matrix4c hv = coincidence_projector(ProjectorKind::HV);
  CHECK(hv(kPsiPlus, kPsiPlus) == Complex(1.0, 0.0));
  CHECK(hv(kPsiMinus, kPsiMinus) == Complex(1.0, 0.0));
  CHECK(hv.trace() == Complex(2.0, 0.0));
}

TEST_CASE("detection_operator at rest is |HH><HH|") {
  const Matrix4c op = detection_operator({0.0, 0.0, ProjectorKind::HH});
  Matrix4c want = Matrix4c::Zero();
  want(kHH, kHH) = 1.0;
  CHECK(hqtest::max_abs_diff(op, want) <= 1e-12);
}

TEST_CASE("HV detection operators pin the singlet entry at one") {
  Rng rng(51);
  std::uniform_real_distribution<double> angle(0.0, 180.0);
  for (const auto& s : table1_settings()) {
    if (s.kind != ProjectorKind::HV) continue;
    CHECK(std::abs(detection_operator(s)(kPsiMinus, kPsiMinus) -
                   Complex(1.0, 0.0)) <= 1e-12);
  }
  for (int k = 0; k < 50; ++k) {
    const MeasurementSetting s{angle(rng), angle(rng), ProjectorKind::HV};
    CHECK(std::abs(detection_operator(s)(kPsiMinus, kPsiMinus) -
                   Complex(1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("HH detection operators have an exactly void singlet row") {
  Rng rng(52);
  std::uniform_real_distribution<double> angle(0.0, 180.0);
  for (int k = 0; k < 50; ++k) {
    const MeasurementSetting s{angle(rng), angle(rng), ProjectorKind::HH};
    const Matrix4c op = detection_operator(s);
    for (int i = 0; i < 4; ++i) {
      CHECK(op(i, kPsiMinus) == Complex(0.0, 0.0));
      CHECK(op(kPsiMinus, i) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("detection operators are projectors of the expected rank") {
  Rng rng(53);
  std::uniform_real_distribution<double> angle(0.0, 180.0);
  auto check_one = [](const MeasurementSetting& s) {
    const Matrix4c op = detection_operator(s);
    CHECK(hqtest::max_abs_diff(op * op, op) <= 1e-10);
    CHECK(hqtest::max_abs_diff(op, op.adjoint()) <= 1e-12);
    CHECK(projector_rank(op) == (s.kind == ProjectorKind::HH ? 1 : 2));
  };
  for (const auto& s : table1_settings()) check_one(s);
  for (int k = 0; k < 500; ++k) {
    check_one({angle(rng), angle(rng), ProjectorKind::HH});
    check_one({angle(rng), angle(rng), ProjectorKind::HV});
  }
}

TEST_CASE("HH, HV and the rotated VV outcome partition unity") {
  Rng rng(54);
  std::uniform_real_distribution<double> angle(0.0, 180.0);
  for (int k = 0; k < 50; ++k) {
    const auto rho = hqtest::random_visible_density(rng);
    const double h = angle(rng), q = angle(rng);
    const double p_hh = born_probability(rho, {h, q, ProjectorKind::HH});
    const double p_hv = born_probability(rho, {h, q, ProjectorKind::HV});
    // VV is HH conjugated by an extra half-waveplate at 45 degrees in
    // front of the analyzer.
    const Matrix4c swap = two_photon_unitary(
        waveplate_unitary(WaveplateKind::Half, 45.0));
    const Matrix4c u = two_photon_unitary(analyzer_unitary(h, q));
    const Matrix4c p_vv_op = u * swap *
                             coincidence_projector(ProjectorKind::HH) *
                             swap.adjoint() * u.adjoint();
    const double p_vv = (rho.matrix() * p_vv_op).trace().real();
    CHECK(std::abs(p_hh + p_hv + p_vv - 1.0) <= 1e-9);
  }
}

TEST_CASE("born_probability on the canonical states") {
  CHECK(std::abs(born_probability(coupled_basis_density(kHH),
                                  {0.0, 0.0, ProjectorKind::HH}) -
                 1.0) <= 1e-12);
  CHECK(born_probability(coupled_basis_density(kPsiPlus),
                         {0.0, 0.0, ProjectorKind::HH}) <= 1e-12);
  Rng rng(55);
  std::uniform_real_distribution<double> angle(0.0, 180.0);
  for (int k = 0; k < 20; ++k) {
    CHECK(std::abs(born_probability(coupled_basis_density(kPsiMinus),
                                    {angle(rng), angle(rng),
                                     ProjectorKind::HV}) -
                   1.0) <= 1e-12);
  }
}

TEST_CASE("born_probability rejects unphysical traces") {
  Matrix4c m = Matrix4c::Zero();
  m(kHH, kHH) = 2.0;
  m(kVV, kVV) = -1.0;
  const auto bogus = VisibleDensityMatrix::from_matrix(m, false);
  CHECK_THROWS_AS(born_probability(bogus, {0.0, 0.0, ProjectorKind::HH}),
                  ValidationError);
}

TEST_CASE("simulate_counts concentrates at flux times probability") {
  const auto rho = coupled_basis_density(kHH);
  const auto records = simulate_counts(
      rho, {{0.0, 0.0, ProjectorKind::HH}}, 1e6, 99);
  REQUIRE(records.size() == 1);
  CHECK(std::abs(records[0].counts / 1e6 - 1.0) <= 3e-3);
  CHECK(records[0].exposure == 1.0);
}

TEST_CASE("simulate_counts is deterministic in the seed") {
  Rng rng(56);
  const auto rho = hqtest::random_visible_density(rng);
  const auto a = simulate_counts(rho, table1_settings(), 1e4, 1234);
  const auto b = simulate_counts(rho, table1_settings(), 1e4, 1234);
  const auto c = simulate_counts(rho, table1_settings(), 1e4, 1235);
  REQUIRE(a.size() == b.size());
  bool all_equal = true, any_differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    all_equal = all_equal && a[i].counts == b[i].counts;
    any_differs = any_differs || a[i].counts != c[i].counts;
  }
  CHECK(all_equal);
  CHECK(any_differs);
}

TEST_CASE("simulate_counts never fires on an orthogonal state") {
  const auto rho = coupled_basis_density(kPsiPlus);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto records = simulate_counts(
        rho, {{0.0, 0.0, ProjectorKind::HH}}, 1e6, seed);
    CHECK(records[0].counts == 0);
  }
}

TEST_CASE("simulate_counts validates flux and exposure") {
  const auto rho = coupled_basis_density(kHH);
  CHECK_THROWS_AS(simulate_counts(rho, table1_settings(), 0.0, 1),
                  ValidationError);
  CHECK_THROWS_AS(simulate_counts(rho, table1_settings(), -10.0, 1),
                  ValidationError);
  CHECK_THROWS_AS(simulate_counts(rho, table1_settings(), 1e4, 1, 0.0),
                  ValidationError);
}
