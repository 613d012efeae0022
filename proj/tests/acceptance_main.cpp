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

// End-to-end acceptance checks. One line per criterion; the process exit
// code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hiddenqutrit/hilbert.hpp"
#include "hiddenqutrit/measurement.hpp"
#include "hiddenqutrit/metrics.hpp"
#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/scenario.hpp"
#include "hiddenqutrit/tomography.hpp"
#include "test_support.hpp"

using namespace hq;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void run_criterion(int index, const std::string& name,
                   const std::function<void()>& body) {
  const auto start = Clock::now();
  try {
    body();
    std::printf("[PASS] criterion %d: %s (%.2f s)\n", index, name.c_str(),
                seconds_since(start));
  } catch (const std::exception& e) {
    ++failures;
    std::printf("[FAIL] criterion %d: %s: %s (%.2f s)\n", index, name.c_str(),
                e.what(), seconds_since(start));
  }
  std::fflush(stdout);
}

// Independent reduction: contract the hidden indices directly on the flat
// product layout and rotate into the coupled basis with a locally built
// change-of-basis matrix.
Matrix4c reduce_by_hand(const FullDensityMatrix& full) {
  const int d = full.hidden_dimension();
  const auto& m = full.matrix();
  const auto idx = [d](int p, int h, int q, int g) {
    return (p * d + h) * 2 * d + q * d + g;
  };
  Eigen::Matrix4cd visible = Eigen::Matrix4cd::Zero();
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2)
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2) {
          Complex sum = 0.0;
          for (int h1 = 0; h1 < d; ++h1)
            for (int h2 = 0; h2 < d; ++h2)
              sum += m(idx(p1, h1, p2, h2), idx(q1, h1, q2, h2));
          visible(2 * p1 + p2, 2 * q1 + q2) = sum;
        }
  const double r = 1.0 / std::sqrt(2.0);
  Matrix4c basis = Matrix4c::Zero();
  basis(0, 0) = 1.0;
  basis(1, 1) = r;
  basis(2, 1) = r;
  basis(3, 2) = 1.0;
  basis(1, 3) = r;
  basis(2, 3) = -r;
  return basis.adjoint() * visible * basis;
}

VisibleDensityMatrix pure_coupled(int index) {
  Matrix4c m = Matrix4c::Zero();
  m(index, index) = 1.0;
  return VisibleDensityMatrix::from_matrix(m);
}

VisibleDensityMatrix delayed_hv_truth() {
  Matrix4c m = Matrix4c::Zero();
  m(kPsiPlus, kPsiPlus) = 0.5;
  m(kPsiMinus, kPsiMinus) = 0.5;
  return VisibleDensityMatrix::from_matrix(m);
}

VisibleDensityMatrix noon_half_singlet() {
  const Vector4c v = noon_target().vector();
  Matrix4c m = 0.5 * (v * v.adjoint());
  m(kPsiMinus, kPsiMinus) = 0.5;
  return VisibleDensityMatrix::from_matrix(m);
}

struct Band {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double v) const { return v >= lo && v <= hi; }
  std::string str() const { return "[" + num(lo) + ", " + num(hi) + "]"; }
};

Band poisson_band(const std::vector<double>& samples) {
  const double m = hqtest::mean(samples);
  const double s = hqtest::stdev(samples);
  return {m - 3.0 * s, m + 3.0 * s};
}

// Recovered populations over 50 MLE fits of a depolarized truth at flux
// 1e5, with the depolarizing fraction drawn uniformly from [0.02, 0.05].
void noisy_population_bands(const VisibleDensityMatrix& ideal,
                            std::uint64_t seed_base, Band& plus_band,
                            Band& minus_band) {
  hqtest::Rng rng(seed_base);
  std::uniform_real_distribution<double> eps(0.02, 0.05);
  std::vector<double> plus, minus;
  for (int i = 0; i < 50; ++i) {
    const auto truth = hqtest::depolarize(ideal, eps(rng));
    const auto records =
        simulate_counts(truth, table1_settings(), 1e5, seed_base + i);
    const auto fit = mle_reconstruct(records);
    plus.push_back(fit.estimate.population(kPsiPlus));
    minus.push_back(fit.estimate.population(kPsiMinus));
  }
  plus_band = poisson_band(plus);
  minus_band = poisson_band(minus);
}

void criterion_block_structure() {
  const auto start = Clock::now();
  hqtest::Rng rng(101);
  double worst_coherence = 0.0;
  double worst_mismatch = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 1 + trial % 3;
    const auto full = hqtest::random_full_mixture(rng, dim);
    const Matrix4c coupled = reduce_by_hand(full);
    for (int j = 0; j < 3; ++j) {
      worst_coherence = std::max(worst_coherence,
                                 std::abs(coupled(j, kPsiMinus)));
      worst_coherence = std::max(worst_coherence,
                                 std::abs(coupled(kPsiMinus, j)));
    }
    const auto library = partial_trace_hidden(full);
    worst_mismatch = std::max(
        worst_mismatch, hqtest::max_abs_diff(coupled, library.matrix()));
  }
  require(worst_coherence < 1e-10,
          "triplet<->singlet coherence " + num(worst_coherence) +
              " not < 1e-10");
  require(worst_mismatch < 1e-10,
          "independent reduction disagrees with partial_trace_hidden by " +
              num(worst_mismatch));
  const double elapsed = seconds_since(start);
  require(elapsed < 10.0,
          "1000 reductions took " + num(elapsed) + " s, limit 10 s");
}

void criterion_distinguishability_law() {
  Vector2c h, v;
  h << 1.0, 0.0;
  v << 0.0, 1.0;
  const double tau = 100.0;
  for (int i = 0; i < 50; ++i) {
    const double delay = 400.0 * i / 49.0;
    const double gamma = gaussian_overlap(delay, tau);
    const auto [a, b] = mode_pair_from_delay(h, v, delay, tau);
    const auto rho = partial_trace_hidden(
        FullDensityMatrix::from_state(FullTwoPhotonState::symmetrize(a, b)));
    const double expected = 0.5 * (1.0 - gamma * gamma);
    require(std::abs(rho.population(kPsiMinus) - expected) <= 1e-12,
            "singlet population off the (1-gamma^2)/2 law at delay " +
                num(delay));
  }

  const auto [a0, b0] = mode_pair_from_delay(h, v, 0.0, tau);
  const auto overlapped = partial_trace_hidden(FullDensityMatrix::from_state(
      FullTwoPhotonState::symmetrize(a0, b0)));
  require(std::abs(overlapped.population(kPsiPlus) - 1.0) <= 1e-12,
          "overlapped endpoint is not pure psi+");
  const auto [a1, b1] = mode_pair_from_delay(h, v, 10.0 * tau, tau);
  const auto delayed = partial_trace_hidden(FullDensityMatrix::from_state(
      FullTwoPhotonState::symmetrize(a1, b1)));
  require(std::abs(delayed.population(kPsiPlus) - 0.5) <= 1e-12 &&
              std::abs(delayed.population(kPsiMinus) - 0.5) <= 1e-12,
          "delayed endpoint is not the 50/50 split");

  Band plus0, minus0;
  noisy_population_bands(pure_coupled(kPsiPlus), 2025, plus0, minus0);
  require(plus0.contains(0.98),
          "measured 98% outside the simulated band " + plus0.str());

  Band plus1, minus1;
  noisy_population_bands(delayed_hv_truth(), 2525, plus1, minus1);
  require(plus1.contains(0.45) && minus1.contains(0.55),
          "measured 45/55 outside the simulated bands p+ " + plus1.str() +
              ", p- " + minus1.str());
}

void criterion_design_completeness() {
  const auto start = Clock::now();
  const auto design = build_design_matrix(table1_settings());
  require(design.rank() == 10,
          "design rank " + std::to_string(design.rank()) + ", expected 10");
  hqtest::Rng rng(103);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = hqtest::random_visible_density(rng);
    const auto fit =
        linear_reconstruct(hqtest::noiseless_records(rho, 1e9));
    worst = std::max(worst,
                     hqtest::max_abs_diff(fit.estimate.matrix(), rho.matrix()));
  }
  require(worst <= 1e-6,
          "worst linear round-trip error " + num(worst) + " above 1e-6");
  const double elapsed = seconds_since(start);
  require(elapsed < 5.0,
          "200 round-trips took " + num(elapsed) + " s, limit 5 s");
}

void criterion_mle_quality() {
  const auto start = Clock::now();
  for (ScenarioKind kind : all_scenarios()) {
    ScenarioParams params;
    params.kind = kind;
    const auto truth = prepare_scenario(params);
    std::vector<double> fidelities;
    for (int s = 0; s < 50; ++s) {
      const auto records =
          simulate_counts(truth, table1_settings(), 1e4, 100 + s);
      const auto fit = mle_reconstruct(records);
      const Matrix4c est = fit.estimate.matrix();
      Eigen::SelfAdjointEigenSolver<Matrix4c> es(est, Eigen::EigenvaluesOnly);
      require(es.eigenvalues().minCoeff() >= -1e-12,
              scenario_name(kind) + ": estimate not PSD");
      require(std::abs(est.trace().real() - 1.0) <= 1e-12,
              scenario_name(kind) + ": estimate trace off unity");
      for (int j = 0; j < 3; ++j) {
        require(est(j, kPsiMinus) == Complex(0.0, 0.0) &&
                    est(kPsiMinus, j) == Complex(0.0, 0.0),
                scenario_name(kind) + ": estimate leaks across blocks");
      }
      fidelities.push_back(
          hqtest::uhlmann_fidelity_sq(truth.matrix(), est));
    }
    const double med = hqtest::median(fidelities);
    require(med >= 0.99, scenario_name(kind) + ": median fidelity " +
                             num(med) + " below 0.99");
  }
  const double elapsed = seconds_since(start);
  require(elapsed < 60.0,
          "350 fits took " + num(elapsed) + " s, limit 60 s");
}

void criterion_noon_transformation() {
  const JonesUnitary qwp = waveplate_unitary(WaveplateKind::Quarter, 45.0);
  const auto noon_from_pure = apply_unitary(pure_coupled(kPsiPlus), qwp);
  require(std::abs(fidelity(noon_from_pure, noon_target()) - 1.0) <= 1e-10,
          "quarter-wave on psi+ misses the NOON target");
  const auto noon_from_mixture = apply_unitary(delayed_hv_truth(), qwp);
  require(std::abs(fidelity(noon_from_mixture, noon_target()) - 0.5) <=
              1e-10,
          "distinguishable mixture fidelity is not 0.5");
  require(concurrence(noon_from_mixture) <= 1e-10,
          "distinguishable mixture keeps entanglement");
}

void criterion_naive_failure() {
  const auto truth = noon_half_singlet();
  const auto records = hqtest::noiseless_records(truth, 1e9);
  const auto naive = naive_symmetric_reconstruct(records);
  require(naive.estimate.population(kPsiMinus) == 0.0,
          "naive fit reports a nonzero singlet population");

  const std::vector<MeasurementSetting> diagonal{
      {22.5, 0.0, ProjectorKind::HH}, {22.5, 0.0, ProjectorKind::HV}};
  double naive_worst = 0.0;
  for (const auto& s : diagonal) {
    naive_worst = std::max(naive_worst,
                           std::abs(born_probability(naive.estimate, s) -
                                    born_probability(truth, s)));
  }
  require(naive_worst >= 0.05, "naive misprediction " + num(naive_worst) +
                                   " below 0.05");

  const auto full = linear_reconstruct(records);
  double full_worst = 0.0;
  for (const auto& s : table1_settings()) {
    full_worst = std::max(full_worst,
                          std::abs(born_probability(full.estimate, s) -
                                   born_probability(truth, s)));
  }
  require(full_worst < 1e-6, "full reconstruction misprediction " +
                                 num(full_worst) + " not below 1e-6");
}

void criterion_decoherence_vs_distinguishability() {
  const Vector4c v = noon_target().vector();
  const auto noon = VisibleDensityMatrix::from_matrix(v * v.adjoint());
  const auto dephased = collective_dephasing(noon, 2.0, 3.0);
  require(std::abs(dephased.matrix()(kHH, kVV)) < 0.01,
          "HH<->VV coherence survives strong dephasing");
  require(std::abs(dephased.population(kPsiMinus) -
                   noon.population(kPsiMinus)) < 1e-12,
          "dephasing moved the singlet population");
  const auto distinguishable = noon_half_singlet();
  require(std::abs(dephased.population(kPsiMinus) -
                   distinguishable.population(kPsiMinus)) >= 0.45,
          "dephased and distinguishable NOON are not separated in p-");
}

void criterion_gradient_check() {
  ScenarioParams params;
  params.kind = ScenarioKind::NoonDistinguishable;
  const auto truth = prepare_scenario(params);
  const auto records = simulate_counts(truth, table1_settings(), 1e4, 3);
  const PoissonNllModel model(records);
  hqtest::Rng rng(108);
  std::normal_distribution<double> n(0.0, 0.5);
  double worst = 0.0;
  for (int point = 0; point < 100; ++point) {
    Eigen::VectorXd theta(PoissonNllModel::kNumParams);
    for (int i = 0; i < 10; ++i) theta(i) = n(rng);
    theta(10) = std::log(1e4) + n(rng);
    Eigen::VectorXd grad(PoissonNllModel::kNumParams);
    model.value_and_gradient(theta, grad);
    Eigen::VectorXd fd(PoissonNllModel::kNumParams);
    for (int i = 0; i < PoissonNllModel::kNumParams; ++i) {
      const double h = 3e-6 * std::max(1.0, std::abs(theta(i)));
      Eigen::VectorXd lo = theta, hi = theta;
      lo(i) -= h;
      hi(i) += h;
      fd(i) = (model.value(hi) - model.value(lo)) / (2.0 * h);
    }
    worst = std::max(worst, (grad - fd).norm() /
                                std::max(1.0, fd.norm()));
  }
  require(worst <= 1e-6,
          "worst relative gradient error " + num(worst) + " above 1e-6");
}

}  // namespace

int main() {
  run_criterion(1, "bosonic reduction is block structured",
                criterion_block_structure);
  run_criterion(2, "distinguishability law and measured endpoints",
                criterion_distinguishability_law);
  run_criterion(3, "ten-setting design is complete",
                criterion_design_completeness);
  run_criterion(4, "MLE quality across the figure scenarios",
                criterion_mle_quality);
  run_criterion(5, "quarter-waveplate NOON transformation",
                criterion_noon_transformation);
  run_criterion(6, "naive tomography fails on hidden singlets",
                criterion_naive_failure);
  run_criterion(7, "decoherence is not distinguishability",
                criterion_decoherence_vs_distinguishability);
  run_criterion(8, "analytic NLL gradient matches finite differences",
                criterion_gradient_check);
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}
