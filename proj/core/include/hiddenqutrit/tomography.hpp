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

#include <array>
#include <vector>

#include "hiddenqutrit/errors.hpp"
#include "hiddenqutrit/measurement.hpp"
#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/types.hpp"

namespace hq {

// Hermitian operator basis spanning the block-structured space: the three
// triplet diagonal units, real and imaginary off-diagonal pairs for (0,1),
// (0,2), (1,2), and |psi-><psi-|. Unnormalized rates are linear in the ten
// real coordinates of flux * rho over this basis.
std::array<Matrix4c, 10> hermitian_basis();

class DesignMatrix {
 public:
  DesignMatrix(Eigen::MatrixXd rows, std::vector<MeasurementSetting> settings);

  const Eigen::MatrixXd& matrix() const { return rows_; }
  const std::vector<MeasurementSetting>& settings() const { return settings_; }
  int rank() const { return rank_; }

 private:
  Eigen::MatrixXd rows_;
  std::vector<MeasurementSetting> settings_;
  int rank_;
};

// Row s, column k = Tr[E_k detection_operator(s)]. Throws DesignRankError if
// 10 or more settings still leave rank < 10.
DesignMatrix build_design_matrix(
    const std::vector<MeasurementSetting>& settings);

enum class Method { Linear, Mle, Naive };

std::string method_to_string(Method method);
Method method_from_string(const std::string& s);

struct FitDiagnostics {
  double nll = 0.0;       // Poisson negative log-likelihood at the estimate
  double residual = 0.0;  // L2 norm of predicted-rate minus observed-rate
  int iterations = 0;
  bool psd_projected = false;
};

struct TomographyResult {
  VisibleDensityMatrix estimate;
  double flux_estimate = 0.0;
  Method method = Method::Linear;
  FitDiagnostics diagnostics;
};

// Nearest block-structured PSD state: clips the triplet block's spectrum
// and the singlet population at zero, then renormalizes the trace.
Matrix4c project_to_block_psd(const Matrix4c& m);

// Unweighted least squares of counts/exposure against the design matrix;
// the trace of the unnormalized solution estimates the flux. With
// project_psd the spectrum is clipped at zero and renormalized (flag
// recorded); otherwise the estimate may be indefinite.
TomographyResult linear_reconstruct(const std::vector<CountRecord>& records,
                                    bool project_psd = false);

// The same inversion restricted to the 9 symmetric-block coordinates, as if
// the singlet did not exist. Deliberately wrong on states with psi-
// population; kept as the comparison everything else is judged against.
TomographyResult naive_symmetric_reconstruct(
    const std::vector<CountRecord>& records);

// Poisson likelihood over the Cholesky-style parametrization
// rho = T^dag T / Tr[T^dag T], with T block lower-triangular (real diagonal,
// complex entries (1,0), (2,0), (2,1), real singlet entry) plus log-flux.
// Exposed so the analytic gradient can be checked independently.
class PoissonNllModel {
 public:
  static constexpr int kNumParams = 11;  // 10 state parameters + log flux

  explicit PoissonNllModel(const std::vector<CountRecord>& records);

  double value(const Eigen::VectorXd& theta) const;
  // Returns the value and fills grad (analytic).
  double value_and_gradient(const Eigen::VectorXd& theta,
                            Eigen::VectorXd& grad) const;

  static Matrix4c state_from_params(const Eigen::VectorXd& theta);
  // Inverse map (Cholesky of the reversed matrix); rho must be PSD.
  static Eigen::VectorXd params_from_state(const Matrix4c& rho, double flux);

  const std::vector<CountRecord>& records() const { return records_; }

 private:
  std::vector<CountRecord> records_;
  std::vector<Matrix4c> ops_;
};

// Thrown when the iteration cap is reached; carries the best iterate.
struct NonConvergenceError : Error {
  NonConvergenceError(const std::string& what, TomographyResult best_in)
      : Error(what), best(std::move(best_in)) {}
  TomographyResult best;
};

struct MleOptions {
  int max_iterations = 100000;
  double improvement_tolerance = 1e-10;
};

// Maximum-likelihood reconstruction, initialized from the PSD-projected
// linear estimate (maximally mixed if inversion fails). Converges when the
// NLL improves by less than the tolerance on consecutive iterations.
TomographyResult mle_reconstruct(const std::vector<CountRecord>& records,
                                 const MleOptions& options = {});

// flux_estimate times the Born probability of the estimate at each setting.
// Uses the raw trace so it stays defined for indefinite linear estimates.
std::vector<double> predict_rates(
    const TomographyResult& result,
    const std::vector<MeasurementSetting>& settings);

}  // namespace hq
