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

#include "hiddenqutrit/tomography.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace hq {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInf = std::numeric_limits<double>::infinity();

// Lower-triangular slots of the block parametrization, in parameter order:
// t00, t11, t22, Re t10, Im t10, Re t20, Im t20, Re t21, Im t21, t33.
constexpr int kSlotRow[10] = {0, 1, 2, 1, 1, 2, 2, 2, 2, 3};
constexpr int kSlotCol[10] = {0, 1, 2, 0, 0, 0, 0, 1, 1, 3};
constexpr bool kSlotImag[10] = {false, false, false, false, true,
                                false, true,  false, true, false};

void validate_records(const std::vector<CountRecord>& records) {
  if (records.empty()) {
    throw ValidationError("no count records");
  }
  for (const auto& r : records) {
    if (r.counts < 0) {
      throw ValidationError("negative counts");
    }
    if (!(r.exposure > 0.0)) {
      throw ValidationError("exposure must be > 0");
    }
  }
}

Eigen::VectorXd observed_rates(const std::vector<CountRecord>& records) {
  Eigen::VectorXd b(records.size());
  for (size_t s = 0; s < records.size(); ++s) {
    b(s) = static_cast<double>(records[s].counts) / records[s].exposure;
  }
  return b;
}

std::vector<MeasurementSetting> settings_of(
    const std::vector<CountRecord>& records) {
  std::vector<MeasurementSetting> settings;
  settings.reserve(records.size());
  for (const auto& r : records) settings.push_back(r.setting);
  return settings;
}

Matrix4c matrix_from_coords(const Eigen::VectorXd& y) {
  const auto basis = hermitian_basis();
  Matrix4c m = Matrix4c::Zero();
  for (int k = 0; k < 10; ++k) m += y(k) * basis[k];
  return m;
}

double poisson_nll(const Matrix4c& rho, double flux,
                   const std::vector<CountRecord>& records) {
  double nll = 0.0;
  for (const auto& r : records) {
    const double p =
        std::max(0.0, (rho * detection_operator(r.setting)).trace().real());
    const double mu = flux * r.exposure * p;
    if (mu <= 0.0) {
      if (r.counts > 0) return kInf;
      continue;
    }
    nll += mu - static_cast<double>(r.counts) * std::log(mu);
  }
  return nll;
}

double rate_residual(const Matrix4c& rho, double flux,
                     const std::vector<CountRecord>& records) {
  double sq = 0.0;
  for (const auto& r : records) {
    const double pred =
        flux * (rho * detection_operator(r.setting)).trace().real();
    const double obs = static_cast<double>(r.counts) / r.exposure;
    sq += (pred - obs) * (pred - obs);
  }
  return std::sqrt(sq);
}

}  // namespace

Matrix4c project_to_block_psd(const Matrix4c& m) {
  const Eigen::Matrix3cd sym = m.topLeftCorner<3, 3>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(sym);
  const Eigen::Vector3d vals = es.eigenvalues().cwiseMax(0.0);
  Matrix4c out = Matrix4c::Zero();
  out.topLeftCorner<3, 3>() =
      es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
  out(kPsiMinus, kPsiMinus) = std::max(m(kPsiMinus, kPsiMinus).real(), 0.0);
  const double tr = out.trace().real();
  if (!(tr > 0.0)) {
    throw ReconstructionError("PSD projection removed all weight");
  }
  return out / tr;
}

std::array<Matrix4c, 10> hermitian_basis() {
  std::array<Matrix4c, 10> basis;
  for (auto& e : basis) e = Matrix4c::Zero();
  basis[0](0, 0) = 1.0;
  basis[1](1, 1) = 1.0;
  basis[2](2, 2) = 1.0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k) {
    const int i = pairs[k][0];
    const int j = pairs[k][1];
    basis[3 + k](i, j) = 1.0;
    basis[3 + k](j, i) = 1.0;
    basis[6 + k](i, j) = kI;
    basis[6 + k](j, i) = -kI;
  }
  basis[9](kPsiMinus, kPsiMinus) = 1.0;
  return basis;
}

DesignMatrix::DesignMatrix(Eigen::MatrixXd rows,
                           std::vector<MeasurementSetting> settings)
    : rows_(std::move(rows)), settings_(std::move(settings)) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows_);
  rank_ = static_cast<int>(qr.rank());
  if (settings_.size() >= 10 && rank_ < 10) {
    throw DesignRankError(
        "design matrix is rank deficient for a full reconstruction");
  }
}

DesignMatrix build_design_matrix(
    const std::vector<MeasurementSetting>& settings) {
  if (settings.empty()) {
    throw ValidationError("build_design_matrix: no settings");
  }
  const auto basis = hermitian_basis();
  Eigen::MatrixXd rows(settings.size(), 10);
  for (size_t s = 0; s < settings.size(); ++s) {
    const Matrix4c op = detection_operator(settings[s]);
    for (int k = 0; k < 10; ++k) {
      rows(static_cast<int>(s), k) = (basis[k] * op).trace().real();
    }
  }
  return DesignMatrix(std::move(rows), settings);
}

std::string method_to_string(Method method) {
  switch (method) {
    case Method::Linear: return "linear";
    case Method::Mle: return "mle";
    case Method::Naive: return "naive";
  }
  throw ValidationError("unknown method");
}

Method method_from_string(const std::string& s) {
  if (s == "linear") return Method::Linear;
  if (s == "mle") return Method::Mle;
  if (s == "naive") return Method::Naive;
  throw ValidationError("unknown method: " + s);
}

TomographyResult linear_reconstruct(const std::vector<CountRecord>& records,
                                    bool project_psd) {
  validate_records(records);
  std::int64_t total = 0;
  for (const auto& r : records) total += r.counts;
  if (total == 0) {
    throw ReconstructionError("all counts are zero");
  }
  const DesignMatrix design = build_design_matrix(settings_of(records));
  if (design.rank() < 10) {
    throw DesignRankError("linear_reconstruct: design rank below 10");
  }
  const Eigen::VectorXd b = observed_rates(records);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(
      design.matrix());
  const Eigen::VectorXd y = cod.solve(b);
  const double flux = y(0) + y(1) + y(2) + y(9);
  if (!(flux > 0.0)) {
    throw ReconstructionError("linear_reconstruct: non-positive flux");
  }
  Matrix4c rho = matrix_from_coords(y) / flux;
  if (project_psd) {
    rho = project_to_block_psd(rho);
  }
  TomographyResult result{
      VisibleDensityMatrix::from_matrix(rho, project_psd), flux,
      Method::Linear, FitDiagnostics{}};
  result.diagnostics.residual = (design.matrix() * y - b).norm();
  result.diagnostics.nll = poisson_nll(rho, flux, records);
  result.diagnostics.psd_projected = project_psd;
  return result;
}

TomographyResult naive_symmetric_reconstruct(
    const std::vector<CountRecord>& records) {
  validate_records(records);
  std::int64_t total = 0;
  for (const auto& r : records) total += r.counts;
  if (total == 0) {
    throw ReconstructionError("all counts are zero");
  }
  const DesignMatrix design = build_design_matrix(settings_of(records));
  const Eigen::MatrixXd sym = design.matrix().leftCols(9);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sym);
  if (cod.rank() < 9) {
    throw DesignRankError("naive_symmetric_reconstruct: design rank below 9");
  }
  const Eigen::VectorXd b = observed_rates(records);
  const Eigen::VectorXd y9 = cod.solve(b);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(10);
  y.head(9) = y9;
  const double flux = y(0) + y(1) + y(2);
  if (!(flux > 0.0)) {
    throw ReconstructionError(
        "naive_symmetric_reconstruct: non-positive flux");
  }
  const Matrix4c rho = matrix_from_coords(y) / flux;
  TomographyResult result{VisibleDensityMatrix::from_matrix(rho, false),
                          flux, Method::Naive, FitDiagnostics{}};
  result.diagnostics.residual = (sym * y9 - b).norm();
  result.diagnostics.nll = poisson_nll(rho, flux, records);
  return result;
}

PoissonNllModel::PoissonNllModel(const std::vector<CountRecord>& records)
    : records_(records) {
  validate_records(records_);
  ops_.reserve(records_.size());
  for (const auto& r : records_) {
    ops_.push_back(detection_operator(r.setting));
  }
}

Matrix4c PoissonNllModel::state_from_params(const Eigen::VectorXd& theta) {
  if (theta.size() < 10) {
    throw DimensionError("state_from_params: expected >= 10 parameters");
  }
  Matrix4c t = Matrix4c::Zero();
  for (int k = 0; k < 10; ++k) {
    const Complex v = kSlotImag[k] ? kI * theta(k) : Complex(theta(k), 0.0);
    t(kSlotRow[k], kSlotCol[k]) += v;
  }
  const Matrix4c g = t.adjoint() * t;
  const double n = g.trace().real();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError("state_from_params: degenerate parameters");
  }
  return g / n;
}

Eigen::VectorXd PoissonNllModel::params_from_state(const Matrix4c& rho,
                                                   double flux) {
  if (!(flux > 0.0)) {
    throw ValidationError("params_from_state: flux must be > 0");
  }
  Matrix4c reversal = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) reversal(i, 3 - i) = 1.0;
  Matrix4c reversed = reversal * rho * reversal;
  Eigen::LLT<Matrix4c> llt(reversed);
  if (llt.info() != Eigen::Success) {
    reversed += 1e-12 * Matrix4c::Identity();
    llt.compute(reversed);
    if (llt.info() != Eigen::Success) {
      throw ValidationError("params_from_state: matrix is not PSD");
    }
  }
  const Matrix4c t = reversal * Matrix4c(llt.matrixL()).adjoint() * reversal;
  Eigen::VectorXd theta(kNumParams);
  for (int k = 0; k < 10; ++k) {
    const Complex v = t(kSlotRow[k], kSlotCol[k]);
    theta(k) = kSlotImag[k] ? v.imag() : v.real();
  }
  theta(10) = std::log(flux);
  return theta;
}

double PoissonNllModel::value(const Eigen::VectorXd& theta) const {
  if (theta.size() != kNumParams) {
    throw DimensionError("value: expected 11 parameters");
  }
  Matrix4c t = Matrix4c::Zero();
  for (int k = 0; k < 10; ++k) {
    const Complex v = kSlotImag[k] ? kI * theta(k) : Complex(theta(k), 0.0);
    t(kSlotRow[k], kSlotCol[k]) += v;
  }
  const Matrix4c g = t.adjoint() * t;
  const double n = g.trace().real();
  if (!(n > 0.0) || !std::isfinite(n)) return kInf;
  const double flux = std::exp(theta(10));
  if (!std::isfinite(flux)) return kInf;
  double nll = 0.0;
  for (size_t s = 0; s < records_.size(); ++s) {
    const double p = std::max(0.0, (g * ops_[s]).trace().real() / n);
    const double mu = flux * records_[s].exposure * p;
    if (mu <= 0.0) {
      if (records_[s].counts > 0) return kInf;
      continue;
    }
    nll += mu - static_cast<double>(records_[s].counts) * std::log(mu);
  }
  return nll;
}

double PoissonNllModel::value_and_gradient(const Eigen::VectorXd& theta,
                                           Eigen::VectorXd& grad) const {
  if (theta.size() != kNumParams) {
    throw DimensionError("value_and_gradient: expected 11 parameters");
  }
  Matrix4c t = Matrix4c::Zero();
  for (int k = 0; k < 10; ++k) {
    const Complex v = kSlotImag[k] ? kI * theta(k) : Complex(theta(k), 0.0);
    t(kSlotRow[k], kSlotCol[k]) += v;
  }
  const Matrix4c g = t.adjoint() * t;
  const double n = g.trace().real();
  const double flux = std::exp(theta(10));
  grad = Eigen::VectorXd::Zero(kNumParams);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(flux)) return kInf;

  // dN/dtheta_k: the trace of T^dag T is the squared entry norm.
  Eigen::VectorXd dn(10);
  for (int k = 0; k < 10; ++k) {
    const Complex v = t(kSlotRow[k], kSlotCol[k]);
    dn(k) = 2.0 * (kSlotImag[k] ? v.imag() : v.real());
  }

  double nll = 0.0;
  for (size_t s = 0; s < records_.size(); ++s) {
    const double tr_go = (g * ops_[s]).trace().real();
    const double p = std::max(0.0, tr_go / n);
    const double mu = flux * records_[s].exposure * p;
    const double counts = static_cast<double>(records_[s].counts);
    if (mu <= 0.0) {
      if (counts > 0.0) return kInf;
      // d(mu)/dp survives even at mu = 0.
    }
    if (mu > 0.0) {
      nll += mu - counts * std::log(mu);
    }
    const double w = mu > 0.0 ? 1.0 - counts / mu : 1.0;
    // d Tr[T^dag T O] along the (a,b) entry of T: with M = O T^dag, the
    // real direction gives 2 Re M(b,a) and the imaginary one -2 Im M(b,a).
    const Matrix4c m = ops_[s] * t.adjoint();
    for (int k = 0; k < 10; ++k) {
      const Complex mba = m(kSlotCol[k], kSlotRow[k]);
      const double dtr =
          kSlotImag[k] ? -2.0 * mba.imag() : 2.0 * mba.real();
      const double dp = (dtr * n - tr_go * dn(k)) / (n * n);
      grad(k) += flux * records_[s].exposure * w * dp;
    }
    grad(10) += mu * w;  // mu - counts
  }
  return nll;
}

TomographyResult mle_reconstruct(const std::vector<CountRecord>& records,
                                 const MleOptions& options) {
  validate_records(records);
  std::int64_t total = 0;
  double total_exposure = 0.0;
  for (const auto& r : records) {
    total += r.counts;
    total_exposure += r.exposure;
  }
  if (total == 0) {
    throw ReconstructionError("mle_reconstruct: all counts are zero");
  }

  Matrix4c rho_init = Matrix4c::Identity() / 4.0;
  double flux_init = static_cast<double>(total) / total_exposure;
  try {
    const TomographyResult lin = linear_reconstruct(records, true);
    rho_init = lin.estimate.matrix();
    flux_init = lin.flux_estimate;
  } catch (const Error&) {
    // Fall back to the maximally mixed start.
  }
  rho_init = (1.0 - 1e-6) * rho_init + 1e-6 * Matrix4c::Identity() / 4.0;

  const PoissonNllModel model(records);
  Eigen::VectorXd theta =
      PoissonNllModel::params_from_state(rho_init, flux_init);

  const int n = PoissonNllModel::kNumParams;
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd grad(n);
  double f = model.value_and_gradient(theta, grad);
  if (!std::isfinite(f)) {
    throw ReconstructionError("mle_reconstruct: infeasible starting point");
  }

  int iterations = 0;
  int small_improvements = 0;
  bool converged = false;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    iterations = iter;
    Eigen::VectorXd direction = -h * grad;
    if (direction.dot(grad) >= 0.0) {
      h.setIdentity();
      direction = -grad;
    }
    double step = 1.0;
    double f_new = kInf;
    Eigen::VectorXd theta_new;
    bool accepted = false;
    for (int tries = 0; tries < 2 && !accepted; ++tries) {
      const double slope = direction.dot(grad);
      step = 1.0;
      while (step > 1e-20) {
        theta_new = theta + step * direction;
        f_new = model.value(theta_new);
        if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted && tries == 0) {
        h.setIdentity();
        direction = -grad;
      }
    }
    if (!accepted) {
      // No descent representable at double precision.
      converged = true;
      break;
    }

    Eigen::VectorXd grad_new(n);
    const double f_accepted = model.value_and_gradient(theta_new, grad_new);
    const Eigen::VectorXd s = step * direction;
    const Eigen::VectorXd y = grad_new - grad;
    const double sy = s.dot(y);
    if (iter == 1 && sy > 0.0) {
      h = (sy / y.dot(y)) * Eigen::MatrixXd::Identity(n, n);
    }
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const Eigen::VectorXd hy = h * y;
      const double yhy = y.dot(hy);
      h += ((sy + yhy) / (sy * sy)) * (s * s.transpose()) -
           (hy * s.transpose() + s * hy.transpose()) / sy;
    }

    const double improvement = f - f_accepted;
    theta = theta_new;
    f = f_accepted;
    grad = grad_new;
    if (improvement < options.improvement_tolerance) {
      if (++small_improvements >= 2) {
        converged = true;
        break;
      }
    } else {
      small_improvements = 0;
    }
  }

  const Matrix4c rho = PoissonNllModel::state_from_params(theta);
  const double flux = std::exp(theta(10));
  TomographyResult result{VisibleDensityMatrix::from_matrix(rho, true), flux,
                          Method::Mle, FitDiagnostics{}};
  result.diagnostics.nll = f;
  result.diagnostics.iterations = iterations;
  result.diagnostics.residual = rate_residual(rho, flux, records);
  if (!converged) {
    throw NonConvergenceError(
        "mle_reconstruct: iteration cap reached before convergence",
        std::move(result));
  }
  return result;
}

std::vector<double> predict_rates(
    const TomographyResult& result,
    const std::vector<MeasurementSetting>& settings) {
  std::vector<double> rates;
  rates.reserve(settings.size());
  for (const auto& s : settings) {
    rates.push_back(result.flux_estimate *
                    (result.estimate.matrix() * detection_operator(s))
                        .trace()
                        .real());
  }
  return rates;
}

}  // namespace hq
