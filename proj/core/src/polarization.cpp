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

#include "hiddenqutrit/polarization.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace hq {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix2c pauli_x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2c pauli_y() {
  Matrix2c m;
  m << 0, -kI, kI, 0;
  return m;
}

Matrix2c pauli_z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

JonesUnitary::JonesUnitary(const Matrix2c& m) : m_(m) {
  if ((m_ * m_.adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff() >
      1e-12) {
    throw ValidationError("JonesUnitary: matrix is not unitary");
  }
}

JonesUnitary waveplate_unitary(WaveplateKind kind, double angle_deg) {
  const double gamma = kind == WaveplateKind::Half ? kPi : kPi / 2.0;
  const double t2 = 2.0 * deg_to_rad(angle_deg);
  // exp[i(G/2) n.sigma] = cos(G/2) I + i sin(G/2) n.sigma for unit n.
  const Matrix2c axis =
      std::cos(t2) * pauli_z() - std::sin(t2) * pauli_x();
  return JonesUnitary(std::cos(gamma / 2.0) * Matrix2c::Identity() +
                      kI * std::sin(gamma / 2.0) * axis);
}

JonesUnitary analyzer_unitary(double h_deg, double q_deg) {
  return JonesUnitary(waveplate_unitary(WaveplateKind::Half, h_deg).matrix() *
                      waveplate_unitary(WaveplateKind::Quarter, q_deg)
                          .matrix());
}

Matrix4c coupled_basis_in_product() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix4c b = Matrix4c::Zero();
  b(0, 0) = 1.0;            // |HH>
  b(1, 1) = s;              // |psi+>
  b(2, 1) = s;
  b(3, 2) = 1.0;            // |VV>
  b(1, 3) = s;              // |psi->
  b(2, 3) = -s;
  return b;
}

Matrix4c product_to_coupled(const Matrix4c& op_product) {
  const Matrix4c b = coupled_basis_in_product();
  return b.adjoint() * op_product * b;
}

Matrix4c coupled_to_product(const Matrix4c& op_coupled) {
  const Matrix4c b = coupled_basis_in_product();
  return b * op_coupled * b.adjoint();
}

Matrix4c two_photon_unitary(const JonesUnitary& u) {
  const Matrix4c b = coupled_basis_in_product();
  const Matrix4c uu = kron2(u.matrix(), u.matrix());
  Matrix4c out = Matrix4c::Zero();
  // <psi-| U(x)U |psi-> = det U; the singlet never mixes with the triplet.
  out.block<3, 3>(0, 0) =
      b.leftCols<3>().adjoint() * uu * b.leftCols<3>();
  out(kPsiMinus, kPsiMinus) = u.matrix().determinant();
  return out;
}

PureVisibleState::PureVisibleState(const Vector4c& amplitudes)
    : v_(amplitudes) {
  if (std::abs(v_.norm() - 1.0) > 1e-12) {
    throw ValidationError("PureVisibleState: amplitudes are not normalized");
  }
}

PureVisibleState noon_target() {
  Vector4c v = Vector4c::Zero();
  v(kHH) = 1.0 / std::sqrt(2.0);
  v(kVV) = 1.0 / std::sqrt(2.0);
  return PureVisibleState(v);
}

double VisibleDensityMatrix::population(int coupled_index) const {
  if (coupled_index < 0 || coupled_index > 3) {
    throw DimensionError("population: index out of range");
  }
  return m_(coupled_index, coupled_index).real();
}

VisibleDensityMatrix VisibleDensityMatrix::from_matrix(const Matrix4c& m,
                                                       bool require_psd) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
    throw ValidationError("VisibleDensityMatrix: not Hermitian");
  }
  if (std::abs(m.trace().real() - 1.0) > 1e-9 ||
      std::abs(m.trace().imag()) > 1e-9) {
    throw ValidationError("VisibleDensityMatrix: trace is not 1");
  }
  Matrix4c fixed = (m + m.adjoint()) / 2.0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(fixed(i, kPsiMinus)) > 1e-9 ||
        std::abs(fixed(kPsiMinus, i)) > 1e-9) {
      throw ValidationError(
          "VisibleDensityMatrix: triplet/singlet coherence present");
    }
    fixed(i, kPsiMinus) = 0.0;
    fixed(kPsiMinus, i) = 0.0;
  }
  if (require_psd) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(fixed,
                                               Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
      throw ValidationError("VisibleDensityMatrix: negative eigenvalue");
    }
  }
  return VisibleDensityMatrix(fixed);
}

VisibleDensityMatrix apply_unitary(const VisibleDensityMatrix& rho,
                                   const JonesUnitary& u) {
  const Matrix4c t = two_photon_unitary(u);
  return VisibleDensityMatrix::from_matrix(t * rho.matrix() * t.adjoint(),
                                           false);
}

VisibleDensityMatrix collective_dephasing(const VisibleDensityMatrix& rho,
                                          double phase_stdev,
                                          double axis_deg) {
  if (phase_stdev < 0.0) {
    throw ValidationError("collective_dephasing: negative phase_stdev");
  }
  const double a = deg_to_rad(axis_deg);
  Matrix2c w;
  w << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  const Matrix4c tw = two_photon_unitary(JonesUnitary(w));
  Matrix4c rotated = tw * rho.matrix() * tw.adjoint();
  // R(phi) = diag(1, e^{i phi}) on each photon gives the coupled basis
  // phases phi * theta with theta = (0, 1, 2, 1); averaging the relative
  // phase exp(i phi (theta_j - theta_k)) over phi ~ N(0, s^2) damps each
  // coherence by exp(-s^2 (theta_j - theta_k)^2 / 2).
  const double theta[4] = {0.0, 1.0, 2.0, 1.0};
  const double s2 = phase_stdev * phase_stdev;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      const double d = theta[j] - theta[k];
      rotated(j, k) *= std::exp(-s2 * d * d / 2.0);
    }
  }
  return VisibleDensityMatrix::from_matrix(rotated, false);
}

}  // namespace hq
