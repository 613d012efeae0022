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

#include "hiddenqutrit/hilbert.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace hq {

namespace {

int flat_index(int p1, int h1, int p2, int h2, int dim) {
  return (p1 * dim + h1) * 2 * dim + p2 * dim + h2;
}

int swapped_index(int flat, int dim) {
  const int two_d = 2 * dim;
  return (flat % two_d) * two_d + flat / two_d;
}

}  // namespace

HiddenModeBasis::HiddenModeBasis(int dimension_in) : dimension(dimension_in) {
  if (dimension < 1) {
    throw DimensionError("HiddenModeBasis: dimension must be >= 1");
  }
}

SinglePhotonMode::SinglePhotonMode(const Vector2c& polarization,
                                   const VectorXc& hidden)
    : pol_(polarization), hid_(hidden) {
  if (hid_.size() < 1) {
    throw DimensionError("SinglePhotonMode: empty hidden vector");
  }
  const double pn = pol_.norm();
  const double hn = hid_.norm();
  if (pn < 1e-12 || hn < 1e-12) {
    throw ValidationError("SinglePhotonMode: zero vector");
  }
  pol_ /= pn;
  hid_ /= hn;
}

double gaussian_overlap(double delay, double coherence_time) {
  if (!(coherence_time > 0.0)) {
    throw ValidationError("gaussian_overlap: coherence_time must be > 0");
  }
  return std::exp(-delay * delay / (2.0 * coherence_time * coherence_time));
}

std::pair<SinglePhotonMode, SinglePhotonMode> mode_pair_from_delay(
    const Vector2c& pol_a, const Vector2c& pol_b, double delay,
    double coherence_time, int hidden_dim) {
  HiddenModeBasis basis(hidden_dim);
  const double gamma = gaussian_overlap(delay, coherence_time);
  if (hidden_dim < 2 && gamma < 1.0 - 1e-12) {
    throw ValidationError(
        "mode_pair_from_delay: hidden_dim < 2 cannot represent overlap < 1");
  }
  VectorXc hid_a = VectorXc::Zero(hidden_dim);
  hid_a(0) = 1.0;
  VectorXc hid_b = VectorXc::Zero(hidden_dim);
  hid_b(0) = gamma;
  if (hidden_dim >= 2) {
    hid_b(1) = std::sqrt(std::max(0.0, 1.0 - gamma * gamma));
  }
  return {SinglePhotonMode(pol_a, hid_a), SinglePhotonMode(pol_b, hid_b)};
}

FullTwoPhotonState FullTwoPhotonState::symmetrize(const SinglePhotonMode& a,
                                                  const SinglePhotonMode& b) {
  if (a.hidden_dimension() != b.hidden_dimension()) {
    throw DimensionError("symmetrize: hidden dimensions differ");
  }
  const int dim = a.hidden_dimension();
  const int n = 4 * dim * dim;
  VectorXc amp = VectorXc::Zero(n);
  for (int p1 = 0; p1 < 2; ++p1)
    for (int h1 = 0; h1 < dim; ++h1)
      for (int p2 = 0; p2 < 2; ++p2)
        for (int h2 = 0; h2 < dim; ++h2) {
          const Complex ab = a.polarization()(p1) * a.hidden()(h1) *
                             b.polarization()(p2) * b.hidden()(h2);
          const Complex ba = b.polarization()(p1) * b.hidden()(h1) *
                             a.polarization()(p2) * a.hidden()(h2);
          amp(flat_index(p1, h1, p2, h2, dim)) = ab + ba;
        }
  const Complex inner = a.polarization().dot(b.polarization()) *
                        a.hidden().dot(b.hidden());
  amp /= std::sqrt(2.0 * (1.0 + std::norm(inner)));
  return FullTwoPhotonState(std::move(amp), dim);
}

FullTwoPhotonState FullTwoPhotonState::from_amplitudes(
    const VectorXc& amplitudes, int hidden_dimension) {
  HiddenModeBasis basis(hidden_dimension);
  const int n = 4 * hidden_dimension * hidden_dimension;
  if (amplitudes.size() != n) {
    throw DimensionError("from_amplitudes: wrong length");
  }
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
    throw ValidationError("from_amplitudes: not normalized");
  }
  for (int i = 0; i < n; ++i) {
    const int j = swapped_index(i, hidden_dimension);
    if (std::abs(amplitudes(i) - amplitudes(j)) > 1e-12) {
      throw ValidationError("from_amplitudes: not exchange symmetric");
    }
  }
  return FullTwoPhotonState(amplitudes, hidden_dimension);
}

Complex FullTwoPhotonState::amplitude(int p1, int h1, int p2, int h2) const {
  if (p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1 || h1 < 0 || h1 >= dim_ ||
      h2 < 0 || h2 >= dim_) {
    throw DimensionError("amplitude: index out of range");
  }
  return amp_(flat_index(p1, h1, p2, h2, dim_));
}

FullDensityMatrix FullDensityMatrix::from_state(
    const FullTwoPhotonState& state) {
  return FullDensityMatrix(
      state.amplitudes() * state.amplitudes().adjoint(),
      state.hidden_dimension());
}

FullDensityMatrix FullDensityMatrix::from_mixture(
    const std::vector<FullTwoPhotonState>& states,
    const std::vector<double>& weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw DimensionError("from_mixture: states/weights mismatch");
  }
  const int dim = states.front().hidden_dimension();
  double total = 0.0;
  for (double w : weights) {
    if (w < -1e-12) {
      throw ValidationError("from_mixture: negative weight");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("from_mixture: weights do not sum to 1");
  }
  const int n = 4 * dim * dim;
  MatrixXc m = MatrixXc::Zero(n, n);
  for (size_t k = 0; k < states.size(); ++k) {
    if (states[k].hidden_dimension() != dim) {
      throw DimensionError("from_mixture: hidden dimensions differ");
    }
    m += (weights[k] / total) * states[k].amplitudes() *
         states[k].amplitudes().adjoint();
  }
  return FullDensityMatrix(std::move(m), dim);
}

FullDensityMatrix FullDensityMatrix::from_matrix(const MatrixXc& m,
                                                 int hidden_dimension) {
  HiddenModeBasis basis(hidden_dimension);
  const int n = 4 * hidden_dimension * hidden_dimension;
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError("FullDensityMatrix: wrong shape");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw ValidationError("FullDensityMatrix: not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-12) {
    throw ValidationError("FullDensityMatrix: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw ValidationError("FullDensityMatrix: negative eigenvalue");
  }
  // Bosonic support: SWAP rho = rho.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int si = swapped_index(i, hidden_dimension);
      if (std::abs(m(si, j) - m(i, j)) > 1e-9) {
        throw ValidationError(
            "FullDensityMatrix: not supported on the symmetric subspace");
      }
    }
  }
  return FullDensityMatrix(m, hidden_dimension);
}

VisibleDensityMatrix partial_trace_hidden(const FullDensityMatrix& rho) {
  const int dim = rho.hidden_dimension();
  Matrix4c vis_product = Matrix4c::Zero();
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2)
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2) {
          Complex sum = 0.0;
          for (int h1 = 0; h1 < dim; ++h1)
            for (int h2 = 0; h2 < dim; ++h2)
              sum += rho.matrix()(flat_index(p1, h1, p2, h2, dim),
                                  flat_index(q1, h1, q2, h2, dim));
          vis_product(2 * p1 + p2, 2 * q1 + q2) = sum;
        }
  Matrix4c coupled = product_to_coupled(vis_product);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(coupled(i, kPsiMinus)) > 1e-10 ||
        std::abs(coupled(kPsiMinus, i)) > 1e-10) {
      throw ValidationError(
          "partial_trace_hidden: triplet/singlet coherence above 1e-10; "
          "input is not exchange symmetric");
    }
    coupled(i, kPsiMinus) = 0.0;
    coupled(kPsiMinus, i) = 0.0;
  }
  return VisibleDensityMatrix::from_matrix(coupled);
}

double born_full(const FullDensityMatrix& rho, const Matrix4c& op_coupled) {
  const int dim = rho.hidden_dimension();
  const Matrix4c op = coupled_to_product(op_coupled);
  Complex sum = 0.0;
  // Tr[rho (O (x) I_hidden)], hidden indices contracted diagonally.
  for (int p1 = 0; p1 < 2; ++p1)
    for (int p2 = 0; p2 < 2; ++p2)
      for (int q1 = 0; q1 < 2; ++q1)
        for (int q2 = 0; q2 < 2; ++q2)
          for (int h1 = 0; h1 < dim; ++h1)
            for (int h2 = 0; h2 < dim; ++h2)
              sum += rho.matrix()(flat_index(p1, h1, p2, h2, dim),
                                  flat_index(q1, h1, q2, h2, dim)) *
                     op(2 * q1 + q2, 2 * p1 + p2);
  return sum.real();
}

}  // namespace hq
