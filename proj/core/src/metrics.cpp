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

#include "hiddenqutrit/metrics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace hq {

double fidelity(const VisibleDensityMatrix& rho,
                const PureVisibleState& target) {
  const Complex f =
      target.vector().adjoint() * rho.matrix() * target.vector();
  return std::min(1.0, std::max(0.0, f.real()));
}

double concurrence(const VisibleDensityMatrix& rho) {
  const Matrix4c rho_prod = coupled_to_product(rho.matrix());
  Matrix4c yy = Matrix4c::Zero();
  // sigma_y (x) sigma_y = antidiag(-1, 1, 1, -1) in the product basis.
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix4c r = rho_prod * yy * rho_prod.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4c> es(r);
  Eigen::Vector4d lambdas;
  for (int i = 0; i < 4; ++i) {
    lambdas(i) = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  }
  std::sort(lambdas.data(), lambdas.data() + 4, std::greater<double>());
  return std::max(0.0, lambdas(0) - lambdas(1) - lambdas(2) - lambdas(3));
}

double purity(const VisibleDensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

PopulationSummary populations(const VisibleDensityMatrix& rho) {
  return PopulationSummary{rho.population(kHH), rho.population(kPsiPlus),
                           rho.population(kVV), rho.population(kPsiMinus)};
}

}  // namespace hq
