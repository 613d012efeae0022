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

#include <complex>

#include <Eigen/Dense>

namespace hq {

using Complex = std::complex<double>;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;
using VectorXc = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;

// Two-photon polarization states live in the coupled basis, in this fixed
// order: the symmetric triplet |HH>, |psi+>, |VV> followed by the
// antisymmetric singlet |psi->, with |psi+-> = (|HV> +- |VH>)/sqrt(2).
enum CoupledIndex : int { kHH = 0, kPsiPlus = 1, kVV = 2, kPsiMinus = 3 };

inline constexpr const char* kCoupledLabels[4] = {"HH", "psi_plus", "VV",
                                                  "psi_minus"};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

}  // namespace hq
