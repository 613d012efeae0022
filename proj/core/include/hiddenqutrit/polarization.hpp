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

#include "hiddenqutrit/errors.hpp"
#include "hiddenqutrit/types.hpp"

namespace hq {

Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();

enum class WaveplateKind { Half, Quarter };

// Single-photon Jones matrix; the constructor rejects anything that is not
// unitary within 1e-12.
class JonesUnitary {
 public:
  explicit JonesUnitary(const Matrix2c& m);
  const Matrix2c& matrix() const { return m_; }

 private:
  Matrix2c m_;
};

// Jones matrix of a waveplate with fast axis at angle_deg from horizontal:
// exp[i (G/2) (sigma_z cos 2t - sigma_x sin 2t)], retardance G = pi for a
// half-waveplate and pi/2 for a quarter-waveplate.
JonesUnitary waveplate_unitary(WaveplateKind kind, double angle_deg);

// Analyzer made of a half-waveplate at h_deg followed by a quarter-waveplate
// at q_deg, acting identically on both photons: U = H(h) Q(q).
JonesUnitary analyzer_unitary(double h_deg, double q_deg);

// Columns are the coupled basis vectors [HH, psi+, VV, psi-] expressed in the
// product basis [HH, HV, VH, VV].
Matrix4c coupled_basis_in_product();

// Conjugate a two-photon operator between the product and coupled bases.
Matrix4c product_to_coupled(const Matrix4c& op_product);
Matrix4c coupled_to_product(const Matrix4c& op_coupled);

// U (x) U in the coupled basis. Exactly block-diagonal: a 3x3 unitary on the
// symmetric triplet plus the scalar det(U) on |psi->. The blocks are built
// separately so the structural zeros are exact.
Matrix4c two_photon_unitary(const JonesUnitary& u);

class PureVisibleState {
 public:
  // Coupled-basis amplitudes; throws ValidationError unless normalized
  // within 1e-12.
  explicit PureVisibleState(const Vector4c& amplitudes);
  const Vector4c& vector() const { return v_; }

 private:
  Vector4c v_;
};

// (|HH> + |VV>)/sqrt(2), the two-photon NOON state in the H/V basis.
PureVisibleState noon_target();

// Two-photon polarization density matrix in the coupled basis. Valid
// instances are Hermitian with unit trace, block-structured (the six
// triplet<->singlet entries are exactly zero), and positive semidefinite
// unless positivity checking was explicitly skipped (linear tomography can
// produce indefinite estimates).
class VisibleDensityMatrix {
 public:
  // Validates hermiticity and trace within 1e-9, requires the off-block
  // entries below 1e-9 in magnitude (then zeroes them exactly), and unless
  // require_psd is false requires eigenvalues >= -1e-9.
  static VisibleDensityMatrix from_matrix(const Matrix4c& m,
                                          bool require_psd = true);

  const Matrix4c& matrix() const { return m_; }
  Complex entry(int row, int col) const { return m_(row, col); }
  double population(int coupled_index) const;

 private:
  explicit VisibleDensityMatrix(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

// Lifts the single-photon unitary to both photons and conjugates the state;
// block structure is preserved exactly and the spectrum is untouched.
VisibleDensityMatrix apply_unitary(const VisibleDensityMatrix& rho,
                                   const JonesUnitary& u);

// Collective dephasing: rotates both polarizations by axis_deg, then both
// photons see the same random phase R(phi) = diag(1, e^{i phi}) with
// phi ~ N(0, phase_stdev^2). The Gaussian average is exact: in the rotated
// frame the HH<->VV coherence shrinks by exp(-2 s^2), the HH<->psi+ and
// psi+<->VV coherences by exp(-s^2/2), and populations and the |psi-> block
// are untouched.
VisibleDensityMatrix collective_dephasing(const VisibleDensityMatrix& rho,
                                          double phase_stdev,
                                          double axis_deg = 0.0);

}  // namespace hq
