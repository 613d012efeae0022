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

#include <utility>
#include <vector>

#include "hiddenqutrit/errors.hpp"
#include "hiddenqutrit/polarization.hpp"
#include "hiddenqutrit/types.hpp"

namespace hq {

// First-quantized model of two photons, each carrying a 2-dimensional
// polarization plus a finite-dimensional hidden mode (temporal bin, spatial
// mode, ...). This module is deliberately brute-force: it is the oracle the
// block-structured visible machinery is checked against.

struct HiddenModeBasis {
  explicit HiddenModeBasis(int dimension_in);
  int dimension;
};

class SinglePhotonMode {
 public:
  // Normalizes both factors; throws ValidationError on (near-)zero vectors.
  SinglePhotonMode(const Vector2c& polarization, const VectorXc& hidden);

  const Vector2c& polarization() const { return pol_; }
  const VectorXc& hidden() const { return hid_; }
  int hidden_dimension() const { return static_cast<int>(hid_.size()); }

 private:
  Vector2c pol_;
  VectorXc hid_;
};

// |<hidden_a|hidden_b>| for two wavepackets separated by `delay` with
// Gaussian coherence envelope: exp(-delay^2 / (2 coherence_time^2)).
double gaussian_overlap(double delay, double coherence_time);

// Two single-photon modes with the given polarizations whose hidden vectors
// realize exactly the Gaussian overlap for `delay`: the first occupies bin 0,
// the second gamma|0> + sqrt(1-gamma^2)|1> in a hidden basis of hidden_dim
// bins. Throws ValidationError when hidden_dim < 2 yet the overlap is below
// one (a single bin cannot hold two distinguishable wavepackets).
std::pair<SinglePhotonMode, SinglePhotonMode> mode_pair_from_delay(
    const Vector2c& pol_a, const Vector2c& pol_b, double delay,
    double coherence_time, int hidden_dim = 2);

// A pure two-photon state in the full (2D)^2 product space, flattened with
// index ((p1*D + h1) * 2D + p2*D + h2) for polarizations p1, p2 and hidden
// bins h1, h2.
class FullTwoPhotonState {
 public:
  // (|a>|b> + |b>|a>) / sqrt(2 (1 + |<a|b>|^2)); always well defined for
  // normalized inputs.
  static FullTwoPhotonState symmetrize(const SinglePhotonMode& a,
                                       const SinglePhotonMode& b);
  // Amplitudes must be normalized within 1e-12 and exchange symmetric.
  static FullTwoPhotonState from_amplitudes(const VectorXc& amplitudes,
                                            int hidden_dimension);

  int hidden_dimension() const { return dim_; }
  const VectorXc& amplitudes() const { return amp_; }
  Complex amplitude(int p1, int h1, int p2, int h2) const;

 private:
  FullTwoPhotonState(VectorXc amp, int dim)
      : amp_(std::move(amp)), dim_(dim) {}
  VectorXc amp_;
  int dim_;
};

// A density matrix on the full space, supported on the exchange-symmetric
// (bosonic) subspace.
class FullDensityMatrix {
 public:
  static FullDensityMatrix from_state(const FullTwoPhotonState& state);
  // weights must be nonnegative and sum to 1 within 1e-9; all states must
  // share a hidden dimension.
  static FullDensityMatrix from_mixture(
      const std::vector<FullTwoPhotonState>& states,
      const std::vector<double>& weights);
  // Validates hermiticity, unit trace, positivity (within 1e-9) and
  // exchange symmetry (SWAP rho = rho within 1e-9).
  static FullDensityMatrix from_matrix(const MatrixXc& m,
                                       int hidden_dimension);

  int hidden_dimension() const { return dim_; }
  const MatrixXc& matrix() const { return m_; }

 private:
  FullDensityMatrix(MatrixXc m, int dim) : m_(std::move(m)), dim_(dim) {}
  MatrixXc m_;
  int dim_;
};

// Traces out both hidden indices and re-expresses the visible 4x4 matrix in
// the coupled basis. Bosonic symmetry forces the triplet<->singlet entries
// to vanish; they are checked against 1e-10 and then zeroed exactly, so the
// result always satisfies the block-structure invariant.
VisibleDensityMatrix partial_trace_hidden(const FullDensityMatrix& rho);

// Expectation of a visible (coupled-basis) operator lifted to the full
// space: Tr[rho (O (x) I_hidden)]. Agrees with Tr[partial_trace(rho) O] by
// construction; kept as the independent full-space route.
double born_full(const FullDensityMatrix& rho, const Matrix4c& op_coupled);

}  // namespace hq
