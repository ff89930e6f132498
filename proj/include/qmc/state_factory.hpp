// Copyright 2026 The qudit-memory-channel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Input states. Every state lives on d qudits of dimension d, indexed
// big-endian (site 0 is the most significant digit).

#include <vector>

#include "qmc/density_matrix.hpp"

namespace qmc {

/// Unit-norm amplitude vector over the d^d computational basis.
class StateVector {
 public:
  StateVector(QuditDim d, Vector amplitudes);

  QuditDim dim() const { return d_; }
  const Vector& amplitudes() const { return v_; }

 private:
  QuditDim d_;
  Vector v_;
};

/// Coefficients A_j of sum_j A_j |j>^{(x)d}.
class DiagonalCoeffs {
 public:
  /// Rejects vectors whose squared norm differs from 1 by more than 1e-9.
  explicit DiagonalCoeffs(std::vector<Complex> a);

  int size() const { return static_cast<int>(a_.size()); }
  const std::vector<Complex>& values() const { return a_; }
  Complex operator[](int j) const { return a_[static_cast<std::size_t>(j)]; }
  /// |A_j|^2 for every j.
  std::vector<double> weights() const;

 private:
  std::vector<Complex> a_;
};

/// (1/sqrt d) sum_j w^{js} |j, j+l_1, ..., j+l_{d-1}>.
StateVector max_entangled(QuditDim d, const std::vector<int>& l, int s);
StateVector product_state(QuditDim d, const std::vector<int>& s);

DiagonalCoeffs alpha_coeffs(QuditDim d, double alpha);
DiagonalCoeffs km_coeffs(double theta);
/// Coefficients whose cyclic-shift orbit has k equal nonzero Gram
/// eigenvalues: A_j = (1/sqrt(dk)) sum_{f<k} w^{jf}. k=1 is the uniform
/// (maximally entangled) vector, k=d the product vector.
DiagonalCoeffs k_support_coeffs(QuditDim d, int k);

StateVector alpha_state(QuditDim d, double alpha);
StateVector km_state(double theta);
StateVector diag_state(QuditDim d, const DiagonalCoeffs& coeffs);

/// Angles in [0, pi/2] from cos^2.
double angle_from_cos2(double cos2);

DensityMatrix to_density(const StateVector& psi);

/// Reduced state of one site (partial trace over the others).
Matrix single_site_marginal(const DensityMatrix& rho, int site);

}  // namespace qmc
