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

#include "qmc/qudit_algebra.hpp"

namespace qmc {

/// Result of checking a matrix against the density-matrix invariants.
struct DensityCheck {
  double hermiticity_error = 0.0;  // max |m - m^dagger|
  double trace_error = 0.0;        // |tr m - 1|
  double min_eigenvalue = 0.0;

  bool ok(double tol = 1e-10, double psd_tol = 1e-9) const {
    return hermiticity_error <= tol && trace_error <= tol && min_eigenvalue >= -psd_tol;
  }
};

DensityCheck check_density(const Matrix& m);

/// Density matrix of a d-qudit register (d^d x d^d).
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity; throws InvalidArgument.
  DensityMatrix(QuditDim d, Matrix m);

  /// Skips validation. For outputs of operations known to preserve the
  /// invariants (channel maps, unitary conjugation).
  static DensityMatrix trusted(QuditDim d, Matrix m);

  static DensityMatrix maximally_mixed(QuditDim d);

  QuditDim dim() const { return d_; }
  const Matrix& matrix() const { return m_; }
  Eigen::Index size() const { return m_.rows(); }

 private:
  struct Trusted {};
  DensityMatrix(QuditDim d, Matrix m, Trusted) : d_(d), m_(std::move(m)) {}

  QuditDim d_;
  Matrix m_;
};

}  // namespace qmc
