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

#include "qmc/density_matrix.hpp"

#include <string>

#include "qmc/errors.hpp"

namespace qmc {

DensityCheck check_density(const Matrix& m) {
  DensityCheck c;
  if (m.rows() != m.cols()) throw InvalidArgument("density matrix must be square");
  c.hermiticity_error = (m - m.adjoint()).cwiseAbs().maxCoeff();
  c.trace_error = std::abs(m.trace() - Complex(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("eigensolver failed while checking a density matrix");
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

DensityMatrix::DensityMatrix(QuditDim d, Matrix m) : d_(d), m_(std::move(m)) {
  const auto expected = static_cast<Eigen::Index>(d.register_dim());
  if (m_.rows() != expected || m_.cols() != expected) {
    throw InvalidArgument("density matrix has dimension " + std::to_string(m_.rows()) + ", expected " +
                          std::to_string(expected));
  }
  const DensityCheck c = check_density(m_);
  if (!c.ok()) {
    throw InvalidArgument("not a density matrix: hermiticity error " + std::to_string(c.hermiticity_error) +
                          ", trace error " + std::to_string(c.trace_error) + ", min eigenvalue " +
                          std::to_string(c.min_eigenvalue));
  }
}

DensityMatrix DensityMatrix::trusted(QuditDim d, Matrix m) { return DensityMatrix(d, std::move(m), Trusted{}); }

DensityMatrix DensityMatrix::maximally_mixed(QuditDim d) {
  const auto n = static_cast<Eigen::Index>(d.register_dim());
  Matrix m = Matrix::Identity(n, n) / static_cast<double>(n);
  return trusted(d, std::move(m));
}

}  // namespace qmc
