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

#include "qmc/qudit_algebra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

QuditDim::QuditDim(int d) : d_(d) {
  if (d < 2) throw InvalidArgument("qudit dimension must be >= 2, got " + std::to_string(d));
}

std::size_t QuditDim::register_dim() const { return ipow(d_, d_); }

void QuditDim::require_dense() const {
  if (d_ > kMaxDense) {
    throw InvalidArgument("dense simulation supports d <= " + std::to_string(kMaxDense) + ", got " +
                          std::to_string(d_));
  }
}

int mod(long long a, int d) {
  long long r = a % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

Complex root_of_unity(int d, long long k) {
  const int r = mod(k, d);
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3 * d) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<int> to_digits(std::size_t index, int d, int n_sites) {
  std::vector<int> digits(static_cast<std::size_t>(n_sites));
  for (int s = n_sites - 1; s >= 0; --s) {
    digits[static_cast<std::size_t>(s)] = static_cast<int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return digits;
}

std::size_t from_digits(std::span<const int> digits, int d) {
  std::size_t index = 0;
  for (int v : digits) index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(mod(v, d));
  return index;
}

namespace {
void check_index(QuditDim d, PauliIndex idx) {
  const int dv = d.value();
  if (idx.shift < 0 || idx.shift >= dv || idx.phase < 0 || idx.phase >= dv) {
    throw InvalidArgument("Pauli index (" + std::to_string(idx.shift) + "," + std::to_string(idx.phase) +
                          ") out of range for d=" + std::to_string(dv));
  }
}
}  // namespace

Matrix gen_pauli(QuditDim d, PauliIndex idx) {
  check_index(d, idx);
  const int dv = d.value();
  Matrix u = Matrix::Zero(dv, dv);
  for (int k = 0; k < dv; ++k) {
    u(mod(k + idx.shift, dv), k) = root_of_unity(dv, static_cast<long long>(k) * idx.phase);
  }
  return u;
}

Complex commutation_phase(QuditDim d, PauliIndex a, PauliIndex b) {
  check_index(d, a);
  check_index(d, b);
  return root_of_unity(d.value(), static_cast<long long>(b.shift) * a.phase -
                                      static_cast<long long>(a.shift) * b.phase);
}

Matrix cnot_gate(QuditDim d, int control, int target, int n_sites) {
  if (n_sites < 2 || control < 0 || target < 0 || control >= n_sites || target >= n_sites) {
    throw InvalidArgument("controlled-adder sites out of range");
  }
  if (control == target) throw InvalidArgument("controlled-adder needs distinct control and target");
  const int dv = d.value();
  const std::size_t dim = ipow(dv, n_sites);
  Matrix c = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    auto digits = to_digits(i, dv, n_sites);
    digits[static_cast<std::size_t>(target)] =
        mod(digits[static_cast<std::size_t>(target)] + digits[static_cast<std::size_t>(control)], dv);
    c(static_cast<Eigen::Index>(from_digits(digits, dv)), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
  if (factors.empty()) throw InvalidArgument("kron_all of an empty list");
  Matrix out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

Matrix dagger(const Matrix& m) { return m.adjoint(); }

double unitarity_error(const Matrix& u) {
  if (u.rows() != u.cols()) throw InvalidArgument("unitarity check on a non-square matrix");
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& u, double tol) { return unitarity_error(u) <= tol; }

}  // namespace qmc
