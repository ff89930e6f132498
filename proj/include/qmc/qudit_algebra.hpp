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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qmc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Number of levels per qudit. The channel is always used d times, so this is
/// also the number of qudits in a register.
class QuditDim {
 public:
  /// Largest d for which dense d^d x d^d matrices are built.
  static constexpr int kMaxDense = 5;

  explicit QuditDim(int d);

  int value() const { return d_; }

  /// d^d, the Hilbert-space dimension of a d-qudit register.
  std::size_t register_dim() const;

  /// Throws InvalidArgument when d exceeds kMaxDense.
  void require_dense() const;

  friend bool operator==(QuditDim, QuditDim) = default;

 private:
  int d_;
};

/// Shift (m) and phase (n) labels of a generalized Pauli operator U_{m,n}.
struct PauliIndex {
  int shift = 0;
  int phase = 0;

  friend bool operator==(const PauliIndex&, const PauliIndex&) = default;
};

/// Non-negative residue of a mod d.
int mod(long long a, int d);

/// base^exp for small non-negative integers.
std::size_t ipow(int base, int exp);

/// exp(2 pi i k / d). k is reduced mod d in integer arithmetic before the
/// conversion to floating point, so equal residues give bit-identical phases.
Complex root_of_unity(int d, long long k);

/// Big-endian digits of a register index: site 0 is the most significant.
std::vector<int> to_digits(std::size_t index, int d, int n_sites);
std::size_t from_digits(std::span<const int> digits, int d);

/// U_{m,n} = sum_k exp(2 pi i k n / d) |k+m mod d><k|.
Matrix gen_pauli(QuditDim d, PauliIndex idx);

/// The phase c with U_a U_b = c U_b U_a.
Complex commutation_phase(QuditDim d, PauliIndex a, PauliIndex b);

/// Controlled mod-d adder on n_sites qudits: |i>_c |j>_t -> |i>_c |j+i>_t.
Matrix cnot_gate(QuditDim d, int control, int target, int n_sites);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_all(std::span<const Matrix> factors);
Matrix dagger(const Matrix& m);

/// Max entrywise deviation of U U^dagger from the identity.
double unitarity_error(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = 1e-12);

}  // namespace qmc
