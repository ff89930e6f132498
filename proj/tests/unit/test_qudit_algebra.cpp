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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "qmc/errors.hpp"
#include "qmc/qudit_algebra.hpp"

namespace qmc {
namespace {

const double kPi = 3.14159265358979323846;

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

TEST(GenPauli, IdentityAndBitFlip) {
  EXPECT_LT((gen_pauli(QuditDim(2), {0, 0}) - identity(2)).cwiseAbs().maxCoeff(), 1e-15);
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  EXPECT_LT((gen_pauli(QuditDim(2), {1, 0}) - x).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GenPauli, QutritShiftWithPhase) {
  const Matrix u = gen_pauli(QuditDim(3), {1, 1});
  const Complex w = std::polar(1.0, 2 * kPi / 3);
  // columns are images of |0>, |1>, |2>
  EXPECT_NEAR(std::abs(u(1, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(2, 1) - w), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 2) - w * w), 0.0, 1e-15);
  EXPECT_NEAR(u.cwiseAbs().sum(), 3.0, 1e-14);
}

TEST(GenPauli, UnitaryAndShiftOrder) {
  for (int d = 2; d <= 5; ++d) {
    const QuditDim dd(d);
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) EXPECT_LE(unitarity_error(gen_pauli(dd, {m, n})), 1e-12) << d << m << n;
    }
    Matrix pw = identity(d);
    const Matrix s = gen_pauli(dd, {1, 0});
    for (int i = 0; i < d; ++i) pw = pw * s;
    EXPECT_LT((pw - identity(d)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(GenPauli, RejectsOutOfRangeLabels) {
  EXPECT_THROW(gen_pauli(QuditDim(3), {3, 0}), InvalidArgument);
  EXPECT_THROW(gen_pauli(QuditDim(3), {0, -1}), InvalidArgument);
  EXPECT_THROW(QuditDim(1), InvalidArgument);
}

TEST(CommutationPhase, KnownValues) {
  EXPECT_NEAR(std::abs(commutation_phase(QuditDim(2), {1, 0}, {0, 1}) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(commutation_phase(QuditDim(3), {1, 0}, {0, 1}) - std::polar(1.0, -2 * kPi / 3)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(commutation_phase(QuditDim(4), {2, 3}, {2, 3}) - 1.0), 0.0, 1e-15);
}

TEST(CommutationPhase, MatchesMatrixProducts) {
  for (int d = 2; d <= 5; ++d) {
    const QuditDim dd(d);
    double worst = 0.0;
    for (int a = 0; a < d * d; ++a) {
      for (int b = 0; b < d * d; ++b) {
        const PauliIndex ia{a / d, a % d}, ib{b / d, b % d};
        const Matrix ua = gen_pauli(dd, ia), ub = gen_pauli(dd, ib);
        worst = std::max(worst, (ua * ub - commutation_phase(dd, ia, ib) * (ub * ua)).cwiseAbs().maxCoeff());
      }
    }
    EXPECT_LE(worst, 1e-12) << "d=" << d;
  }
}

TEST(CnotGate, QubitTruthTable) {
  const Matrix c = cnot_gate(QuditDim(2), 0, 1, 2);
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = expect(3, 2) = expect(2, 3) = 1.0;
  EXPECT_LT((c - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(CnotGate, ModularAddition) {
  const Matrix c = cnot_gate(QuditDim(3), 0, 1, 2);
  // |2>|2> = index 8 goes to |2>|1> = index 7
  EXPECT_NEAR(std::abs(c(7, 8) - 1.0), 0.0, 1e-15);
}

TEST(CnotGate, EqualsControlledShiftPowers) {
  for (int d = 2; d <= 4; ++d) {
    const QuditDim dd(d);
    Matrix built = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
      Matrix proj = Matrix::Zero(d, d);
      proj(i, i) = 1.0;
      built += kron(proj, gen_pauli(dd, {i, 0}));
    }
    EXPECT_LT((cnot_gate(dd, 0, 1, 2) - built).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(CnotGate, ConjugationPreservesSpectrum) {
  const QuditDim dd(4);
  std::mt19937_64 g(3);
  std::normal_distribution<double> n01;
  const Eigen::Index D = 256;
  Matrix a(D, D);
  for (Eigen::Index i = 0; i < D; ++i) {
    for (Eigen::Index j = 0; j < D; ++j) a(i, j) = Complex(n01(g), n01(g));
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  const Matrix c = cnot_gate(dd, 0, 2, 4);
  EXPECT_TRUE(is_unitary(c));
  const Eigen::VectorXd before = Eigen::SelfAdjointEigenSolver<Matrix>(rho, Eigen::EigenvaluesOnly).eigenvalues();
  const Matrix conj = c * rho * c.adjoint();
  const Eigen::VectorXd after =
      Eigen::SelfAdjointEigenSolver<Matrix>(Matrix(0.5 * (conj + conj.adjoint())), Eigen::EigenvaluesOnly)
          .eigenvalues();
  EXPECT_LT((before - after).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Kron, Basics) {
  EXPECT_LT((kron(identity(2), identity(2)) - identity(4)).cwiseAbs().maxCoeff(), 1e-15);
  Matrix a(2, 2);
  a << 2, 0, 0, 3;
  const Matrix k = kron(a, identity(3));
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Matrix>(k, Eigen::EigenvaluesOnly).eigenvalues();
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(ev(i), 2.0, 1e-14);
    EXPECT_NEAR(ev(i + 3), 3.0, 1e-14);
  }
  const Matrix u = gen_pauli(QuditDim(3), {1, 1});
  EXPECT_LT((dagger(u) * u - identity(3)).cwiseAbs().maxCoeff(), 1e-15);
  const Matrix parts[] = {identity(2), a, identity(2)};
  EXPECT_EQ(kron_all(parts).rows(), 8);
}

TEST(Digits, BigEndian) {
  EXPECT_EQ(to_digits(15, 3, 3), (std::vector<int>{1, 2, 0}));
  const std::vector<int> digits{1, 2, 0};
  EXPECT_EQ(from_digits(digits, 3), 15u);
  EXPECT_EQ(mod(-1, 4), 3);
}

}  // namespace
}  // namespace qmc
