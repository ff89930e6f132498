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

#include <cmath>

#include "qmc/errors.hpp"
#include "qmc/state_factory.hpp"

namespace qmc {
namespace {

const double kPi = 3.14159265358979323846;

double gap(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(MaxEntangled, BellAndSinglet) {
  const QuditDim d2(2);
  const double h = 1 / std::sqrt(2.0);
  Vector bell = Vector::Zero(4);
  bell(0) = h;
  bell(3) = h;
  EXPECT_LT(gap(max_entangled(d2, {0}, 0).amplitudes(), bell), 1e-15);
  Vector singlet = Vector::Zero(4);
  singlet(1) = h;
  singlet(2) = -h;
  EXPECT_LT(gap(max_entangled(d2, {1}, 1).amplitudes(), singlet), 1e-15);
}

TEST(MaxEntangled, BasisOrthonormal) {
  for (int d = 2; d <= 4; ++d) {
    const QuditDim dd(d);
    std::vector<Vector> basis;
    const std::size_t n = ipow(d, d);
    for (std::size_t idx = 0; idx < n; ++idx) {
      const auto digits = to_digits(idx, d, d);
      const std::vector<int> l(digits.begin() + 1, digits.end());
      basis.push_back(max_entangled(dd, l, digits[0]).amplitudes());
    }
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        worst = std::max(worst, std::abs(basis[a].dot(basis[b]) - (a == b ? 1.0 : 0.0)));
      }
    }
    EXPECT_LE(worst, 1e-12) << "d=" << d;
  }
}

TEST(ProductState, BigEndianIndex) {
  const Vector v = product_state(QuditDim(3), {1, 2, 0}).amplitudes();
  EXPECT_NEAR(std::abs(v(15) - 1.0), 0.0, 0.0);
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(product_state(QuditDim(2), {0, 0}).amplitudes()(0) - 1.0), 0.0, 0.0);
}

TEST(AlphaState, Endpoints) {
  for (int d = 2; d <= 4; ++d) {
    const QuditDim dd(d);
    EXPECT_LT(gap(alpha_state(dd, 0.0).amplitudes(), product_state(dd, std::vector<int>(d, 0)).amplitudes()), 1e-15);
    const double a = angle_from_cos2(1.0 / d);
    EXPECT_LT(gap(alpha_state(dd, a).amplitudes(), max_entangled(dd, std::vector<int>(d - 1, 0), 0).amplitudes()),
              1e-12);
    for (double x : {0.1, 0.5, 1.0, 1.5}) EXPECT_NEAR(alpha_state(dd, x).amplitudes().norm(), 1.0, 1e-12);
  }
}

TEST(KmState, EndpointsAndNormalization) {
  EXPECT_LT(gap(km_state(0.0).amplitudes(), product_state(QuditDim(4), {0, 0, 0, 0}).amplitudes()), 1e-15);
  const DiagonalCoeffs top = km_coeffs(kPi / 2);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(top[j]), 0.5, 1e-12);
  for (int i = 0; i <= 20; ++i) {
    const double th = i * kPi / 40;
    double s = 0.0;
    for (double w : km_coeffs(th).weights()) s += w;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(DiagState, SpecialCases) {
  const QuditDim d3(3);
  EXPECT_LT(gap(diag_state(d3, DiagonalCoeffs({1.0, 0.0, 0.0})).amplitudes(),
                product_state(d3, {0, 0, 0}).amplitudes()),
            1e-15);
  const double u = 1 / std::sqrt(3.0);
  EXPECT_LT(gap(diag_state(d3, DiagonalCoeffs({u, u, u})).amplitudes(),
                max_entangled(d3, {0, 0}, 0).amplitudes()),
            1e-15);
  EXPECT_LT(gap(diag_state(QuditDim(4), km_coeffs(0.6)).amplitudes(), km_state(0.6).amplitudes()), 1e-15);
}

TEST(DiagState, RejectsUnnormalized) {
  EXPECT_THROW(DiagonalCoeffs({1.0, 0.1}), InvalidArgument);
  EXPECT_NO_THROW(DiagonalCoeffs({1.0, 1e-5}));
}

TEST(StateVector, RejectsBadNorm) {
  Vector v = Vector::Zero(4);
  v(0) = 1.1;
  EXPECT_THROW(StateVector(QuditDim(2), v), InvalidArgument);
  EXPECT_THROW(StateVector(QuditDim(2), Vector::Ones(3) / std::sqrt(3.0)), InvalidArgument);
}

TEST(ToDensity, BellDensity) {
  const DensityMatrix rho = to_density(max_entangled(QuditDim(2), {0}, 0));
  for (int i : {0, 3}) {
    for (int j : {0, 3}) EXPECT_NEAR(rho.matrix()(i, j).real(), 0.5, 1e-15);
  }
  EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_NEAR((rho.matrix() * rho.matrix()).trace().real(), 1.0, 1e-15);
}

TEST(Marginals, MaximallyMixedForUniformStates) {
  for (int d = 2; d <= 4; ++d) {
    const QuditDim dd(d);
    const Matrix target = Matrix::Identity(d, d) / d;
    const DensityMatrix me = to_density(max_entangled(dd, std::vector<int>(d - 1, 1 % d), 1));
    const DensityMatrix al = to_density(alpha_state(dd, angle_from_cos2(1.0 / d)));
    for (int s = 0; s < d; ++s) {
      EXPECT_LT((single_site_marginal(me, s) - target).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((single_site_marginal(al, s) - target).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
  const DensityMatrix km = to_density(km_state(kPi / 2));
  for (int s = 0; s < 4; ++s) {
    EXPECT_LT((single_site_marginal(km, s) - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(KSupport, Endpoints) {
  for (int d = 2; d <= 4; ++d) {
    const QuditDim dd(d);
    for (double w : k_support_coeffs(dd, 1).weights()) EXPECT_NEAR(w, 1.0 / d, 1e-14);
    const auto wd = k_support_coeffs(dd, d).weights();
    EXPECT_NEAR(wd[0], 1.0, 1e-14);
    EXPECT_THROW(k_support_coeffs(dd, d + 1), InvalidArgument);
  }
}

}  // namespace
}  // namespace qmc
