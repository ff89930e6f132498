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

#include "qmc/state_factory.hpp"

#include <cmath>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

StateVector::StateVector(QuditDim d, Vector amplitudes) : d_(d), v_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(v_.size()) != d.register_dim()) {
    throw InvalidArgument("state vector length " + std::to_string(v_.size()) + " does not match d^d");
  }
  if (std::abs(v_.norm() - 1.0) > 1e-12) throw InvalidArgument("state vector is not normalized");
}

DiagonalCoeffs::DiagonalCoeffs(std::vector<Complex> a) : a_(std::move(a)) {
  if (a_.size() < 2) throw InvalidArgument("need at least two diagonal coefficients");
  double norm2 = 0.0;
  for (const Complex& z : a_) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw InvalidArgument("diagonal coefficients have squared norm " + std::to_string(norm2));
  }
}

std::vector<double> DiagonalCoeffs::weights() const {
  std::vector<double> w(a_.size());
  for (std::size_t j = 0; j < a_.size(); ++j) w[j] = std::norm(a_[j]);
  return w;
}

namespace {
void check_labels(QuditDim d, const std::vector<int>& labels, std::size_t expected, const char* what) {
  if (labels.size() != expected) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(expected) + " labels");
  }
  for (int v : labels) {
    if (v < 0 || v >= d.value()) throw InvalidArgument(std::string(what) + ": label out of range");
  }
}
}  // namespace

StateVector max_entangled(QuditDim d, const std::vector<int>& l, int s) {
  const int dv = d.value();
  check_labels(d, l, static_cast<std::size_t>(dv - 1), "max_entangled");
  if (s < 0 || s >= dv) throw InvalidArgument("max_entangled: phase label out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d.register_dim()));
  const double amp = 1.0 / std::sqrt(static_cast<double>(dv));
  std::vector<int> digits(static_cast<std::size_t>(dv));
  for (int j = 0; j < dv; ++j) {
    digits[0] = j;
    for (int i = 1; i < dv; ++i) digits[static_cast<std::size_t>(i)] = mod(j + l[static_cast<std::size_t>(i - 1)], dv);
    v(static_cast<Eigen::Index>(from_digits(digits, dv))) = amp * root_of_unity(dv, static_cast<long long>(j) * s);
  }
  return StateVector(d, std::move(v));
}

StateVector product_state(QuditDim d, const std::vector<int>& s) {
  check_labels(d, s, static_cast<std::size_t>(d.value()), "product_state");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d.register_dim()));
  v(static_cast<Eigen::Index>(from_digits(s, d.value()))) = 1.0;
  return StateVector(d, std::move(v));
}

DiagonalCoeffs alpha_coeffs(QuditDim d, double alpha) {
  const int dv = d.value();
  std::vector<Complex> a(static_cast<std::size_t>(dv), std::sin(alpha) / std::sqrt(dv - 1.0));
  a[0] = std::cos(alpha);
  return DiagonalCoeffs(std::move(a));
}

DiagonalCoeffs km_coeffs(double theta) {
  const Complex e = std::polar(1.0, theta);
  const Complex a1 = 0.5 * e * std::sin(theta);
  return DiagonalCoeffs({0.5 * (1.0 + e * std::cos(theta)), a1, Complex(0, 1) * a1, -a1});
}

DiagonalCoeffs k_support_coeffs(QuditDim d, int k) {
  const int dv = d.value();
  if (k < 1 || k > dv) throw InvalidArgument("k-support state needs 1 <= k <= d");
  std::vector<Complex> a(static_cast<std::size_t>(dv));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dv) * k);
  for (int j = 0; j < dv; ++j) {
    Complex acc = 0.0;
    for (int f = 0; f < k; ++f) acc += root_of_unity(dv, static_cast<long long>(j) * f);
    a[static_cast<std::size_t>(j)] = scale * acc;
  }
  return DiagonalCoeffs(std::move(a));
}

StateVector diag_state(QuditDim d, const DiagonalCoeffs& coeffs) {
  const int dv = d.value();
  if (coeffs.size() != dv) throw InvalidArgument("diag_state: need d coefficients");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d.register_dim()));
  std::vector<int> digits(static_cast<std::size_t>(dv));
  for (int j = 0; j < dv; ++j) {
    std::fill(digits.begin(), digits.end(), j);
    v(static_cast<Eigen::Index>(from_digits(digits, dv))) = coeffs[j];
  }
  // Renormalize: the coefficients are only checked to 1e-9.
  v /= v.norm();
  return StateVector(d, std::move(v));
}

StateVector alpha_state(QuditDim d, double alpha) { return diag_state(d, alpha_coeffs(d, alpha)); }

StateVector km_state(double theta) { return diag_state(QuditDim(4), km_coeffs(theta)); }

double angle_from_cos2(double cos2) {
  if (!(cos2 >= 0.0 && cos2 <= 1.0)) throw InvalidArgument("cos^2 must lie in [0, 1]");
  return std::acos(std::sqrt(cos2));
}

DensityMatrix to_density(const StateVector& psi) {
  const Vector& v = psi.amplitudes();
  return DensityMatrix::trusted(psi.dim(), v * v.adjoint());
}

Matrix single_site_marginal(const DensityMatrix& rho, int site) {
  const int dv = rho.dim().value();
  if (site < 0 || site >= dv) throw InvalidArgument("site out of range");
  const std::size_t stride = ipow(dv, dv - 1 - site);
  const std::size_t dim = rho.dim().register_dim();
  Matrix out = Matrix::Zero(dv, dv);
  const Matrix& m = rho.matrix();
  for (std::size_t i = 0; i < dim; ++i) {
    const int a = static_cast<int>((i / stride) % static_cast<std::size_t>(dv));
    const std::size_t rest = i - static_cast<std::size_t>(a) * stride;
    for (int b = 0; b < dv; ++b) {
      const std::size_t j = rest + static_cast<std::size_t>(b) * stride;
      out(a, b) += m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

}  // namespace qmc
