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

#include "qmc/closed_forms.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qmc/errors.hpp"
#include "qmc/kernels.hpp"

namespace qmc {

namespace {

// Symbols: xm = p - q, ym = r - t (phase-averaged row contrasts);
// marg0 = p + (d-1)q, marg1 = r + (d-1)t (single-use no-shift and per-shift
// marginals). The ansatz formulas work with a pair (a, b) of marginals scaled
// per family: a = dp, b = dr for the quasi-classical table and
// a = p + (d-1)q, b = dq for the depolarizing one.

double ipowd(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double log2d(int d) { return std::log2(static_cast<double>(d)); }

// Checks that a spectrum (with multiplicities already expanded) is a
// probability vector. A failure here is how a wrong formula shows up.
void check_spectrum(std::vector<double>& spec, const char* what) {
  double sum = 0.0;
  for (double& v : spec) {
    if (!(v >= -1e-10 && v <= 1.0 + 1e-10)) {
      throw NumericError(std::string(what) + ": eigenvalue " + std::to_string(v) + " outside [0, 1]");
    }
    if (v < 0.0) v = 0.0;
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw NumericError(std::string(what) + ": eigenvalues sum to " + std::to_string(sum));
  }
}

MutualInfoResult finish(int d, std::vector<double> spec, const char* what) {
  check_spectrum(spec, what);
  MutualInfoResult r;
  r.value = d * log2d(d) - shannon_bits(spec);
  r.spectrum = std::move(spec);
  r.method = MutualInfoResult::Method::ClosedForm;
  return r;
}

// Occurrence count of each value in k (values in [0, d)).
std::vector<int> counts(const std::vector<int>& k, std::size_t from, int d) {
  std::vector<int> c(static_cast<std::size_t>(d), 0);
  for (std::size_t i = from; i < k.size(); ++i) ++c[static_cast<std::size_t>(k[i])];
  return c;
}

// Diagonal part for a GHZ-type input. inner_b is the constant inside the
// bracketed tensor powers; equal to b in the corrected reading.
std::vector<double> second_part(int d, double a, double b, double inner_b, double mu, const std::vector<double>& w) {
  const std::size_t dim = ipow(d, d);
  const double amb = a - b;
  std::vector<double> out(dim, 0.0);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const auto k = to_digits(idx, d, d);
    const auto c = counts(k, 1, d);
    const int k0 = k[0];
    auto prod = [&](int j) {
      const int cj = c[static_cast<std::size_t>(j)];
      return ipowd(amb + inner_b, cj) * ipowd(inner_b, d - 1 - cj);
    };
    double v = (1.0 - mu) * amb * w[static_cast<std::size_t>(k0)] * prod(0);
    for (int j = 0; j < d; ++j) v += (1.0 - mu) * b * w[static_cast<std::size_t>(mod(k0 + j, d))] * prod(j);
    if (c[0] == d - 1) {
      v -= (1.0 - mu) * ((ipowd(a, d) - ipowd(b, d)) * w[static_cast<std::size_t>(k0)] + ipowd(b, d));
      // Exactly zero in the corrected reading: this slot belongs to the block.
      if (inner_b == b) v = 0.0;
    }
    out[idx] = v;
  }
  return out;
}

// Spectrum of a GHZ-type output: block eigenvalues plus the diagonal part
// without its d block slots.
std::vector<double> ghz_spectrum(int d, std::vector<double> block, const std::vector<double>& second) {
  const std::size_t stride = ipow(d, d - 1);
  for (std::size_t idx = 0; idx < second.size(); ++idx) {
    if (idx % stride == 0) continue;
    block.push_back(second[idx]);
  }
  return block;
}

struct Marginals {
  double a;
  double b;
};

Marginals qcd_marginals(const PauliProbTable& t, Reading reading) {
  const double d = t.d();
  return {d * t.p(), reading.stated(Erratum::QuasiClassicalB) ? d * t.q() : d * t.r()};
}

Marginals dep_marginals(const PauliProbTable& t) { return {t.p() + (t.d() - 1) * t.q(), t.d() * t.q()}; }

double dep_off(int d, Marginals m, double mu) { return (1.0 - mu) * ipowd(m.a - m.b, d) + mu * m.a; }

struct AlphaElements {
  double t, s, c, r;
};

AlphaElements alpha_elements(int d, Marginals m, double off, double mu, double alpha) {
  const double a = m.a, b = m.b;
  const double c0 = std::cos(alpha);
  const double s1 = std::sin(alpha) / std::sqrt(d - 1.0);
  const double adbd = ipowd(a, d) - ipowd(b, d);
  AlphaElements e;
  e.t = (1.0 - mu) * (adbd * c0 * c0 + ipowd(b, d)) + mu * ((a - b) * c0 * c0 + b);
  e.s = off * c0 * s1 + mu * b * (s1 * s1 * (d - 2) + c0 * s1);
  e.c = (1.0 - mu) * (adbd * s1 * s1 + ipowd(b, d)) + mu * ((a - b) * s1 * s1 + b);
  e.r = off * s1 * s1 + mu * b * (s1 * s1 * (d - 3) + 2.0 * c0 * s1);
  return e;
}

std::vector<double> alpha_block_eigs(int d, const AlphaElements& e, Reading reading) {
  const double t = e.t, s = e.s, c = e.c, r = e.r;
  double disc;
  if (reading.stated(Erratum::GhzEigenvalues)) {
    disc = t * t + 4.0 * (d - 1) * s - 2.0 * t * c + c * c - 2.0 * (d - 2) * (c - t) * r + (d - 2.0) * (d - 2) * r * r;
  } else {
    const double u = t - c - (d - 2) * r;
    disc = u * u + 4.0 * (d - 1) * s * s;
  }
  if (disc < 0.0) throw NumericError("block eigenvalues: negative discriminant " + std::to_string(disc));
  const double root = std::sqrt(disc);
  const double mid = t + c + (d - 2) * r;
  std::vector<double> eigs(static_cast<std::size_t>(d - 2), c - r);
  eigs.push_back(0.5 * (mid + root));
  eigs.push_back(0.5 * (mid - root));
  return eigs;
}

std::vector<double> alpha_weights(int d, double alpha) {
  std::vector<double> w(static_cast<std::size_t>(d), std::sin(alpha) * std::sin(alpha) / (d - 1.0));
  w[0] = std::cos(alpha) * std::cos(alpha);
  return w;
}

std::vector<double> km_weights(double theta) {
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  return {(1.0 + 3.0 * c2) / 4.0, s2 / 4.0, s2 / 4.0, s2 / 4.0};
}

std::vector<double> km_block_eigs(double w, double v, double z, double f, Reading reading) {
  if (reading.stated(Erratum::KmEigenvalues)) {
    const double disc = 3 * v * v + 4 * w * w - 2 * w * z + z * z;
    if (disc < 0.0) throw NumericError("KM eigenvalues: negative discriminant");
    const double root = std::sqrt(disc);
    const double l0 = -w + z + f;
    return {l0, l0, w + 2 * z + f + root, w + 2 * z + f - root};
  }
  const double disc = 3 * v * v + 4 * w * w - 4 * w * z + 4 * z * z;
  if (disc < 0.0) throw NumericError("KM eigenvalues: negative discriminant");
  const double root = std::sqrt(disc);
  const double l0 = f - z - w;
  return {l0, l0, f + z + w + root, f + z + w - root};
}

void km_zf(Marginals m, double mu, double theta, double& z, double& f) {
  const double a = m.a, b = m.b;
  const double a4b4 = ipowd(a, 4) - ipowd(b, 4);
  const double c = std::cos(theta);
  z = (mu * (a - b) / 4.0 + (1.0 - mu) * a4b4 / 4.0) * c * c;
  f = mu * ((a - b) / 4.0 + b) + (1.0 - mu) * (a4b4 / 4.0 + ipowd(b, 4));
}

}  // namespace

double fid_max_entangled(const PauliProbTable& table, double mu, Reading reading) {
  const int d = table.d();
  const double p = table.p(), q = table.q(), r = table.r(), t = table.t();
  const double xm = p - q, x0 = xm + q * d;
  const double ym = r - t, y0 = ym + t * d;
  const double x0p = ipowd(x0, d - 1), y0p = ipowd(y0, d - 1);
  const double cross = reading.stated(Erratum::FidelityCrossTerm)
                           ? t * d * (d - 1) * y0p * ipowd(t * d, d) * (d - 1.0) * (d - 1)
                           : t * d * d * (d - 1) * y0p;
  const double lm = (1.0 - mu);
  return lm / d * xm * (ipowd(xm, d - 1) * (d - 1) + x0p) +
         lm / d * ym * (d - 1) * (ipowd(ym, d - 1) * (d - 1) + y0p) +
         lm / (double(d) * d) * (t * d * d * x0p + cross) + lm * (q - t) * x0p + mu;
}

double fid_product(const PauliProbTable& table, double mu) {
  const double x = table.no_shift_marginal();
  return (1.0 - mu) * ipowd(x, table.d()) + mu * x;
}

ThresholdResult fid_threshold_mu(double p, double q, int d) {
  if (d < 2) throw InvalidArgument("threshold needs d >= 2");
  if (!(p >= 0 && p <= 1 && q >= 0 && q <= 1)) throw InvalidArgument("threshold needs p, q in [0, 1]");
  if (std::abs(p + (double(d) * d - 1) * q - 1.0) > 1e-12) {
    throw InvalidArgument("threshold is defined for q = r = t tables: p + (d^2-1) q must be 1");
  }
  const double x = p - q + q * d;
  const double num = (d - 1.0) / d * (ipowd(x, d) - ipowd(p - q, d) - ipowd(q * d, d));
  const double den = 1.0 - x + num;
  ThresholdResult res;
  if (std::abs(den) <= 1e-14) {
    res.kind = ThresholdResult::Kind::Degenerate;
    res.mu = std::nan("");
    return res;
  }
  res.mu = num / den;
  res.kind = (res.mu >= 0.0 && res.mu <= 1.0) ? ThresholdResult::Kind::Value : ThresholdResult::Kind::OutOfRange;
  return res;
}

MutualInfoResult mi_max_entangled(const PauliProbTable& table, double mu, Reading reading) {
  const int d = table.d();
  const double p = table.p(), q = table.q(), r = table.r(), t = table.t();
  const double x = p - q, y = r - t;
  const double big_x = x - y + d * (q - t), big_y = y + d * t;
  const double lm = (1.0 - mu) / d;
  const bool stray_power = reading.stated(Erratum::StrayTensorPower);
  const std::size_t n_blocks = ipow(d, d - 1);
  std::vector<double> spec;
  spec.reserve(n_blocks * static_cast<std::size_t>(d));
  for (std::size_t bi = 0; bi < n_blocks; ++bi) {
    const auto k = to_digits(bi, d, d - 1);
    const auto c = counts(k, 0, d);
    auto pxy = [&](int j) { return ipowd(x, c[j]) * ipowd(y, d - 1 - c[j]); };
    auto pXY = [&](int j) { return ipowd(big_x + big_y, c[j]) * ipowd(big_y, d - 1 - c[j]); };
    double sum_xy = 0.0, sum_XY = 0.0;
    for (int j = 0; j < d; ++j) {
      sum_xy += pxy(j);
      sum_XY += pXY(j);
    }
    const double third = stray_power ? ipowd(pXY(0), d - 1) : pXY(0);
    const double coef_a = lm * (-(x - y) * pxy(0) - y * sum_xy + big_x * third + big_y * sum_XY);
    const double coef_b = lm * (x * pxy(0) + y * (sum_xy - pxy(0))) + (bi == 0 ? mu / d : 0.0);
    spec.push_back(d * coef_b + coef_a);
    for (int l = 1; l < d; ++l) spec.push_back(coef_a);
  }
  return finish(d, std::move(spec), "maximally entangled mutual information");
}

MutualInfoResult mi_product(const PauliProbTable& table, double mu, Reading reading) {
  const int d = table.d();
  double m0, m1;
  if (reading.stated(Erratum::ProductMarginals)) {
    // x = p + (d-1)q, y = qd, substituted into x + qd and y + dt.
    m0 = table.p() + (d - 1) * table.q() + table.q() * d;
    m1 = table.q() * d + d * table.t();
  } else {
    m0 = table.no_shift_marginal();
    m1 = table.shift_marginal();
  }
  std::vector<double> spec;
  spec.push_back((1.0 - mu) * ipowd(m0, d) + mu * m0);
  spec.insert(spec.end(), static_cast<std::size_t>(d - 1), (1.0 - mu) * ipowd(m1, d) + mu * m1);
  for (int k = 0; k < d; ++k) {
    double binom = 1.0;
    for (int i = 0; i < k; ++i) binom = binom * (d - i) / (i + 1);
    const double mult = ipowd(d - 1.0, d - k) * binom - (k == 0 ? d - 1.0 : 0.0);
    const double v = (1.0 - mu) * ipowd(m0, k) * ipowd(m1, d - k);
    spec.insert(spec.end(), static_cast<std::size_t>(std::llround(mult)), v);
  }
  return finish(d, std::move(spec), "product mutual information");
}

MutualInfoResult mi_qcd_alpha(int d, double p, double mu, double alpha, Reading reading) {
  const PauliProbTable table = quasi_classical(QuditDim(d), p);
  const Marginals m = qcd_marginals(table, reading);
  const AlphaElements e = alpha_elements(d, m, mu * m.a, mu, alpha);
  auto spec = ghz_spectrum(d, alpha_block_eigs(d, e, reading), second_part(d, m.a, m.b, m.b, mu, alpha_weights(d, alpha)));
  return finish(d, std::move(spec), "quasi-classical alpha mutual information");
}

MutualInfoResult mi_dep_alpha(int d, double p, double mu, double alpha, Reading reading) {
  const PauliProbTable table = depolarizing(QuditDim(d), p);
  const Marginals m = dep_marginals(table);
  AlphaElements e = alpha_elements(d, m, dep_off(d, m, mu), mu, alpha);
  if (reading.stated(Erratum::DepolarizingT)) {
    const double x = m.a, y = m.b;
    const double c2 = std::cos(alpha) * std::cos(alpha);
    e.t = ((1.0 - mu) * (x - y) + mu * x) * c2 + mu * y * (1.0 - c2) +
          (1.0 - mu) * (ipowd(x, d) - ipowd(y, d) - ipowd(x - y, d)) * c2 + (1.0 - mu) * ipowd(y, d);
  }
  auto spec = ghz_spectrum(d, alpha_block_eigs(d, e, reading), second_part(d, m.a, m.b, m.b, mu, alpha_weights(d, alpha)));
  return finish(d, std::move(spec), "depolarizing alpha mutual information");
}

MutualInfoResult mi_qcd_km(double p, double mu, double theta, Reading reading) {
  const PauliProbTable table = quasi_classical(QuditDim(4), p);
  const Marginals m = qcd_marginals(table, reading);
  const double cs = std::cos(theta) * std::sin(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  double z, f;
  km_zf(m, mu, theta, z, f);
  const double w = mu / 4.0 * s2;
  const double v = mu * (m.a - m.b) / 2.0 * cs;
  auto spec = ghz_spectrum(4, km_block_eigs(w, v, z, f, reading), second_part(4, m.a, m.b, m.b, mu, km_weights(theta)));
  return finish(4, std::move(spec), "quasi-classical KM mutual information");
}

MutualInfoResult mi_dep_km(double p, double mu, double theta, Reading reading) {
  const PauliProbTable table = depolarizing(QuditDim(4), p);
  const Marginals m = dep_marginals(table);
  const double cs = std::cos(theta) * std::sin(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  double z, f;
  km_zf(m, mu, theta, z, f);
  const double k4 = reading.stated(Erratum::DepolarizingKmWV) ? ipowd(m.a, 4) - ipowd(m.b, 4) : ipowd(m.a - m.b, 4);
  const double w = 0.25 * ((1.0 - mu) * k4 + mu) * s2;
  const double v = 0.5 * ((1.0 - mu) * k4 + mu * (m.a - m.b)) * cs;
  auto spec = ghz_spectrum(4, km_block_eigs(w, v, z, f, reading), second_part(4, m.a, m.b, m.b, mu, km_weights(theta)));
  return finish(4, std::move(spec), "depolarizing KM mutual information");
}

MutualInfoResult mi_high_error_k(int d, double mu, int k) {
  if (d < 2) throw InvalidArgument("d must be >= 2");
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("mu must lie in [0, 1]");
  const std::size_t dim = ipow(d, d);
  if (k < 1 || static_cast<std::size_t>(k) > dim) throw InvalidArgument("k must lie in [1, d^d]");
  const double base = (1.0 - mu) / static_cast<double>(dim);
  std::vector<double> spec(static_cast<std::size_t>(k), base + mu / k);
  spec.insert(spec.end(), dim - static_cast<std::size_t>(k), base);
  return finish(d, std::move(spec), "high-error k-support mutual information");
}

MutualInfoResult mi_high_error_max_entangled(int d, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("mu must lie in [0, 1]");
  const double dd = static_cast<double>(ipow(d, d));
  const double base = (1.0 - mu) / dd;
  MutualInfoResult r;
  r.value = d * log2d(d) + (1.0 - 1.0 / dd) * (1.0 - mu) * (base > 0 ? std::log2(base) : 0.0) + xlog2(base + mu);
  r.spectrum.assign(static_cast<std::size_t>(dd) - 1, base);
  r.spectrum.push_back(base + mu);
  r.method = MutualInfoResult::Method::ClosedForm;
  return r;
}

MutualInfoResult mi_high_error_product(int d, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("mu must lie in [0, 1]");
  const double dd = static_cast<double>(ipow(d, d));
  const double base = (1.0 - mu) / dd;
  MutualInfoResult r;
  r.value = d * log2d(d) + ((1.0 - mu) * d / dd + mu) * std::log2(base + mu / d) +
            (1.0 - d / dd) * (1.0 - mu) * (base > 0 ? std::log2(base) : 0.0);
  r.spectrum.assign(static_cast<std::size_t>(dd) - static_cast<std::size_t>(d), base);
  r.spectrum.insert(r.spectrum.end(), static_cast<std::size_t>(d), base + mu / d);
  r.method = MutualInfoResult::Method::ClosedForm;
  return r;
}

double purity(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  return kernels::sum_abs2(std::span<const Complex>(m.data(), static_cast<std::size_t>(m.size())));
}

double purity_high_error(int d, double mu, double sigma_purity) {
  const double dd = static_cast<double>(ipow(d, d));
  return (1.0 - mu) * (1.0 - mu) / dd + mu * mu * sigma_purity + 2.0 * mu * (1.0 - mu) / dd;
}

namespace {
// coh * A A^dagger + shift * sum_m S^m A A^dagger S^-m + diag(diag_coef |A|^2 + const_coef).
Matrix block_from_parts(int d, double coh, double shift, double diag_coef, double const_coef,
                        const std::vector<Complex>& coeffs) {
  if (static_cast<int>(coeffs.size()) != d) throw InvalidArgument("need d coefficients");
  Matrix e = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    for (int kp = 0; kp < d; ++kp) {
      Complex v = coh * coeffs[k] * std::conj(coeffs[kp]);
      for (int m = 1; m < d; ++m) v += shift * coeffs[mod(k - m, d)] * std::conj(coeffs[mod(kp - m, d)]);
      if (k == kp) v += diag_coef * std::norm(coeffs[k]) + const_coef;
      e(k, kp) = v;
    }
  }
  return e;
}
}  // namespace

Matrix ghz_first_block(int d, double a, double b, double off, double mu, const std::vector<Complex>& coeffs) {
  const double diag_coef = (1.0 - mu) * (ipowd(a, d) - ipowd(b, d)) + mu * a - off;
  return block_from_parts(d, off, mu * b, diag_coef, (1.0 - mu) * ipowd(b, d), coeffs);
}

std::vector<double> ghz_second_part(int d, double a, double b, double mu, const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != d) throw InvalidArgument("need d weights");
  return second_part(d, a, b, b, mu, weights);
}

Matrix ghz_block_output(int d, double a, double b, double off, double mu, const std::vector<Complex>& coeffs,
                        Reading reading) {
  const auto dim = static_cast<Eigen::Index>(ipow(d, d));
  const auto stride = static_cast<Eigen::Index>(ipow(d, d - 1));
  Matrix out = Matrix::Zero(dim, dim);
  std::vector<double> w(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) w[j] = std::norm(coeffs[j]);

  const double diag_coef = (1.0 - mu) * (ipowd(a, d) - ipowd(b, d)) + mu * a - off;
  // As printed, the coherent correlated terms carry an extra factor a.
  const double scale = reading.stated(Erratum::OutputMatrixPrefactor) ? a : 1.0;
  const Matrix block = block_from_parts(d, scale * off, scale * mu * b, diag_coef, (1.0 - mu) * ipowd(b, d), coeffs);
  const double inner_b = reading.stated(Erratum::OutputMatrixStrayFactor) ? (1.0 - mu) * b : b;
  const auto second = second_part(d, a, b, inner_b, mu, w);
  for (Eigen::Index i = 0; i < dim; ++i) out(i, i) = second[static_cast<std::size_t>(i)];
  for (int k = 0; k < d; ++k) {
    for (int kp = 0; kp < d; ++kp) out(k * stride, kp * stride) += block(k, kp);
  }
  return out;
}

}  // namespace qmc
