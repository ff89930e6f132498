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

#include "qmc/channel_oracle.hpp"

#include <cmath>
#include <string>

#include "qmc/errors.hpp"
#include "qmc/kernels.hpp"

namespace qmc {

double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double shannon_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p) s -= xlog2(v);
  return s;
}

namespace {

using Index = Eigen::Index;

std::vector<int> digit_sums(int d) {
  const std::size_t dim = ipow(d, d);
  std::vector<int> sums(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    int s = 0;
    for (std::size_t rest = i; rest > 0; rest /= static_cast<std::size_t>(d)) {
      s += static_cast<int>(rest % static_cast<std::size_t>(d));
    }
    sums[i] = s;
  }
  return sums;
}

// Index of the basis state with every digit moved by -m.
std::vector<std::size_t> global_shift(int d, int m) {
  const std::size_t dim = ipow(d, d);
  std::vector<std::size_t> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto digits = to_digits(i, d, d);
    for (int& v : digits) v = mod(v - m, d);
    out[i] = from_digits(digits, d);
  }
  return out;
}

void check_dims(const PauliProbTable& table, const Matrix& rho) {
  table.dim().require_dense();
  const auto dim = static_cast<Index>(table.dim().register_dim());
  if (rho.rows() != dim || rho.cols() != dim) {
    throw InvalidArgument("state dimension " + std::to_string(rho.rows()) + " does not match channel (d^d = " +
                          std::to_string(dim) + ")");
  }
}

}  // namespace

Matrix apply_memoryless(const PauliProbTable& table, const Matrix& rho) {
  check_dims(table, rho);
  const int d = table.d();
  const auto dim = static_cast<Index>(table.dim().register_dim());
  const Index blk = dim / d;

  // hat[m][delta] for the single-site channel.
  std::vector<std::vector<double>> hat(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d)));
  for (int m = 0; m < d; ++m) {
    for (int delta = 0; delta < d; ++delta) hat[m][delta] = table.phase_transform(m, delta);
  }
  // Moves the most significant digit to the least significant position.
  std::vector<Index> rot(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) rot[static_cast<std::size_t>(i)] = (i % blk) * d + i / blk;

  // The site channel is always applied to the leading digit, where rows with
  // equal leading digit form one contiguous run of length d^{d-1}. Rotating
  // the digits after each pass brings the next site to the front; after d
  // passes the original order is restored.
  Matrix cur = rho;
  Matrix next(dim, dim);
  const kernels::KernelTable& k = kernels::active();
  for (int site = 0; site < d; ++site) {
    next.setZero();
    for (Index j = 0; j < dim; ++j) {
      const int b = static_cast<int>(j / blk);
      const Index jlo = j % blk;
      for (int m = 0; m < d; ++m) {
        const Index src_col = mod(b - m, d) * blk + jlo;
        for (int a = 0; a < d; ++a) {
          const double w = hat[m][mod(a - b, d)];
          if (w == 0.0) continue;
          k.caxpy(static_cast<std::size_t>(blk), Complex(w, 0.0), &cur(mod(a - m, d) * blk, src_col), &next(a * blk, j));
        }
      }
    }
    for (Index j = 0; j < dim; ++j) {
      const Index rj = rot[static_cast<std::size_t>(j)];
      for (Index i = 0; i < dim; ++i) cur(rot[static_cast<std::size_t>(i)], rj) = next(i, j);
    }
  }
  return cur;
}

Matrix apply_correlated(const PauliProbTable& table, const Matrix& rho) {
  check_dims(table, rho);
  const int d = table.d();
  const auto dim = static_cast<Index>(table.dim().register_dim());
  const std::vector<int> sums = digit_sums(d);
  Matrix out = Matrix::Zero(dim, dim);
  for (int m = 0; m < d; ++m) {
    const std::vector<std::size_t> sh = global_shift(d, m);
    const double same = table.phase_transform(m, 0);
    const double diff = table.phase_transform(m, 1);
    for (Index j = 0; j < dim; ++j) {
      const Index sj = static_cast<Index>(sh[static_cast<std::size_t>(j)]);
      const int dj = sums[static_cast<std::size_t>(j)];
      for (Index i = 0; i < dim; ++i) {
        const double w = mod(sums[static_cast<std::size_t>(i)] - dj, d) == 0 ? same : diff;
        if (w == 0.0) continue;
        out(i, j) += w * rho(static_cast<Index>(sh[static_cast<std::size_t>(i)]), sj);
      }
    }
  }
  return out;
}

DensityMatrix apply_channel(const CorrelatedChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim()) throw InvalidArgument("state and channel have different d");
  const double mu = ch.mu();
  Matrix out;
  if (mu == 1.0) {
    out = apply_correlated(ch.table(), rho.matrix());
  } else if (mu == 0.0) {
    out = apply_memoryless(ch.table(), rho.matrix());
  } else {
    out = (1.0 - mu) * apply_memoryless(ch.table(), rho.matrix());
    out += mu * apply_correlated(ch.table(), rho.matrix());
  }
  return DensityMatrix::trusted(ch.dim(), std::move(out));
}

DensityMatrix apply_channel_kraus_sum(const CorrelatedChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim()) throw InvalidArgument("state and channel have different d");
  ch.dim().require_dense();
  Matrix out = Matrix::Zero(rho.size(), rho.size());
  for (const KrausTerm& term : kraus_terms(ch)) {
    if (term.weight == 0.0) continue;
    const Matrix a = kraus_operator(ch, term.sequence);
    out += a * rho.matrix() * a.adjoint();
  }
  return DensityMatrix::trusted(ch.dim(), std::move(out));
}

Matrix kraus_completeness(const CorrelatedChannel& ch) {
  ch.dim().require_dense();
  const auto dim = static_cast<Index>(ch.dim().register_dim());
  Matrix out = Matrix::Zero(dim, dim);
  for (const KrausTerm& term : kraus_terms(ch)) {
    if (term.weight == 0.0) continue;
    const Matrix a = kraus_operator(ch, term.sequence);
    out += a.adjoint() * a;
  }
  return out;
}

std::vector<double> spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("Hermitian eigensolver did not converge");
  std::vector<double> ev(static_cast<std::size_t>(es.eigenvalues().size()));
  for (std::size_t i = 0; i < ev.size(); ++i) {
    double v = es.eigenvalues()(static_cast<Index>(i));
    if (v < -1e-9) throw NumericError("density matrix has eigenvalue " + std::to_string(v));
    ev[i] = v < 0.0 ? 0.0 : v;
  }
  return ev;
}

double von_neumann_entropy(const DensityMatrix& rho) { return shannon_bits(spectrum(rho)); }

double fidelity(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) throw InvalidArgument("state and density matrix have different d");
  const Vector rho_psi = rho.matrix() * psi.amplitudes();
  const Complex f = kernels::dotc(std::span<const Complex>(psi.amplitudes().data(), psi.amplitudes().size()),
                                  std::span<const Complex>(rho_psi.data(), rho_psi.size()));
  return f.real();
}

StateVector EnsembleSpec::fiducial(QuditDim d) const {
  switch (family) {
    case Family::MaxEntangledBasis:
      return max_entangled(d, std::vector<int>(static_cast<std::size_t>(d.value() - 1), 0), 0);
    case Family::ProductBasis:
      return product_state(d, std::vector<int>(static_cast<std::size_t>(d.value()), 0));
    case Family::Alpha:
      return alpha_state(d, angle);
    case Family::Km:
      if (d.value() != 4) throw InvalidArgument("the KM state family is defined for d = 4 only");
      return km_state(angle);
    case Family::Diag:
      return diag_state(d, DiagonalCoeffs(coeffs));
  }
  throw InvalidArgument("unknown ensemble family");
}

std::vector<StateVector> EnsembleSpec::members(QuditDim d) const {
  const int dv = d.value();
  const std::size_t dim = d.register_dim();
  std::vector<StateVector> out;
  if (family == Family::MaxEntangledBasis) {
    const std::size_t n_l = ipow(dv, dv - 1);
    for (std::size_t li = 0; li < n_l; ++li) {
      const auto l = to_digits(li, dv, dv - 1);
      for (int s = 0; s < dv; ++s) out.push_back(max_entangled(d, l, s));
    }
    return out;
  }
  if (family == Family::ProductBasis) {
    for (std::size_t i = 0; i < dim; ++i) out.push_back(product_state(d, to_digits(i, dv, dv)));
    return out;
  }
  const Vector psi = fiducial(d).amplitudes();
  for (int n = 0; n < dv; ++n) {
    for (std::size_t mi = 0; mi < dim; ++mi) {
      const auto m = to_digits(mi, dv, dv);
      Vector v = Vector::Zero(static_cast<Index>(dim));
      for (std::size_t b = 0; b < dim; ++b) {
        auto digits = to_digits(b, dv, dv);
        for (int s = 0; s < dv; ++s) digits[s] = mod(digits[s] + m[s], dv);
        v(static_cast<Index>(from_digits(digits, dv))) =
            root_of_unity(dv, static_cast<long long>(n) * digits[0]) * psi(static_cast<Index>(b));
      }
      out.emplace_back(d, std::move(v));
    }
  }
  return out;
}

namespace {
// Entropy of a state that is usually diagonal (unital channel on I/D).
double entropy_maybe_diagonal(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  const Matrix off = m - Matrix(m.diagonal().asDiagonal());
  if (off.cwiseAbs().maxCoeff() <= 1e-14) {
    std::vector<double> diag(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) diag[static_cast<std::size_t>(i)] = m(i, i).real();
    return shannon_bits(diag);
  }
  return von_neumann_entropy(rho);
}
}  // namespace

MutualInfoResult holevo_mutual_info(const CorrelatedChannel& ch, const EnsembleSpec& ens) {
  const QuditDim d = ch.dim();
  const double first = entropy_maybe_diagonal(apply_channel(ch, DensityMatrix::maximally_mixed(d)));
  const DensityMatrix out = apply_channel(ch, to_density(ens.fiducial(d)));
  MutualInfoResult r;
  r.spectrum = spectrum(out);
  r.value = first - shannon_bits(r.spectrum);
  r.method = MutualInfoResult::Method::Oracle;
  return r;
}

MutualInfoResult holevo_direct_sum(const CorrelatedChannel& ch, const EnsembleSpec& ens) {
  const QuditDim d = ch.dim();
  const auto members = ens.members(d);
  const double prior = 1.0 / static_cast<double>(members.size());
  const auto dim = static_cast<Index>(d.register_dim());
  Matrix avg = Matrix::Zero(dim, dim);
  double mean_entropy = 0.0;
  MutualInfoResult r;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const DensityMatrix out = apply_channel(ch, to_density(members[i]));
    avg += prior * out.matrix();
    auto ev = spectrum(out);
    mean_entropy += prior * shannon_bits(ev);
    if (i == 0) r.spectrum = std::move(ev);
  }
  r.value = von_neumann_entropy(DensityMatrix::trusted(d, std::move(avg))) - mean_entropy;
  r.method = MutualInfoResult::Method::Oracle;
  return r;
}

DensityMatrix cnot_conjugate(const DensityMatrix& rho, bool inverse) {
  const int d = rho.dim().value();
  const std::size_t dim = rho.dim().register_dim();
  // perm[a] = index of C|a>.
  std::vector<Index> perm(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    auto digits = to_digits(a, d, d);
    for (int s = 1; s < d; ++s) digits[s] = mod(digits[s] + digits[0], d);
    const auto c = static_cast<Index>(from_digits(digits, d));
    if (inverse) {
      perm[static_cast<std::size_t>(c)] = static_cast<Index>(a);
    } else {
      perm[a] = c;
    }
  }
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (Index b = 0; b < m.cols(); ++b) {
    for (Index a = 0; a < m.rows(); ++a) out(a, b) = m(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  }
  return DensityMatrix::trusted(rho.dim(), std::move(out));
}

DensityMatrix twirl(const DensityMatrix& rho) {
  const int d = rho.dim().value();
  const std::size_t dim = rho.dim().register_dim();
  // avg[delta] = (1/d) sum_n w^{n delta}
  std::vector<Complex> avg(static_cast<std::size_t>(d));
  for (int delta = 0; delta < d; ++delta) {
    Complex acc = 0.0;
    for (int n = 0; n < d; ++n) acc += root_of_unity(d, static_cast<long long>(n) * delta);
    avg[static_cast<std::size_t>(delta)] = acc / static_cast<double>(d);
  }
  std::vector<std::vector<int>> digits(dim);
  for (std::size_t i = 0; i < dim; ++i) digits[i] = to_digits(i, d, d);
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      Complex f = 1.0;
      for (int s = 0; s < d; ++s) f *= avg[static_cast<std::size_t>(mod(digits[i][s] - digits[j][s], d))];
      out(static_cast<Index>(i), static_cast<Index>(j)) = f * m(static_cast<Index>(i), static_cast<Index>(j));
    }
  }
  return DensityMatrix::trusted(rho.dim(), std::move(out));
}

}  // namespace qmc
