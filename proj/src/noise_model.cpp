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

#include "qmc/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmc/errors.hpp"

namespace qmc {

std::string_view family_name(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::General:
      return "general";
    case ChannelFamily::QuasiClassical:
      return "quasi-classical";
    case ChannelFamily::Depolarizing:
      return "depolarizing";
    case ChannelFamily::HighError:
      return "high-error";
  }
  return "general";
}

ChannelFamily parse_family(std::string_view name) {
  for (auto f : {ChannelFamily::General, ChannelFamily::QuasiClassical, ChannelFamily::Depolarizing,
                 ChannelFamily::HighError}) {
    if (family_name(f) == name) return f;
  }
  throw InvalidArgument("unknown channel family '" + std::string(name) + "'");
}

namespace {
// Values computed as 1 - d*p can land a few ulps below zero.
double tidy_probability(double v, const char* name) {
  if (std::isnan(v) || v < -1e-14 || v > 1.0 + 1e-14) {
    throw InvalidArgument(std::string("probability ") + name + " = " + std::to_string(v) + " outside [0, 1]");
  }
  return std::clamp(v, 0.0, 1.0);
}
}  // namespace

PauliProbTable::PauliProbTable(QuditDim d, double p, double q, double r, double t, ChannelFamily family)
    : d_(d),
      p_(tidy_probability(p, "p")),
      q_(tidy_probability(q, "q")),
      r_(tidy_probability(r, "r")),
      t_(tidy_probability(t, "t")),
      family_(family) {
  const double dm1 = d.value() - 1.0;
  const double total = p_ + dm1 * q_ + dm1 * r_ + dm1 * dm1 * t_;
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidArgument("probability table is not normalized: p+(d-1)q+(d-1)r+(d-1)^2 t = " +
                          std::to_string(total));
  }
}

double PauliProbTable::entry(int m, int n) const {
  const int dv = d();
  if (m < 0 || m >= dv || n < 0 || n >= dv) throw InvalidArgument("table entry index out of range");
  if (m == 0) return n == 0 ? p_ : q_;
  return n == 0 ? r_ : t_;
}

double PauliProbTable::no_shift_marginal() const { return p_ + (d() - 1) * q_; }
double PauliProbTable::shift_marginal() const { return r_ + (d() - 1) * t_; }

double PauliProbTable::phase_transform(int m, int delta) const {
  const double head = m == 0 ? p_ : r_;
  const double tail = m == 0 ? q_ : t_;
  return mod(delta, d()) == 0 ? head + (d() - 1) * tail : head - tail;
}

PauliProbTable quasi_classical(QuditDim d, double p) {
  const double dv = d.value();
  if (!(p >= 0.0 && p <= 1.0 / dv + 1e-15)) {
    throw InvalidArgument("quasi-classical channel needs 0 <= p <= 1/d");
  }
  const double rt = (1.0 - dv * p) / (dv * (dv - 1.0));
  return PauliProbTable(d, p, p, rt, rt, ChannelFamily::QuasiClassical);
}

PauliProbTable depolarizing(QuditDim d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("depolarizing channel needs 0 <= p <= 1");
  const double dv = d.value();
  const double qrt = (1.0 - p) / (dv * dv - 1.0);
  return PauliProbTable(d, p, qrt, qrt, qrt, ChannelFamily::Depolarizing);
}

PauliProbTable high_error(QuditDim d) {
  const double e = 1.0 / (static_cast<double>(d.value()) * d.value());
  return PauliProbTable(d, e, e, e, e, ChannelFamily::HighError);
}

PauliProbTable make_table(ChannelFamily family, QuditDim d, double p, double q, double r, double t) {
  switch (family) {
    case ChannelFamily::QuasiClassical:
      return quasi_classical(d, p);
    case ChannelFamily::Depolarizing:
      return depolarizing(d, p);
    case ChannelFamily::HighError:
      return high_error(d);
    case ChannelFamily::General:
      break;
  }
  return PauliProbTable(d, p, q, r, t, ChannelFamily::General);
}

CorrelatedChannel::CorrelatedChannel(PauliProbTable table, double mu) : table_(std::move(table)), mu_(mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvalidArgument("memory degree mu must lie in [0, 1]");
}

double kraus_weight(const CorrelatedChannel& ch, const std::vector<PauliIndex>& seq) {
  if (static_cast<int>(seq.size()) != ch.n_uses()) throw InvalidArgument("Kraus label sequence has wrong length");
  double prod = 1.0;
  bool constant = true;
  for (const PauliIndex& idx : seq) {
    prod *= ch.table().entry(idx.shift, idx.phase);
    constant = constant && idx == seq.front();
  }
  const double mu = ch.mu();
  double w = (1.0 - mu) * prod;
  if (constant) w += mu * ch.table().entry(seq.front().shift, seq.front().phase);
  return w;
}

Matrix kraus_operator(const CorrelatedChannel& ch, const std::vector<PauliIndex>& seq) {
  std::vector<Matrix> factors;
  factors.reserve(seq.size());
  for (const PauliIndex& idx : seq) factors.push_back(gen_pauli(ch.dim(), idx));
  return std::sqrt(kraus_weight(ch, seq)) * kron_all(factors);
}

KrausTermRange::KrausTermRange(const CorrelatedChannel& ch) : ch_(&ch) {
  const int d = ch.dim().value();
  count_ = 1;
  for (int i = 0; i < 2 * d; ++i) count_ *= static_cast<std::uint64_t>(d);
}

KrausTermRange::iterator KrausTermRange::begin() const { return iterator(ch_, 0, count_); }
KrausTermRange::iterator KrausTermRange::end() const { return iterator(ch_, count_, count_); }

KrausTermRange::iterator::iterator(const CorrelatedChannel* ch, std::uint64_t pos, std::uint64_t end)
    : ch_(ch), pos_(pos), end_(end) {
  if (pos_ < end_) load();
}

KrausTermRange::iterator& KrausTermRange::iterator::operator++() {
  ++pos_;
  if (pos_ < end_) load();
  return *this;
}

void KrausTermRange::iterator::load() {
  const int d = ch_->dim().value();
  term_.sequence.resize(static_cast<std::size_t>(d));
  std::uint64_t rest = pos_;
  for (int i = d - 1; i >= 0; --i) {
    PauliIndex& idx = term_.sequence[static_cast<std::size_t>(i)];
    idx.phase = static_cast<int>(rest % static_cast<std::uint64_t>(d));
    rest /= static_cast<std::uint64_t>(d);
    idx.shift = static_cast<int>(rest % static_cast<std::uint64_t>(d));
    rest /= static_cast<std::uint64_t>(d);
  }
  term_.weight = kraus_weight(*ch_, term_.sequence);
}

}  // namespace qmc
