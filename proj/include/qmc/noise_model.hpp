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

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmc/qudit_algebra.hpp"

namespace qmc {

enum class ChannelFamily { General, QuasiClassical, Depolarizing, HighError };

std::string_view family_name(ChannelFamily f);
ChannelFamily parse_family(std::string_view name);

/// Error-probability table: P_00 = p, P_0n = q, P_m0 = r, P_mn = t.
class PauliProbTable {
 public:
  PauliProbTable(QuditDim d, double p, double q, double r, double t,
                 ChannelFamily family = ChannelFamily::General);

  QuditDim dim() const { return d_; }
  int d() const { return d_.value(); }
  double p() const { return p_; }
  double q() const { return q_; }
  double r() const { return r_; }
  double t() const { return t_; }
  ChannelFamily family() const { return family_; }

  double entry(int m, int n) const;

  /// Probability that a single use applies no shift: p + (d-1)q.
  double no_shift_marginal() const;
  /// Probability of one particular nonzero shift: r + (d-1)t.
  double shift_marginal() const;

  /// sum_n P_{m,n} w^{n delta}. Real because each row is constant off n=0.
  double phase_transform(int m, int delta) const;

 private:
  QuditDim d_;
  double p_, q_, r_, t_;
  ChannelFamily family_;
};

PauliProbTable quasi_classical(QuditDim d, double p);
PauliProbTable depolarizing(QuditDim d, double p);
PauliProbTable high_error(QuditDim d);
/// Builds a table from family + parameters; q, r, t are only read for General.
PauliProbTable make_table(ChannelFamily family, QuditDim d, double p, double q = 0, double r = 0, double t = 0);

/// d uses of the table with memory degree mu.
class CorrelatedChannel {
 public:
  CorrelatedChannel(PauliProbTable table, double mu);

  const PauliProbTable& table() const { return table_; }
  double mu() const { return mu_; }
  QuditDim dim() const { return table_.dim(); }
  int n_uses() const { return table_.d(); }

 private:
  PauliProbTable table_;
  double mu_;
};

struct KrausTerm {
  double weight = 0.0;
  std::vector<PauliIndex> sequence;
};

/// Weight of the Kraus term with the given per-use Pauli labels.
double kraus_weight(const CorrelatedChannel& ch, const std::vector<PauliIndex>& seq);

/// sqrt(weight) times the tensor product of the labelled Paulis.
Matrix kraus_operator(const CorrelatedChannel& ch, const std::vector<PauliIndex>& seq);

/// Lazy enumeration of all (d^2)^d Kraus terms, in lexicographic order of the
/// flattened (m_0, n_0, m_1, n_1, ...) labels. Zero-weight terms included.
class KrausTermRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = KrausTerm;
    using difference_type = std::ptrdiff_t;
    using pointer = const KrausTerm*;
    using reference = const KrausTerm&;

    iterator() = default;
    reference operator*() const { return term_; }
    pointer operator->() const { return &term_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    friend class KrausTermRange;
    iterator(const CorrelatedChannel* ch, std::uint64_t pos, std::uint64_t end);
    void load();

    const CorrelatedChannel* ch_ = nullptr;
    std::uint64_t pos_ = 0;
    std::uint64_t end_ = 0;
    KrausTerm term_;
  };

  /// The channel must outlive the range.
  explicit KrausTermRange(const CorrelatedChannel& ch);
  explicit KrausTermRange(CorrelatedChannel&&) = delete;
  iterator begin() const;
  iterator end() const;
  std::uint64_t size() const { return count_; }

 private:
  const CorrelatedChannel* ch_;
  std::uint64_t count_;
};

inline KrausTermRange kraus_terms(const CorrelatedChannel& ch) { return KrausTermRange(ch); }

}  // namespace qmc
