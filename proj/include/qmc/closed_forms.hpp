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

// Analytic fidelity, threshold and mutual-information expressions. Every
// function defaults to the corrected reading; a Reading with an erratum set
// evaluates that piece as originally printed, which lets the validation
// harness measure how far each printed form is from the simulation.

#include <bitset>
#include <optional>
#include <string_view>
#include <vector>

#include "qmc/density_matrix.hpp"
#include "qmc/mutual_info.hpp"
#include "qmc/noise_model.hpp"

namespace qmc {

enum class Erratum {
  FidelityCrossTerm,        // E1
  ProductMarginals,         // E2
  StrayTensorPower,         // E3
  QuasiClassicalB,          // E4
  GhzEigenvalues,           // E5
  OutputMatrixStrayFactor,  // E6
  OutputMatrixPrefactor,    // E7
  DepolarizingT,            // E8
  DepolarizingSecondPart,   // E9
  KmEigenvalues,            // E10
  DepolarizingKmWV,         // E11
};
inline constexpr int kErratumCount = 11;

/// Which errata are evaluated as printed. Empty means fully corrected.
class Reading {
 public:
  Reading() = default;
  static Reading as_stated(Erratum e) {
    Reading r;
    r.bits_.set(static_cast<std::size_t>(e));
    return r;
  }
  bool stated(Erratum e) const { return bits_.test(static_cast<std::size_t>(e)); }

 private:
  std::bitset<kErratumCount> bits_;
};

double fid_max_entangled(const PauliProbTable& table, double mu, Reading reading = {});
double fid_product(const PauliProbTable& table, double mu);

struct ThresholdResult {
  enum class Kind { Value, OutOfRange, Degenerate };
  Kind kind = Kind::Value;
  /// The ratio when it is finite, in or out of [0, 1].
  double mu = 0.0;
};

/// Memory degree at which the two fidelities meet, for q = r = t tables.
ThresholdResult fid_threshold_mu(double p, double q, int d);

MutualInfoResult mi_max_entangled(const PauliProbTable& table, double mu, Reading reading = {});
MutualInfoResult mi_product(const PauliProbTable& table, double mu, Reading reading = {});

/// The alpha ansatz on the quasi-classical / depolarizing channel.
MutualInfoResult mi_qcd_alpha(int d, double p, double mu, double alpha, Reading reading = {});
MutualInfoResult mi_dep_alpha(int d, double p, double mu, double alpha, Reading reading = {});
/// The complex-coefficient ansatz at d = 4.
MutualInfoResult mi_qcd_km(double p, double mu, double theta, Reading reading = {});
MutualInfoResult mi_dep_km(double p, double mu, double theta, Reading reading = {});

/// Completely depolarizing table: input whose correlated-part output has k
/// equal nonzero eigenvalues.
MutualInfoResult mi_high_error_k(int d, double mu, int k);
MutualInfoResult mi_high_error_max_entangled(int d, double mu);
MutualInfoResult mi_high_error_product(int d, double mu);

/// Tr rho^2.
double purity(const DensityMatrix& rho);
/// Tr E(rho)^2 on the completely depolarizing table when the correlated part
/// of the output has purity sigma_purity (1 for the maximally entangled input).
double purity_high_error(int d, double mu, double sigma_purity = 1.0);

/// Output of the GHZ-type input sum_j A_j |j>^{(x)d} after the controlled
/// adders, built from the closed-form block structure (a d x d block on
/// sites 1..d-1 = 0, diagonal elsewhere). a, b are the single-use no-shift
/// and per-shift marginals; off is the coefficient of A_k A_k'^*.
/// Compare with cnot_conjugate(apply_channel(...)).
Matrix ghz_block_output(int d, double a, double b, double off, double mu, const std::vector<Complex>& coeffs,
                        Reading reading = {});

/// First-block matrix and second-part diagonal used by the ansatz formulas.
Matrix ghz_first_block(int d, double a, double b, double off, double mu, const std::vector<Complex>& coeffs);
/// Entries of the diagonal part, indexed by (k_0, ..., k_{d-1}) big-endian;
/// the d entries with k_1..k_{d-1} = 0 belong to the first block and are 0.
std::vector<double> ghz_second_part(int d, double a, double b, double mu, const std::vector<double>& weights);

struct ErratumInfo {
  Erratum id;
  std::string_view tag;       // "E1" ...
  std::string_view formula;   // what the expression computes
  std::string_view as_stated;
  std::string_view correction;
  /// False when the printed form has a free index and cannot be evaluated.
  bool evaluable;
};

const std::vector<ErratumInfo>& errata_registry();

}  // namespace qmc
