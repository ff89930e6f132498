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

// Dense simulation of the correlated channel. This is the reference every
// analytic expression is checked against.

#include <optional>
#include <vector>

#include "qmc/density_matrix.hpp"
#include "qmc/mutual_info.hpp"
#include "qmc/noise_model.hpp"
#include "qmc/state_factory.hpp"

namespace qmc {

/// E(rho) = (1-mu) E1^{(x)d}(rho) + mu sum_mn P_mn U^{(x)d} rho U^{(x)d dagger}.
DensityMatrix apply_channel(const CorrelatedChannel& ch, const DensityMatrix& rho);
/// E1^{(x)d}(rho), the memoryless part.
Matrix apply_memoryless(const PauliProbTable& table, const Matrix& rho);
/// sum_mn P_mn U^{(x)d} rho U^{(x)d dagger}, the fully correlated part.
Matrix apply_correlated(const PauliProbTable& table, const Matrix& rho);

/// Sum over every Kraus operator, materialized. Exponential in d; reference
/// for apply_channel at small d.
DensityMatrix apply_channel_kraus_sum(const CorrelatedChannel& ch, const DensityMatrix& rho);
/// sum_k A_k^dagger A_k over the full enumeration.
Matrix kraus_completeness(const CorrelatedChannel& ch);

/// Eigenvalues, ascending. Values in [-1e-9, 0) become 0; anything more
/// negative throws NumericError.
std::vector<double> spectrum(const DensityMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// <psi| rho |psi>.
double fidelity(const StateVector& psi, const DensityMatrix& rho);

struct EnsembleSpec {
  enum class Family { MaxEntangledBasis, ProductBasis, Alpha, Km, Diag };

  Family family = Family::MaxEntangledBasis;
  double angle = 0.0;               // alpha or theta
  std::vector<Complex> coeffs;      // Diag only

  static EnsembleSpec max_entangled_basis() { return {Family::MaxEntangledBasis, 0.0, {}}; }
  static EnsembleSpec product_basis() { return {Family::ProductBasis, 0.0, {}}; }
  static EnsembleSpec alpha(double a) { return {Family::Alpha, a, {}}; }
  static EnsembleSpec km(double theta) { return {Family::Km, theta, {}}; }
  static EnsembleSpec diag(const DiagonalCoeffs& c) { return {Family::Diag, 0.0, c.values()}; }

  /// The member whose output entropy stands for the whole ensemble.
  StateVector fiducial(QuditDim d) const;
  /// Every member. Bases have d^d members; the Alpha/Km/Diag families use the
  /// orbit of the fiducial under a phase on site 0 and independent shifts on
  /// every site (d^{d+1} members). All priors are uniform.
  std::vector<StateVector> members(QuditDim d) const;
};

/// S(E(average input)) - S(E(fiducial)). The average input of every supported
/// ensemble is I/d^d, and members are related by local Paulis, which commute
/// with the channel up to phase, so all output entropies are equal.
MutualInfoResult holevo_mutual_info(const CorrelatedChannel& ch, const EnsembleSpec& ens);
/// The same quantity from the explicit ensemble, no shortcuts.
MutualInfoResult holevo_direct_sum(const CorrelatedChannel& ch, const EnsembleSpec& ens);

/// With C = prod_{i>=1} C_{0,i}: C^dagger rho C, or C rho C^dagger when inverse.
DensityMatrix cnot_conjugate(const DensityMatrix& rho, bool inverse = false);

/// Average over all phase-only Pauli sequences on the d sites.
DensityMatrix twirl(const DensityMatrix& rho);

}  // namespace qmc
