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

namespace qmc {

const std::vector<ErratumInfo>& errata_registry() {
  static const std::vector<ErratumInfo> registry{
      {Erratum::FidelityCrossTerm, "E1", "fidelity of the maximally entangled basis",
       "(1-mu)/d^2 * t d (d-1) (r-t+td)^(d-1) (td)^d (d-1)^2",
       "(1-mu)/d^2 * t d^2 (d-1) (r-t+td)^(d-1)", true},
      {Erratum::ProductMarginals, "E2", "mutual information of the product basis",
       "x = p+(d-1)q and y = qd inside (x+qd) and (y+dt)",
       "x = p-q and y = r-t, so x+qd = p+(d-1)q and y+dt = r+(d-1)t", true},
      {Erratum::StrayTensorPower, "E3",
       "maximally entangled mutual information, coefficient A of each block (third term)",
       "prod_i [(x-y+d(q-t)) delta_{0,k_i} + (y+dt)] raised to the tensor power d-1",
       "the plain product, no power", true},
      {Erratum::QuasiClassicalB, "E4", "quasi-classical marginals in the ansatz formulas", "b = q d",
       "b = d r = (1-dp)/(d-1)", true},
      {Erratum::GhzEigenvalues, "E5", "eigenvalues lambda^{1,2} of the d x d block (alpha ansatz)",
       "sqrt[t^2 + 4(d-1)s - 2tc + c^2 - 2(d-2)(c-t)r + (d-2)^2 r^2]",
       "sqrt[t^2 + 4(d-1)s^2 - 2tc + c^2 - 2(d-2)(t-c)r + (d-2)^2 r^2]", true},
      {Erratum::OutputMatrixStrayFactor, "E6",
       "quasi-classical output after the controlled adders, diagonal part",
       "[(a-b)|j><j| + (1-mu) b I]^(x)(d-1)", "[(a-b)|j><j| + b I]^(x)(d-1)", true},
      {Erratum::OutputMatrixPrefactor, "E7",
       "quasi-classical output after the controlled adders, coherent block",
       "mu a sum A_j1 A*_j2 [a |j1><j2| + b sum_m |j1+m><j2+m|]",
       "mu sum A_j1 A*_j2 [a |j1><j2| + b sum_m |j1+m><j2+m|]", true},
      {Erratum::DepolarizingT, "E8", "depolarizing block element t = E_00 (alpha ansatz)",
       "[(1-mu)(x-y) + mu x] cos^2 alpha + ...", "[(1-mu)(x-y)^d + mu x] cos^2 alpha + ...", true},
      {Erratum::DepolarizingSecondPart, "E9", "depolarizing diagonal part (alpha ansatz)",
       "delta_{0,k_i} in the first bracket; the product over i sits inside the second bracket and "
       "multiplies only its sin^2 term; the subtracted term reads "
       "(1-mu){(x^d-y^d) cos^2 alpha delta + sin^2 alpha/(d-1)(1-delta) + (1-mu) y^d}",
       "same expression as the quasi-classical diagonal part with a -> x, b -> y: delta_{0,k_0}, "
       "the product multiplies the whole bracket, and the subtracted term is "
       "(1-mu){(x^d-y^d)[cos^2 alpha delta_{0,k_0} + sin^2 alpha/(d-1)(1-delta_{0,k_0})] + y^d}",
       false},
      {Erratum::KmEigenvalues, "E10", "block eigenvalues for the complex-coefficient (KM) ansatz",
       "lambda^0 = -w+z+f; lambda^{1,2} = w+2z+f +- sqrt(3v^2+4w^2-2wz+z^2)",
       "lambda^0 = f-z-w (twice); lambda^{1,2} = f+z+w +- sqrt(3v^2+4w^2-4wz+4z^2)", true},
      {Erratum::DepolarizingKmWV, "E11", "depolarizing w and v for the KM ansatz",
       "(1-mu)(x^4-y^4) in both w and v", "(1-mu)(x-y)^4 in both w and v", true},
  };
  return registry;
}

}  // namespace qmc
