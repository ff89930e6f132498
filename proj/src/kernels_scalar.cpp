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

#include "qmc/kernels.hpp"

namespace qmc::kernels {
namespace {

// Real and imaginary parts are spelled out: std::complex operator* goes
// through the C99 Annex G path and is several times slower.
void caxpy_scalar(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr));
  }
}

double sum_abs2_scalar(std::size_t n, const Complex* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

Complex dotc_scalar(std::size_t n, const Complex* x, const Complex* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

namespace detail {
extern const KernelTable kScalarTable{Isa::Scalar, &caxpy_scalar, &sum_abs2_scalar, &dotc_scalar};
}  // namespace detail

}  // namespace qmc::kernels
