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

// Compiled with -mavx2 -mfma. Nothing here may run unless the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include "qmc/kernels.hpp"

namespace qmc::kernels {
namespace {

// A __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

void caxpy_avx2(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d swapped = _mm256_permute_pd(xv, 0b0101);
    // even lanes: ar*re - ai*im, odd lanes: ar*im + ai*re
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swapped));
    _mm256_storeu_pd(ys + 2 * i, _mm256_add_pd(_mm256_loadu_pd(ys + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = Complex(y[i].real() + (alpha.real() * xr - alpha.imag() * xi),
                   y[i].imag() + (alpha.real() * xi + alpha.imag() * xr));
  }
}

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double sum_abs2_avx2(std::size_t n, const Complex* x) {
  const double* xs = reinterpret_cast<const double*>(x);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(xs + 2 * i);
    const __m256d b = _mm256_loadu_pd(xs + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a = _mm256_loadu_pd(xs + 2 * i);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

Complex dotc_avx2(std::size_t n, const Complex* x, const Complex* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();  // [xr*yr, xi*yi, ...]
  __m256d acc_im = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xs + 2 * i);
    const __m256d yv = _mm256_loadu_pd(ys + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
  }
  alignas(32) double im_lanes[4];
  _mm256_store_pd(im_lanes, acc_im);
  double re = hsum(acc_re);
  double im = (im_lanes[0] + im_lanes[2]) - (im_lanes[1] + im_lanes[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

}  // namespace

namespace detail {
extern const KernelTable kAvx2Table{Isa::Avx2, &caxpy_avx2, &sum_abs2_avx2, &dotc_avx2};
}  // namespace detail

}  // namespace qmc::kernels
