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

// AArch64 Advanced SIMD: one complex double per float64x2_t.

#include <arm_neon.h>

#include "qmc/kernels.hpp"

namespace qmc::kernels {
namespace {

void caxpy_neon(std::size_t n, Complex alpha, const Complex* x, Complex* y) {
  const float64x2_t ar = vdupq_n_f64(alpha.real());
  const double ai_signed[2] = {-alpha.imag(), alpha.imag()};
  const float64x2_t ai = vld1q_f64(ai_signed);
  const double* xs = reinterpret_cast<const double*>(x);
  double* ys = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xs + 2 * i);
    const float64x2_t swapped = vextq_f64(xv, xv, 1);  // [im, re]
    float64x2_t yv = vld1q_f64(ys + 2 * i);
    yv = vfmaq_f64(yv, ar, xv);
    yv = vfmaq_f64(yv, ai, swapped);
    vst1q_f64(ys + 2 * i, yv);
  }
}

double sum_abs2_neon(std::size_t n, const Complex* x) {
  const double* xs = reinterpret_cast<const double*>(x);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t a = vld1q_f64(xs + 2 * i);
    const float64x2_t b = vld1q_f64(xs + 2 * i + 2);
    acc0 = vfmaq_f64(acc0, a, a);
    acc1 = vfmaq_f64(acc1, b, b);
  }
  for (; i < n; ++i) {
    const float64x2_t a = vld1q_f64(xs + 2 * i);
    acc0 = vfmaq_f64(acc0, a, a);
  }
  return vaddvq_f64(vaddq_f64(acc0, acc1));
}

Complex dotc_neon(std::size_t n, const Complex* x, const Complex* y) {
  const double* xs = reinterpret_cast<const double*>(x);
  const double* ys = reinterpret_cast<const double*>(y);
  float64x2_t acc_re = vdupq_n_f64(0.0);  // [xr*yr, xi*yi]
  float64x2_t acc_im = vdupq_n_f64(0.0);  // [xr*yi, xi*yr]
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xs + 2 * i);
    const float64x2_t yv = vld1q_f64(ys + 2 * i);
    acc_re = vfmaq_f64(acc_re, xv, yv);
    acc_im = vfmaq_f64(acc_im, xv, vextq_f64(yv, yv, 1));
  }
  return {vaddvq_f64(acc_re), vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

}  // namespace

namespace detail {
extern const KernelTable kNeonTable{Isa::Neon, &caxpy_neon, &sum_abs2_neon, &dotc_neon};
}  // namespace detail

}  // namespace qmc::kernels
