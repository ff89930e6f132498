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

// Data-parallel inner loops of the dense channel simulation. Every kernel has
// a portable scalar reference; vector variants are selected once at startup
// from what the CPU reports and must agree with the reference to rounding.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qmc::kernels {

using Complex = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  /// y[i] += alpha * x[i]
  void (*caxpy)(std::size_t n, Complex alpha, const Complex* x, Complex* y);
  /// sum_i |x[i]|^2
  double (*sum_abs2)(std::size_t n, const Complex* x);
  /// sum_i conj(x[i]) * y[i]
  Complex (*dotc)(std::size_t n, const Complex* x, const Complex* y);
};

/// True when the running CPU can execute the given variant.
bool available(Isa isa);

/// Best variant for this CPU.
Isa detect_best();

/// Kernel table for a specific variant; throws if it is not available.
const KernelTable& table_for(Isa isa);

/// Table used by the library. Defaults to detect_best().
const KernelTable& active();

/// Overrides the active table (tests and the --isa flag).
void select(Isa isa);

inline void caxpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  active().caxpy(x.size(), alpha, x.data(), y.data());
}
inline double sum_abs2(std::span<const Complex> x) { return active().sum_abs2(x.size(), x.data()); }
inline Complex dotc(std::span<const Complex> x, std::span<const Complex> y) {
  return active().dotc(x.size(), x.data(), y.data());
}

namespace detail {
extern const KernelTable kScalarTable;
#ifdef QMC_HAVE_AVX2_KERNELS
extern const KernelTable kAvx2Table;
#endif
#ifdef QMC_HAVE_NEON_KERNELS
extern const KernelTable kNeonTable;
#endif
}  // namespace detail

}  // namespace qmc::kernels
