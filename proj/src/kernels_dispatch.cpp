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

#include <atomic>

#include "qmc/errors.hpp"
#include "qmc/kernels.hpp"

namespace qmc::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(QMC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#ifdef QMC_HAVE_NEON_KERNELS
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

Isa detect_best() {
  if (available(Isa::Avx2)) return Isa::Avx2;
  if (available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

const KernelTable& table_for(Isa isa) {
  if (!available(isa)) {
    throw InvalidArgument("kernel variant '" + std::string(isa_name(isa)) + "' is not available on this CPU");
  }
  switch (isa) {
#ifdef QMC_HAVE_AVX2_KERNELS
    case Isa::Avx2:
      return detail::kAvx2Table;
#endif
#ifdef QMC_HAVE_NEON_KERNELS
    case Isa::Neon:
      return detail::kNeonTable;
#endif
    default:
      return detail::kScalarTable;
  }
}

namespace {
std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&table_for(detect_best())};
  return slot;
}
}  // namespace

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

void select(Isa isa) { active_slot().store(&table_for(isa), std::memory_order_release); }

}  // namespace qmc::kernels
