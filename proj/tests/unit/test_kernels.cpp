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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "qmc/channel_oracle.hpp"
#include "qmc/kernels.hpp"
#include "qmc/state_factory.hpp"

namespace qmc {
namespace {

using kernels::Isa;

std::vector<kernels::Complex> random_vec(std::size_t n, std::mt19937_64& g) {
  std::normal_distribution<double> n01;
  std::vector<kernels::Complex> v(n);
  for (auto& z : v) z = {n01(g), n01(g)};
  return v;
}

std::vector<Isa> vector_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (kernels::available(isa)) out.push_back(isa);
  }
  return out;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void TearDown() override { kernels::select(kernels::detect_best()); }
};

TEST_F(KernelEquivalence, ScalarAlwaysAvailable) {
  EXPECT_TRUE(kernels::available(Isa::Scalar));
  EXPECT_EQ(kernels::table_for(Isa::Scalar).isa, Isa::Scalar);
}

TEST_F(KernelEquivalence, CaxpyMatchesScalar) {
  std::mt19937_64 g(11);
  const auto& ref = kernels::table_for(Isa::Scalar);
  for (Isa isa : vector_isas()) {
    const auto& vec = kernels::table_for(isa);
    // odd lengths exercise the tails
    for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 16u, 33u, 256u, 1001u}) {
      const auto x = random_vec(n, g);
      auto y1 = random_vec(n, g);
      auto y2 = y1;
      const kernels::Complex alpha(0.37, -1.21);
      ref.caxpy(n, alpha, x.data(), y1.data());
      vec.caxpy(n, alpha, x.data(), y2.data());
      for (std::size_t i = 0; i < n; ++i) EXPECT_LE(std::abs(y1[i] - y2[i]), 1e-14) << kernels::isa_name(isa) << n;
    }
  }
}

TEST_F(KernelEquivalence, ReductionsMatchScalar) {
  std::mt19937_64 g(12);
  const auto& ref = kernels::table_for(Isa::Scalar);
  for (Isa isa : vector_isas()) {
    const auto& vec = kernels::table_for(isa);
    for (std::size_t n : {0u, 1u, 3u, 5u, 64u, 999u}) {
      const auto x = random_vec(n, g);
      const auto y = random_vec(n, g);
      const double scale = 1.0 + static_cast<double>(n);
      EXPECT_NEAR(ref.sum_abs2(n, x.data()), vec.sum_abs2(n, x.data()), 1e-13 * scale);
      EXPECT_LE(std::abs(ref.dotc(n, x.data(), y.data()) - vec.dotc(n, x.data(), y.data())), 1e-13 * scale);
    }
  }
}

TEST_F(KernelEquivalence, DotcConjugatesFirstArgument) {
  const std::vector<kernels::Complex> x{{0, 1}}, y{{0, 1}};
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (!kernels::available(isa)) continue;
    EXPECT_NEAR(std::abs(kernels::table_for(isa).dotc(1, x.data(), y.data()) - 1.0), 0.0, 1e-15);
  }
}

TEST_F(KernelEquivalence, ApplyChannelMatchesAcrossIsas) {
  std::mt19937_64 g(13);
  for (int d = 2; d <= 4; ++d) {
    const QuditDim dd(d);
    const CorrelatedChannel ch(PauliProbTable(dd, 0.5, 0.1 / (d - 1), 0.2 / (d - 1), 0.2 / ((d - 1.0) * (d - 1))),
                               0.35);
    const DensityMatrix rho = to_density(alpha_state(dd, 0.7));
    kernels::select(Isa::Scalar);
    const Matrix ref = apply_channel(ch, rho).matrix();
    for (Isa isa : vector_isas()) {
      kernels::select(isa);
      EXPECT_LE((apply_channel(ch, rho).matrix() - ref).cwiseAbs().maxCoeff(), 1e-14) << kernels::isa_name(isa);
    }
  }
}

TEST_F(KernelEquivalence, UnavailableIsaThrows) {
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (!kernels::available(isa)) EXPECT_ANY_THROW(kernels::table_for(isa));
  }
}

}  // namespace
}  // namespace qmc
