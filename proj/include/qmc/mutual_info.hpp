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

#include <string_view>
#include <vector>

namespace qmc {

struct MutualInfoResult {
  enum class Method { Oracle, ClosedForm };

  /// Bits per block of d channel uses.
  double value = 0.0;
  /// Spectrum of the output state whose entropy is subtracted, with
  /// multiplicities, in no particular order.
  std::vector<double> spectrum;
  Method method = Method::Oracle;
};

inline std::string_view method_name(MutualInfoResult::Method m) {
  return m == MutualInfoResult::Method::Oracle ? "oracle" : "closed-form";
}

/// x log2 x with 0 log 0 = 0.
double xlog2(double x);

/// -sum x log2 x over a probability vector.
double shannon_bits(const std::vector<double>& p);

}  // namespace qmc
