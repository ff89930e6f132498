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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmc/analysis.hpp"

namespace qmc {

/// Everything one CLI invocation needs. Parsed fully before any computation.
struct RunConfig {
  std::string command;
  ChannelParams channel;
  std::optional<double> mu;
  int grid_points = 201;
  std::vector<std::string> curves;  // sweep, crossover: curve specs; fidelity, mutualinfo: one state
  std::string figure;
  std::string out;
  std::uint64_t seed = 7;
  double tol = 1e-8;
  std::string method = "closed-form";  // or "oracle"
  std::string isa = "auto";
  bool strict = false;
  int shift = 0;  // pauli only
  int phase = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// {"family", "d", "p", "q"?, "r"?, "t"?}; q, r, t are required for "general"
/// and derived otherwise. An optional "mu" is ignored here.
ChannelParams channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const ChannelParams& ch);

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);

/// Exit codes: 0 success, 1 argument or validation error, 2 numeric failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmc
