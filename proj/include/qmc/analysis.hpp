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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmc/closed_forms.hpp"
#include "qmc/noise_model.hpp"

namespace qmc {

/// Family and parameters of a channel, without the memory degree.
struct ChannelParams {
  ChannelFamily family = ChannelFamily::General;
  int d = 2;
  double p = 1.0;
  double q = 0.0;
  double r = 0.0;
  double t = 0.0;

  PauliProbTable table() const { return make_table(family, QuditDim(d), p, q, r, t); }
  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

/// One plotted quantity as a function of mu.
///   maxent | product | alpha:n=<n> | alpha:cos2=<c> | km:n=<n> | km:cos2=<c>
///   | k=<k> | fid:maxent | fid:product
/// For alpha and km, n means cos^2 = 1/sqrt(n).
struct CurveSpec {
  enum class Kind { MaxEnt, Product, Alpha, Km, KSupport, FidMaxEnt, FidProduct };
  Kind kind = Kind::MaxEnt;
  double cos2 = 1.0;
  int k = 1;
  std::string label;

  static CurveSpec parse(const std::string& text);
  double angle() const;
};

double evaluate_curve(const ChannelParams& ch, const CurveSpec& curve, double mu);
double evaluate_curve_oracle(const ChannelParams& ch, const CurveSpec& curve, double mu);

std::vector<double> uniform_grid(int points);

struct SpotCheck {
  std::string label;
  double mu;
  double closed_form;
  double oracle;
};

struct SweepTable {
  ChannelParams channel;
  std::vector<double> mu;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;  // values[curve][grid index]
  std::vector<SpotCheck> spot_checks;

  /// Largest |closed form - oracle| over the spot checks.
  double max_spot_error() const;
  std::string to_csv() const;
};

/// Oracle spot checks run at 5 grid points per curve when d <= 4.
SweepTable sweep(const ChannelParams& ch, const std::vector<CurveSpec>& curves, const std::vector<double>& grid,
                 bool spot_check = true);

struct CrossoverReport {
  enum class Kind { Interior, BoundaryTouch, NoCrossing, Degenerate };
  Kind kind = Kind::NoCrossing;
  double mu_t = 0.0;
  double lo = 0.0, hi = 1.0;
  double residual = 0.0;
};

std::string_view crossover_kind_name(CrossoverReport::Kind k);

/// Root of f_a - f_b on [0, 1]: sign scan on the grid, then bisection.
CrossoverReport find_crossover(const std::function<double(double)>& f_a, const std::function<double(double)>& f_b,
                               const std::vector<double>& grid);
CrossoverReport find_crossover(const ChannelParams& ch, const CurveSpec& a, const CurveSpec& b,
                               const std::vector<double>& grid);

struct FigurePreset {
  std::string name;
  std::string description;
  ChannelParams channel;
  std::vector<CurveSpec> curves;
  int points = 201;
};

const std::vector<FigurePreset>& figure_presets();
const FigurePreset& figure_preset(const std::string& name);

/// One property check of a reproduced figure.
struct PropertyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<PropertyCheck> check_figure(const FigurePreset& preset, const SweepTable& table);

struct ValidationEntry {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  int points = 0;
  bool pass = false;
  /// Reported but not counted towards the overall result.
  bool informational = false;
  std::string note;
};

struct ValidationReport {
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<ValidationEntry> entries;

  bool all_pass() const;
  std::string to_text() const;
};

struct ValidateOptions {
  std::vector<int> dims{2, 3, 4};
  int points_per_family = 20;
};

ValidationReport validate(std::uint64_t seed, double tolerance, const ValidateOptions& options = {});

}  // namespace qmc
