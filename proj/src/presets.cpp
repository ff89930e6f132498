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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "qmc/analysis.hpp"
#include "qmc/cli_io.hpp"
#include "qmc/errors.hpp"
#include "qmc/presets_data.hpp"

namespace qmc {

namespace {

FigurePreset preset_from_json(const nlohmann::json& j) {
  FigurePreset p;
  p.name = j.at("name").get<std::string>();
  p.description = j.value("description", "");
  p.channel = channel_from_json(j.at("channel"));
  for (const auto& c : j.at("curves")) p.curves.push_back(CurveSpec::parse(c.get<std::string>()));
  p.points = j.value("grid_points", 201);
  return p;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::optional<std::size_t> find_kind(const FigurePreset& p, CurveSpec::Kind k) {
  for (std::size_t i = 0; i < p.curves.size(); ++i) {
    if (p.curves[i].kind == k) return i;
  }
  return std::nullopt;
}

// Largest distance between mu_t and the crossings of `c` with the two
// reference curves. Infinite when either crossing is missing.
double crossing_deviation(const ChannelParams& ch, const CurveSpec& c, const CurveSpec& maxent,
                          const CurveSpec& product, double mu_t, const std::vector<double>& grid,
                          std::string& detail) {
  const CrossoverReport with_pro = find_crossover(ch, c, product, grid);
  const CrossoverReport with_me = find_crossover(ch, c, maxent, grid);
  auto show = [](const CrossoverReport& r) {
    return r.kind == CrossoverReport::Kind::Interior ? fmt("%.6f", r.mu_t) : std::string(crossover_kind_name(r.kind));
  };
  detail = c.label + " crosses product at " + show(with_pro) + ", maxent at " + show(with_me);
  if (with_pro.kind != CrossoverReport::Kind::Interior || with_me.kind != CrossoverReport::Kind::Interior) {
    return std::numeric_limits<double>::infinity();
  }
  return std::max(std::abs(with_pro.mu_t - mu_t), std::abs(with_me.mu_t - mu_t));
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = [] {
    std::vector<FigurePreset> v;
    for (const auto& [name, text] : detail::kPresetSources) {
      v.push_back(preset_from_json(nlohmann::json::parse(text)));
      if (v.back().name != name) throw InvalidArgument("preset file name and name field disagree");
    }
    return v;
  }();
  return presets;
}

const FigurePreset& figure_preset(const std::string& name) {
  for (const auto& p : figure_presets()) {
    if (p.name == name) return p;
  }
  throw InvalidArgument("unknown figure '" + name + "' (expected fig1..fig5)");
}

std::vector<PropertyCheck> check_figure(const FigurePreset& preset, const SweepTable& table) {
  std::vector<PropertyCheck> checks;
  const ChannelParams& ch = preset.channel;
  const std::vector<double>& grid = table.mu;

  if (!table.spot_checks.empty()) {
    const double e = table.max_spot_error();
    checks.push_back({preset.name + ": oracle spot checks", e <= 1e-8,
                      "max |closed form - oracle| = " + fmt("%.3e", e) + " over " +
                          std::to_string(table.spot_checks.size()) + " points"});
  }

  const auto i_me = find_kind(preset, CurveSpec::Kind::MaxEnt);
  const auto i_pro = find_kind(preset, CurveSpec::Kind::Product);
  if (i_me && i_pro) {
    const CurveSpec& maxent = preset.curves[*i_me];
    const CurveSpec& product = preset.curves[*i_pro];
    const CrossoverReport cross = find_crossover(ch, maxent, product, grid);
    if (cross.kind != CrossoverReport::Kind::Interior) {
      checks.push_back({preset.name + ": maxent/product crossover", false,
                        std::string("expected an interior crossing, found ") +
                            std::string(crossover_kind_name(cross.kind))});
      return checks;
    }
    const double mu_t = cross.mu_t;
    checks.push_back({preset.name + ": maxent/product crossover", cross.residual <= 1e-9,
                      "mu_t = " + fmt("%.6f", mu_t) + ", residual " + fmt("%.1e", cross.residual)});

    const bool has_alpha = find_kind(preset, CurveSpec::Kind::Alpha).has_value();
    const bool has_km = find_kind(preset, CurveSpec::Kind::Km).has_value();

    if (has_alpha) {
      // Below mu_t the product curve is strictly on top and maxent strictly
      // at the bottom; above mu_t the order is reversed.
      int violations = 0;
      std::string first;
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const double mu = grid[g];
        if (std::abs(mu - mu_t) <= 1e-3) continue;
        const bool below = mu < mu_t;
        const std::size_t top = below ? *i_pro : *i_me;
        const std::size_t bottom = below ? *i_me : *i_pro;
        for (std::size_t c = 0; c < preset.curves.size(); ++c) {
          if (c == top || c == bottom) continue;
          const double v = table.values[c][g];
          if (!(table.values[top][g] > v && v > table.values[bottom][g])) {
            if (violations == 0) first = preset.curves[c].label + " at mu=" + fmt("%.3f", mu);
            ++violations;
          }
        }
      }
      checks.push_back({preset.name + ": ordering around mu_t", violations == 0,
                        violations == 0 ? "all grid points ordered"
                                        : std::to_string(violations) + " violations, first: " + first});
      for (const CurveSpec& c : preset.curves) {
        if (c.kind != CurveSpec::Kind::Alpha) continue;
        std::string detail;
        const double dev = crossing_deviation(ch, c, maxent, product, mu_t, grid, detail);
        checks.push_back({preset.name + ": " + c.label + " crosses at mu_t", dev <= 1e-3,
                          detail + "; |dmu| = " + fmt("%.4f", dev) + " (limit 1e-3)"});
      }
    }

    if (has_km) {
      double km_spread = 0.0;
      std::string km_detail;
      for (const CurveSpec& c : preset.curves) {
        if (c.kind != CurveSpec::Kind::Km) continue;
        std::string detail;
        km_spread = std::max(km_spread, crossing_deviation(ch, c, maxent, product, mu_t, grid, detail));
        km_detail += detail + "; ";
      }
      // Reference: the alpha family on the same channel.
      double alpha_spread = 0.0;
      for (const char* spec : {"alpha:n=1.25", "alpha:n=2"}) {
        std::string detail;
        alpha_spread =
            std::max(alpha_spread, crossing_deviation(ch, CurveSpec::parse(spec), maxent, product, mu_t, grid, detail));
      }
      checks.push_back({preset.name + ": KM crossings spread beyond the alpha family", km_spread > alpha_spread,
                        km_detail + "KM spread " + fmt("%.4f", km_spread) + ", alpha spread " +
                            fmt("%.4f", alpha_spread)});
    }
  }

  if (find_kind(preset, CurveSpec::Kind::KSupport)) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < preset.curves.size(); ++c) {
      if (preset.curves[c].kind == CurveSpec::Kind::KSupport) order.push_back(c);
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return preset.curves[a].k < preset.curves[b].k; });
    int violations = 0;
    bool strict_at_one = true;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      if (grid[g] <= 0.0) continue;
      for (std::size_t s = 0; s + 1 < order.size(); ++s) {
        const double hi = table.values[order[s]][g];
        const double lo = table.values[order[s + 1]][g];
        if (hi < lo - 1e-12) ++violations;
        if (grid[g] == 1.0 && !(hi > lo + 1e-9)) strict_at_one = false;
      }
    }
    checks.push_back({preset.name + ": k-ordering on (0, 1]", violations == 0,
                      std::to_string(violations) + " violations of I_k >= I_k+1"});
    checks.push_back({preset.name + ": strict k-ordering at mu=1", strict_at_one && grid.back() == 1.0,
                      "differences at mu=1 exceed 1e-9"});
  }
  return checks;
}

}  // namespace qmc
