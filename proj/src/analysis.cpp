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

#include "qmc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qmc/channel_oracle.hpp"
#include "qmc/errors.hpp"
#include "qmc/state_factory.hpp"

namespace qmc {

namespace {

double parse_number(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) {
    throw InvalidArgument("bad number '" + text + "' in curve '" + whole + "'");
  }
  return v;
}

// Parses "n=<n>" or "cos2=<c>" and fills cos2 and the label suffix.
void parse_shape(const std::string& rest, const std::string& whole, CurveSpec& c, const std::string& prefix) {
  if (rest.rfind("n=", 0) == 0) {
    const std::string tok = rest.substr(2);
    const double n = parse_number(tok, whole);
    if (n < 1.0) throw InvalidArgument("curve '" + whole + "': n must be >= 1");
    c.cos2 = 1.0 / std::sqrt(n);
    c.label = prefix + "n" + tok;
  } else if (rest.rfind("cos2=", 0) == 0) {
    const std::string tok = rest.substr(5);
    c.cos2 = parse_number(tok, whole);
    if (c.cos2 < 0.0 || c.cos2 > 1.0) throw InvalidArgument("curve '" + whole + "': cos2 must lie in [0, 1]");
    c.label = prefix + tok;
  } else {
    throw InvalidArgument("curve '" + whole + "': expected n=<value> or cos2=<value>");
  }
}

}  // namespace

CurveSpec CurveSpec::parse(const std::string& text) {
  CurveSpec c;
  if (text == "maxent") {
    c.kind = Kind::MaxEnt;
    c.label = "I_maxent";
  } else if (text == "product") {
    c.kind = Kind::Product;
    c.label = "I_product";
  } else if (text == "fid:maxent") {
    c.kind = Kind::FidMaxEnt;
    c.label = "F_maxent";
  } else if (text == "fid:product") {
    c.kind = Kind::FidProduct;
    c.label = "F_product";
  } else if (text.rfind("alpha:", 0) == 0) {
    c.kind = Kind::Alpha;
    parse_shape(text.substr(6), text, c, "I_alpha_");
  } else if (text.rfind("km:", 0) == 0) {
    c.kind = Kind::Km;
    parse_shape(text.substr(3), text, c, "I_km_");
  } else if (text.rfind("k=", 0) == 0) {
    c.kind = Kind::KSupport;
    const double k = parse_number(text.substr(2), text);
    if (k < 1 || k != std::floor(k)) throw InvalidArgument("curve '" + text + "': k must be a positive integer");
    c.k = static_cast<int>(k);
    c.label = "I_k" + std::to_string(c.k);
  } else {
    throw InvalidArgument("unknown curve '" + text + "'");
  }
  return c;
}

double CurveSpec::angle() const { return angle_from_cos2(cos2); }

namespace {

double family_p_for_ansatz(const ChannelParams& ch) {
  return ch.family == ChannelFamily::HighError ? 1.0 / (double(ch.d) * ch.d) : ch.p;
}

bool ansatz_has_closed_form(const ChannelParams& ch) { return ch.family != ChannelFamily::General; }

}  // namespace

double evaluate_curve(const ChannelParams& ch, const CurveSpec& curve, double mu) {
  const PauliProbTable table = ch.table();
  switch (curve.kind) {
    case CurveSpec::Kind::MaxEnt:
      if (ch.family == ChannelFamily::HighError) return mi_high_error_max_entangled(ch.d, mu).value;
      return mi_max_entangled(table, mu).value;
    case CurveSpec::Kind::Product:
      if (ch.family == ChannelFamily::HighError) return mi_high_error_product(ch.d, mu).value;
      return mi_product(table, mu).value;
    case CurveSpec::Kind::Alpha:
      if (!ansatz_has_closed_form(ch)) return evaluate_curve_oracle(ch, curve, mu);
      if (ch.family == ChannelFamily::Depolarizing) return mi_dep_alpha(ch.d, ch.p, mu, curve.angle()).value;
      return mi_qcd_alpha(ch.d, family_p_for_ansatz(ch), mu, curve.angle()).value;
    case CurveSpec::Kind::Km:
      if (ch.d != 4) throw InvalidArgument("KM curves need d = 4");
      if (!ansatz_has_closed_form(ch)) return evaluate_curve_oracle(ch, curve, mu);
      if (ch.family == ChannelFamily::Depolarizing) return mi_dep_km(ch.p, mu, curve.angle()).value;
      return mi_qcd_km(family_p_for_ansatz(ch), mu, curve.angle()).value;
    case CurveSpec::Kind::KSupport:
      if (ch.family == ChannelFamily::HighError) return mi_high_error_k(ch.d, mu, curve.k).value;
      return evaluate_curve_oracle(ch, curve, mu);
    case CurveSpec::Kind::FidMaxEnt:
      return fid_max_entangled(table, mu);
    case CurveSpec::Kind::FidProduct:
      return fid_product(table, mu);
  }
  throw InvalidArgument("unknown curve kind");
}

double evaluate_curve_oracle(const ChannelParams& ch, const CurveSpec& curve, double mu) {
  const CorrelatedChannel channel(ch.table(), mu);
  const QuditDim d(ch.d);
  switch (curve.kind) {
    case CurveSpec::Kind::MaxEnt:
      return holevo_mutual_info(channel, EnsembleSpec::max_entangled_basis()).value;
    case CurveSpec::Kind::Product:
      return holevo_mutual_info(channel, EnsembleSpec::product_basis()).value;
    case CurveSpec::Kind::Alpha:
      return holevo_mutual_info(channel, EnsembleSpec::alpha(curve.angle())).value;
    case CurveSpec::Kind::Km:
      return holevo_mutual_info(channel, EnsembleSpec::km(curve.angle())).value;
    case CurveSpec::Kind::KSupport:
      return holevo_mutual_info(channel, EnsembleSpec::diag(k_support_coeffs(d, curve.k))).value;
    case CurveSpec::Kind::FidMaxEnt: {
      const StateVector psi = EnsembleSpec::max_entangled_basis().fiducial(d);
      return fidelity(psi, apply_channel(channel, to_density(psi)));
    }
    case CurveSpec::Kind::FidProduct: {
      const StateVector psi = EnsembleSpec::product_basis().fiducial(d);
      return fidelity(psi, apply_channel(channel, to_density(psi)));
    }
  }
  throw InvalidArgument("unknown curve kind");
}

std::vector<double> uniform_grid(int points) {
  if (points < 2) throw InvalidArgument("a mu grid needs at least 2 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
  return g;
}

double SweepTable::max_spot_error() const {
  double e = 0.0;
  for (const auto& s : spot_checks) e = std::max(e, std::abs(s.closed_form - s.oracle));
  return e;
}

namespace {
std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}
}  // namespace

std::string SweepTable::to_csv() const {
  std::string out = "mu";
  for (const auto& l : labels) out += "," + l;
  out += "\n";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out += fmt12(mu[i]);
    for (const auto& col : values) out += "," + fmt12(col[i]);
    out += "\n";
  }
  return out;
}

SweepTable sweep(const ChannelParams& ch, const std::vector<CurveSpec>& curves, const std::vector<double>& grid,
                 bool spot_check) {
  if (grid.empty()) throw InvalidArgument("empty mu grid");
  if (!std::is_sorted(grid.begin(), grid.end()) || grid.front() < 0.0 || grid.back() > 1.0) {
    throw InvalidArgument("mu grid must be sorted and inside [0, 1]");
  }
  SweepTable table;
  table.channel = ch;
  table.mu = grid;
  for (const CurveSpec& c : curves) {
    table.labels.push_back(c.label);
    std::vector<double> col(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      try {
        col[i] = evaluate_curve(ch, c, grid[i]);
      } catch (const NumericError& e) {
        throw NumericError(c.label + " at mu=" + fmt12(grid[i]) + ": " + e.what());
      } catch (const InvalidArgument& e) {
        throw InvalidArgument(c.label + " at mu=" + fmt12(grid[i]) + ": " + e.what());
      }
    }
    table.values.push_back(std::move(col));
  }
  if (spot_check && ch.d <= 4) {
    const std::size_t n = grid.size();
    std::vector<std::size_t> picks{0, n / 4, n / 2, (3 * n) / 4, n - 1};
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
      for (std::size_t i : picks) {
        table.spot_checks.push_back(
            {curves[ci].label, grid[i], table.values[ci][i], evaluate_curve_oracle(ch, curves[ci], grid[i])});
      }
    }
  }
  return table;
}

std::string_view crossover_kind_name(CrossoverReport::Kind k) {
  switch (k) {
    case CrossoverReport::Kind::Interior:
      return "interior";
    case CrossoverReport::Kind::BoundaryTouch:
      return "boundary-touch";
    case CrossoverReport::Kind::NoCrossing:
      return "no-crossing";
    case CrossoverReport::Kind::Degenerate:
      return "degenerate";
  }
  return "unknown";
}

CrossoverReport find_crossover(const std::function<double(double)>& f_a, const std::function<double(double)>& f_b,
                               const std::vector<double>& grid) {
  if (grid.size() < 2) throw InvalidArgument("crossover search needs at least 2 grid points");
  constexpr double kZero = 1e-12;
  auto delta = [&](double mu) { return f_a(mu) - f_b(mu); };
  std::vector<double> dv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) dv[i] = delta(grid[i]);

  CrossoverReport rep;
  if (std::all_of(dv.begin(), dv.end(), [](double v) { return std::abs(v) <= kZero; })) {
    rep.kind = CrossoverReport::Kind::Degenerate;
    rep.lo = grid.front();
    rep.hi = grid.back();
    return rep;
  }
  // Grid points where the difference has a definite sign. A tie exactly on
  // an interior grid point is bracketed by its neighbours.
  std::vector<std::size_t> signed_idx;
  for (std::size_t i = 0; i < dv.size(); ++i) {
    if (std::abs(dv[i]) > kZero) signed_idx.push_back(i);
  }
  for (std::size_t s = 0; s + 1 < signed_idx.size(); ++s) {
    const std::size_t i = signed_idx[s], j = signed_idx[s + 1];
    if ((dv[i] > 0) == (dv[j] > 0)) continue;
    double lo = grid[i], hi = grid[j];
    const bool lo_positive = dv[i] > 0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double v = delta(mid);
      if (v == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((v > 0) == lo_positive) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    rep.kind = CrossoverReport::Kind::Interior;
    rep.lo = lo;
    rep.hi = hi;
    rep.mu_t = 0.5 * (lo + hi);
    rep.residual = std::abs(delta(rep.mu_t));
    return rep;
  }
  // No sign change. A zero at an end of the interval is a boundary touch.
  if (std::abs(dv.front()) <= kZero) {
    rep.kind = CrossoverReport::Kind::BoundaryTouch;
    rep.mu_t = rep.lo = rep.hi = grid.front();
    rep.residual = std::abs(dv.front());
    return rep;
  }
  if (std::abs(dv.back()) <= kZero) {
    rep.kind = CrossoverReport::Kind::BoundaryTouch;
    rep.mu_t = rep.lo = rep.hi = grid.back();
    rep.residual = std::abs(dv.back());
    return rep;
  }
  rep.kind = CrossoverReport::Kind::NoCrossing;
  rep.lo = grid.front();
  rep.hi = grid.back();
  return rep;
}

CrossoverReport find_crossover(const ChannelParams& ch, const CurveSpec& a, const CurveSpec& b,
                               const std::vector<double>& grid) {
  return find_crossover([&](double mu) { return evaluate_curve(ch, a, mu); },
                        [&](double mu) { return evaluate_curve(ch, b, mu); }, grid);
}

}  // namespace qmc
