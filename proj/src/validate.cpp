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
#include <functional>
#include <random>
#include <sstream>

#include "qmc/analysis.hpp"
#include "qmc/channel_oracle.hpp"
#include "qmc/closed_forms.hpp"
#include "qmc/errors.hpp"
#include "qmc/kernels.hpp"
#include "qmc/state_factory.hpp"

namespace qmc {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& g, double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(g); }

double matrix_gap(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

PauliProbTable random_table(Rng& g, ChannelFamily family, int d) {
  const QuditDim dd(d);
  switch (family) {
    case ChannelFamily::QuasiClassical:
      return quasi_classical(dd, uniform(g, 0.0, 1.0 / d));
    case ChannelFamily::Depolarizing:
      return depolarizing(dd, uniform(g));
    case ChannelFamily::HighError:
      return high_error(dd);
    case ChannelFamily::General:
      break;
  }
  double w[4];
  for (double& x : w) x = uniform(g);
  const double n = w[0] + (d - 1) * (w[1] + w[2]) + (d - 1.0) * (d - 1.0) * w[3];
  return PauliProbTable(dd, w[0] / n, w[1] / n, w[2] / n, w[3] / n);
}

// Runs `points` samples of `residual` and records the largest.
class Runner {
 public:
  Runner(ValidationReport& report, double tol) : report_(report), tol_(tol) {}

  void check(const std::string& name, int points, const std::function<double()>& residual, double tol = -1.0) {
    add(name, points, residual, tol < 0 ? tol_ : tol, false);
  }
  void inform(const std::string& name, int points, const std::function<double()>& residual) {
    add(name, points, residual, tol_, true);
  }

 private:
  void add(const std::string& name, int points, const std::function<double()>& residual, double tol, bool info) {
    ValidationEntry e;
    e.name = name;
    e.tolerance = tol;
    e.informational = info;
    try {
      for (int i = 0; i < points; ++i) {
        const double r = residual();
        e.max_error = std::isnan(r) ? std::numeric_limits<double>::infinity() : std::max(e.max_error, r);
        ++e.points;
      }
      e.pass = e.max_error <= tol;
    } catch (const NumericError& ex) {
      e.max_error = std::numeric_limits<double>::infinity();
      e.pass = false;
      e.note = std::string("invalid spectrum: ") + ex.what();
    }
    report_.entries.push_back(std::move(e));
  }

  ValidationReport& report_;
  double tol_;
};

std::string dim_tag(const char* family, int d) { return std::string(family) + " d=" + std::to_string(d); }

double me_fidelity_oracle(const CorrelatedChannel& ch) {
  const StateVector psi = EnsembleSpec::max_entangled_basis().fiducial(ch.dim());
  return fidelity(psi, apply_channel(ch, to_density(psi)));
}

double pro_fidelity_oracle(const CorrelatedChannel& ch) {
  const StateVector psi = EnsembleSpec::product_basis().fiducial(ch.dim());
  return fidelity(psi, apply_channel(ch, to_density(psi)));
}

// Marginals used by the block-output formula: a, b, and the coherence weight.
struct GhzParts {
  double a, b, off;
};

GhzParts ghz_parts(const PauliProbTable& t, double mu) {
  const int d = t.d();
  if (t.family() == ChannelFamily::Depolarizing) {
    const double a = t.no_shift_marginal(), b = d * t.q();
    double pw = 1.0;
    for (int i = 0; i < d; ++i) pw *= (a - b);
    return {a, b, (1.0 - mu) * pw + mu * a};
  }
  const double a = d * t.p();
  return {a, d * t.r(), mu * a};
}

double ghz_gap(Rng& g, ChannelFamily family, int d, Reading reading = {}) {
  const QuditDim dd(d);
  const double mu = uniform(g), alpha = uniform(g, 0.0, 1.5707963);
  const CorrelatedChannel ch(random_table(g, family, d), mu);
  const DiagonalCoeffs coeffs = alpha_coeffs(dd, alpha);
  const DensityMatrix out = apply_channel(ch, to_density(alpha_state(dd, alpha)));
  const GhzParts parts = ghz_parts(ch.table(), mu);
  const Matrix closed = ghz_block_output(d, parts.a, parts.b, parts.off, mu, coeffs.values(), reading);
  return matrix_gap(cnot_conjugate(out, false).matrix(), closed);
}

void closed_form_matrix(Runner& run, Rng& g, int d, int n) {
  const QuditDim dd(d);
  const std::pair<ChannelFamily, const char*> families[] = {{ChannelFamily::General, "general"},
                                                            {ChannelFamily::QuasiClassical, "quasi-classical"},
                                                            {ChannelFamily::Depolarizing, "depolarizing"}};
  for (const auto& [family, fname] : families) {
    const std::string tag = " [" + dim_tag(fname, d) + "]";
    run.check("fid_max_entangled" + tag, n, [&, family = family] {
      const CorrelatedChannel ch(random_table(g, family, d), uniform(g));
      return std::abs(fid_max_entangled(ch.table(), ch.mu()) - me_fidelity_oracle(ch));
    });
    run.check("fid_product" + tag, n, [&, family = family] {
      const CorrelatedChannel ch(random_table(g, family, d), uniform(g));
      return std::abs(fid_product(ch.table(), ch.mu()) - pro_fidelity_oracle(ch));
    });
    run.check("mi_max_entangled" + tag, n, [&, family = family] {
      const CorrelatedChannel ch(random_table(g, family, d), uniform(g));
      return std::abs(mi_max_entangled(ch.table(), ch.mu()).value -
                      holevo_mutual_info(ch, EnsembleSpec::max_entangled_basis()).value);
    });
    run.check("mi_product" + tag, n, [&, family = family] {
      const CorrelatedChannel ch(random_table(g, family, d), uniform(g));
      return std::abs(mi_product(ch.table(), ch.mu()).value -
                      holevo_mutual_info(ch, EnsembleSpec::product_basis()).value);
    });
  }

  run.check("mi_qcd_alpha [" + dim_tag("quasi-classical", d) + "]", n, [&] {
    const double p = uniform(g, 0.0, 1.0 / d), mu = uniform(g), alpha = uniform(g, 0.0, 1.5707963);
    const CorrelatedChannel ch(quasi_classical(dd, p), mu);
    return std::abs(mi_qcd_alpha(d, p, mu, alpha).value - holevo_mutual_info(ch, EnsembleSpec::alpha(alpha)).value);
  });
  run.check("mi_dep_alpha [" + dim_tag("depolarizing", d) + "]", n, [&] {
    const double p = uniform(g), mu = uniform(g), alpha = uniform(g, 0.0, 1.5707963);
    const CorrelatedChannel ch(depolarizing(dd, p), mu);
    return std::abs(mi_dep_alpha(d, p, mu, alpha).value - holevo_mutual_info(ch, EnsembleSpec::alpha(alpha)).value);
  });
  if (d == 4) {
    run.check("mi_qcd_km [" + dim_tag("quasi-classical", d) + "]", n, [&] {
      const double p = uniform(g, 0.0, 0.25), mu = uniform(g), theta = uniform(g, 0.0, 1.5707963);
      const CorrelatedChannel ch(quasi_classical(dd, p), mu);
      return std::abs(mi_qcd_km(p, mu, theta).value - holevo_mutual_info(ch, EnsembleSpec::km(theta)).value);
    });
    run.check("mi_dep_km [" + dim_tag("depolarizing", d) + "]", n, [&] {
      const double p = uniform(g), mu = uniform(g), theta = uniform(g, 0.0, 1.5707963);
      const CorrelatedChannel ch(depolarizing(dd, p), mu);
      return std::abs(mi_dep_km(p, mu, theta).value - holevo_mutual_info(ch, EnsembleSpec::km(theta)).value);
    });
  }

  const std::string he = " [" + dim_tag("high-error", d) + "]";
  run.check("mi_high_error_max_entangled" + he, n, [&] {
    const CorrelatedChannel ch(high_error(dd), uniform(g));
    return std::abs(mi_high_error_max_entangled(d, ch.mu()).value -
                    holevo_mutual_info(ch, EnsembleSpec::max_entangled_basis()).value);
  });
  run.check("mi_high_error_product" + he, n, [&] {
    const CorrelatedChannel ch(high_error(dd), uniform(g));
    return std::abs(mi_high_error_product(d, ch.mu()).value -
                    holevo_mutual_info(ch, EnsembleSpec::product_basis()).value);
  });
  run.check("mi_high_error_k" + he, n, [&] {
    const CorrelatedChannel ch(high_error(dd), uniform(g));
    const int k = 1 + static_cast<int>(uniform(g) * d) % d;
    return std::abs(mi_high_error_k(d, ch.mu(), k).value -
                    holevo_mutual_info(ch, EnsembleSpec::diag(k_support_coeffs(dd, k))).value);
  });
  run.check("purity_high_error" + he, n, [&] {
    const CorrelatedChannel ch(high_error(dd), uniform(g));
    const StateVector psi = EnsembleSpec::max_entangled_basis().fiducial(dd);
    return std::abs(purity_high_error(d, ch.mu()) - purity(apply_channel(ch, to_density(psi))));
  });

  run.check("ghz_block_output [" + dim_tag("quasi-classical", d) + "]", n,
            [&] { return ghz_gap(g, ChannelFamily::QuasiClassical, d); });
  run.check("ghz_block_output [" + dim_tag("depolarizing", d) + "]", n,
            [&] { return ghz_gap(g, ChannelFamily::Depolarizing, d); });
}

void threshold_checks(Runner& run, Rng& g, const std::vector<int>& dims, int n) {
  for (int d : dims) {
    run.check("fid_threshold_mu [" + dim_tag("depolarizing", d) + "]", n, [&] {
      // Resample until the threshold is interior; the first draws usually are.
      for (int attempt = 0; attempt < 1000; ++attempt) {
        const PauliProbTable t = depolarizing(QuditDim(d), uniform(g));
        const ThresholdResult th = fid_threshold_mu(t.p(), t.q(), d);
        if (th.kind != ThresholdResult::Kind::Value) continue;
        return std::abs(fid_max_entangled(t, th.mu) - fid_product(t, th.mu));
      }
      throw NumericError("no interior fidelity threshold found");
    });
  }
}

void structural_checks(Runner& run, Rng& g, double tol) {
  const QuditDim d2(2);
  run.check("kraus enumeration vs decomposition [d=2]", 20, [&] {
    const CorrelatedChannel ch(random_table(g, ChannelFamily::General, 2), uniform(g));
    const DensityMatrix rho = to_density(alpha_state(d2, uniform(g, 0.0, 1.5707963)));
    return matrix_gap(apply_channel(ch, rho).matrix(), apply_channel_kraus_sum(ch, rho).matrix());
  }, std::min(tol, 1e-12));

  const std::pair<const char*, std::function<EnsembleSpec()>> ensembles[] = {
      {"max-entangled basis", [] { return EnsembleSpec::max_entangled_basis(); }},
      {"product basis", [] { return EnsembleSpec::product_basis(); }},
      {"alpha", [&] { return EnsembleSpec::alpha(uniform(g, 0.0, 1.5707963)); }},
  };
  for (const auto& [name, make] : ensembles) {
    run.check(std::string("holevo shortcut vs direct sum, ") + name + " [d=2]", 10, [&, make = make] {
      const CorrelatedChannel ch(random_table(g, ChannelFamily::General, 2), uniform(g));
      const EnsembleSpec ens = make();
      return std::abs(holevo_mutual_info(ch, ens).value - holevo_direct_sum(ch, ens).value);
    });
  }

  const kernels::Isa saved = kernels::active().isa;
  for (kernels::Isa isa : {kernels::Isa::Avx2, kernels::Isa::Neon}) {
    if (!kernels::available(isa)) continue;
    run.check("apply_channel " + std::string(kernels::isa_name(isa)) + " vs scalar [d=4]", 5, [&, isa = isa] {
      const CorrelatedChannel ch(random_table(g, ChannelFamily::General, 4), uniform(g));
      const DensityMatrix rho = to_density(alpha_state(QuditDim(4), uniform(g, 0.0, 1.5707963)));
      kernels::select(kernels::Isa::Scalar);
      const Matrix ref = apply_channel(ch, rho).matrix();
      kernels::select(isa);
      const Matrix vec = apply_channel(ch, rho).matrix();
      kernels::select(saved);
      return matrix_gap(ref, vec);
    }, std::max(tol, 1e-13));
  }
  kernels::select(saved);

  // Quasi-classical memoryless output is already phase-averaged, so the
  // twirl leaves it unchanged. With memory the correlated part keeps
  // coherences; that gap is reported only.
  for (int d = 2; d <= 3; ++d) {
    const QuditDim dd(d);
    run.check("twirl fixes memoryless quasi-classical output [d=" + std::to_string(d) + "]", 5, [&] {
      const CorrelatedChannel ch(quasi_classical(dd, uniform(g, 0.0, 1.0 / d)), 0.0);
      const DensityMatrix out = apply_channel(ch, to_density(alpha_state(dd, uniform(g, 0.0, 1.5707963))));
      return matrix_gap(twirl(out).matrix(), out.matrix());
    });
    run.inform("twirl gap with memory, quasi-classical [d=" + std::to_string(d) + "]", 5, [&] {
      const CorrelatedChannel ch(quasi_classical(dd, uniform(g, 0.0, 1.0 / d)), uniform(g, 0.1, 1.0));
      const DensityMatrix out = apply_channel(ch, to_density(alpha_state(dd, uniform(g, 0.3, 1.2))));
      return matrix_gap(twirl(out).matrix(), out.matrix());
    });
  }
}

// Each evaluable printed form, measured against the oracle at d = 4.
void errata_residuals(Runner& run, Rng& g, int n) {
  const int d = 4;
  const QuditDim dd(d);
  for (const ErratumInfo& info : errata_registry()) {
    const std::string name = "as printed " + std::string(info.tag) + ": " + std::string(info.formula);
    if (!info.evaluable) {
      run.inform(name + " (not evaluable)", 0, [] { return 0.0; });
      continue;
    }
    const Reading rd = Reading::as_stated(info.id);
    std::function<double()> residual;
    switch (info.id) {
      case Erratum::FidelityCrossTerm:
        residual = [&, rd] {
          const CorrelatedChannel ch(random_table(g, ChannelFamily::General, d), uniform(g));
          return std::abs(fid_max_entangled(ch.table(), ch.mu(), rd) - me_fidelity_oracle(ch));
        };
        break;
      case Erratum::ProductMarginals:
        residual = [&, rd] {
          const CorrelatedChannel ch(random_table(g, ChannelFamily::General, d), uniform(g));
          return std::abs(mi_product(ch.table(), ch.mu(), rd).value -
                          holevo_mutual_info(ch, EnsembleSpec::product_basis()).value);
        };
        break;
      case Erratum::StrayTensorPower:
        residual = [&, rd] {
          const CorrelatedChannel ch(random_table(g, ChannelFamily::General, d), uniform(g));
          return std::abs(mi_max_entangled(ch.table(), ch.mu(), rd).value -
                          holevo_mutual_info(ch, EnsembleSpec::max_entangled_basis()).value);
        };
        break;
      case Erratum::QuasiClassicalB:
      case Erratum::GhzEigenvalues:
        residual = [&, rd] {
          const double p = uniform(g, 0.0, 0.25), mu = uniform(g), alpha = uniform(g, 0.0, 1.5707963);
          const CorrelatedChannel ch(quasi_classical(dd, p), mu);
          return std::abs(mi_qcd_alpha(d, p, mu, alpha, rd).value -
                          holevo_mutual_info(ch, EnsembleSpec::alpha(alpha)).value);
        };
        break;
      case Erratum::OutputMatrixStrayFactor:
      case Erratum::OutputMatrixPrefactor:
        residual = [&, rd] { return ghz_gap(g, ChannelFamily::QuasiClassical, d, rd); };
        break;
      case Erratum::DepolarizingT:
      case Erratum::DepolarizingSecondPart:
        residual = [&, rd] {
          const double p = uniform(g), mu = uniform(g), alpha = uniform(g, 0.0, 1.5707963);
          const CorrelatedChannel ch(depolarizing(dd, p), mu);
          return std::abs(mi_dep_alpha(d, p, mu, alpha, rd).value -
                          holevo_mutual_info(ch, EnsembleSpec::alpha(alpha)).value);
        };
        break;
      case Erratum::KmEigenvalues:
        residual = [&, rd] {
          const double p = uniform(g, 0.0, 0.25), mu = uniform(g), theta = uniform(g, 0.0, 1.5707963);
          const CorrelatedChannel ch(quasi_classical(dd, p), mu);
          return std::abs(mi_qcd_km(p, mu, theta, rd).value - holevo_mutual_info(ch, EnsembleSpec::km(theta)).value);
        };
        break;
      case Erratum::DepolarizingKmWV:
        residual = [&, rd] {
          const double p = uniform(g), mu = uniform(g), theta = uniform(g, 0.0, 1.5707963);
          const CorrelatedChannel ch(depolarizing(dd, p), mu);
          return std::abs(mi_dep_km(p, mu, theta, rd).value - holevo_mutual_info(ch, EnsembleSpec::km(theta)).value);
        };
        break;
    }
    run.inform(name, n, residual);
  }
}

}  // namespace

bool ValidationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const ValidationEntry& e) { return e.informational || e.pass; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  char buf[512];
  std::snprintf(buf, sizeof buf, "validate seed=%llu tol=%.3g\n", static_cast<unsigned long long>(seed), tolerance);
  os << buf;
  for (const ValidationEntry& e : entries) {
    const char* status = e.informational ? "INFO" : (e.pass ? "PASS" : "FAIL");
    std::snprintf(buf, sizeof buf, "%-4s  max_err=%-10.3e tol=%-8.1e n=%-3d %s", status, e.max_error, e.tolerance,
                  e.points, e.name.c_str());
    os << buf;
    if (!e.note.empty()) os << "  (" << e.note << ")";
    os << '\n';
  }
  os << "overall: " << (all_pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

ValidationReport validate(std::uint64_t seed, double tolerance, const ValidateOptions& options) {
  if (!(tolerance >= 0.0)) throw InvalidArgument("tolerance must be non-negative");
  ValidationReport report;
  report.seed = seed;
  report.tolerance = tolerance;
  Rng g(seed);
  Runner run(report, tolerance);
  for (int d : options.dims) closed_form_matrix(run, g, d, options.points_per_family);
  threshold_checks(run, g, options.dims, options.points_per_family);
  structural_checks(run, g, tolerance);
  errata_residuals(run, g, 5);
  return report;
}

}  // namespace qmc
