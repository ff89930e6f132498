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

// One PASS/FAIL line per acceptance criterion. Tolerances are pinned.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run one; exit status 0 iff it passes

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "qmc/analysis.hpp"
#include "qmc/channel_oracle.hpp"
#include "qmc/closed_forms.hpp"
#include "qmc/errors.hpp"

namespace {

using namespace qmc;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::mt19937_64& rng() {
  static std::mt19937_64 g(20260101);
  return g;
}

double u01() { return std::uniform_real_distribution<double>(0, 1)(rng()); }

PauliProbTable random_table(int d) {
  double w[4];
  for (double& x : w) x = u01();
  const double n = w[0] + (d - 1) * (w[1] + w[2]) + (d - 1.0) * (d - 1.0) * w[3];
  return PauliProbTable(QuditDim(d), w[0] / n, w[1] / n, w[2] / n, w[3] / n);
}

DensityMatrix random_state(int d) {
  const auto D = static_cast<Eigen::Index>(ipow(d, d));
  std::normal_distribution<double> n01;
  Matrix a(D, D);
  for (Eigen::Index i = 0; i < D; ++i) {
    for (Eigen::Index j = 0; j < D; ++j) a(i, j) = Complex(n01(rng()), n01(rng()));
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(QuditDim(d), 0.5 * (rho + rho.adjoint()));
}

double gap(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Outcome c1_algebra() {
  double unit = 0.0, order = 0.0, comm = 0.0;
  for (int d = 2; d <= 5; ++d) {
    const QuditDim dd(d);
    std::vector<Matrix> u;
    for (int a = 0; a < d * d; ++a) {
      u.push_back(gen_pauli(dd, {a / d, a % d}));
      unit = std::max(unit, unitarity_error(u.back()));
    }
    Matrix pw = Matrix::Identity(d, d);
    for (int i = 0; i < d; ++i) pw = pw * u[static_cast<std::size_t>(d)];  // U_{1,0}
    order = std::max(order, gap(pw, Matrix::Identity(d, d)));
    for (int a = 0; a < d * d; ++a) {
      for (int b = 0; b < d * d; ++b) {
        const Complex c = commutation_phase(dd, {a / d, a % d}, {b / d, b % d});
        comm = std::max(comm, gap(u[a] * u[b], c * (u[b] * u[a])));
      }
    }
  }
  return {unit <= 1e-12 && order <= 1e-12 && comm <= 1e-12,
          "unitarity " + sci(unit) + ", shift^d " + sci(order) + ", commutation " + sci(comm) + " (limit 1e-12)"};
}

Outcome c2_kraus() {
  double complete = 0.0, paths = 0.0;
  for (int d = 2; d <= 3; ++d) {
    for (int i = 0; i < 50; ++i) {
      const CorrelatedChannel ch(random_table(d), u01());
      const Matrix s = kraus_completeness(ch);
      complete = std::max(complete, gap(s, Matrix::Identity(s.rows(), s.cols())));
      if (d == 2) {
        const DensityMatrix rho = random_state(2);
        paths = std::max(paths, gap(apply_channel(ch, rho).matrix(), apply_channel_kraus_sum(ch, rho).matrix()));
      }
    }
  }
  return {complete <= 1e-10 && paths <= 1e-12,
          "completeness " + sci(complete) + " (limit 1e-10), decomposition vs enumeration " + sci(paths) +
              " (limit 1e-12)"};
}

Outcome c3_sanity() {
  double herm = 0.0, trace = 0.0, min_ev = 0.0, unital = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 3;
    const CorrelatedChannel ch(random_table(d), u01());
    const DensityCheck c = check_density(apply_channel(ch, random_state(d)).matrix());
    herm = std::max(herm, c.hermiticity_error);
    trace = std::max(trace, c.trace_error);
    min_ev = std::min(min_ev, c.min_eigenvalue);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(QuditDim(d));
    unital = std::max(unital, gap(apply_channel(ch, mixed).matrix(), mixed.matrix()));
  }
  return {herm <= 1e-10 && trace <= 1e-10 && min_ev >= -1e-9 && unital <= 1e-10,
          "hermiticity " + sci(herm) + ", trace " + sci(trace) + ", min eigenvalue " + sci(min_ev) + ", unital " +
              sci(unital)};
}

Outcome c4_endpoint() {
  const QuditDim d4(4);
  const std::vector<std::pair<std::string, PauliProbTable>> tables{{"general", random_table(4)},
                                                                   {"quasi-classical", quasi_classical(d4, 0.15)},
                                                                   {"depolarizing", depolarizing(d4, 0.7)},
                                                                   {"high-error", high_error(d4)}};
  double worst = 0.0;
  for (const auto& [name, t] : tables) {
    const double oracle = holevo_mutual_info(CorrelatedChannel(t, 1.0), EnsembleSpec::max_entangled_basis()).value;
    const double closed = mi_max_entangled(t, 1.0).value;
    worst = std::max({worst, std::abs(oracle - 8.0), std::abs(closed - 8.0)});
  }
  return {worst <= 1e-9, "max |I - 8| over 4 families, oracle and closed form: " + sci(worst) + " (limit 1e-9)"};
}

Outcome c5_high_error() {
  const CorrelatedChannel ch(high_error(QuditDim(2)), 0.5);
  const double o_me = holevo_mutual_info(ch, EnsembleSpec::max_entangled_basis()).value;
  const double o_pro = holevo_mutual_info(ch, EnsembleSpec::product_basis()).value;
  const double c_me = mi_high_error_max_entangled(2, 0.5).value;
  const double c_pro = mi_high_error_product(2, 0.5).value;
  const double agree = std::max(std::abs(o_me - c_me), std::abs(o_pro - c_pro));
  const bool near = std::abs(o_me - 0.45121) < 5e-6 && std::abs(o_pro - 0.18872) < 5e-6;
  const double zero = std::max(std::abs(mi_high_error_max_entangled(2, 0.0).value),
                               std::abs(mi_high_error_product(2, 0.0).value));
  char buf[256];
  std::snprintf(buf, sizeof buf, "I_maxent %.6f, I_product %.6f, closed vs oracle %s, mu=0 values %s", c_me, c_pro,
                sci(agree).c_str(), sci(zero).c_str());
  return {near && agree <= 1e-9 && zero <= 1e-12, buf};
}

Outcome c6_oracle_agreement() {
  const ValidationReport report = validate(7, 1e-8);
  double worst = 0.0;
  int checked = 0;
  for (const auto& e : report.entries) {
    if (e.informational) continue;
    worst = std::max(worst, e.max_error);
    ++checked;
  }
  std::ifstream f(std::string(QMC_SOURCE_DIR) + "/ERRATA.md");
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string errata = ss.str();
  int missing = 0;
  for (const ErratumInfo& e : errata_registry()) {
    const std::string heading = "## " + std::string(e.tag) + " ";
    if (errata.find(heading) == std::string::npos || errata.find(std::string(e.correction)) == std::string::npos) {
      ++missing;
    }
  }
  return {report.all_pass() && missing == 0 && !errata.empty(),
          std::to_string(checked) + " checks, max error " + sci(worst) + " (limit 1e-8); ERRATA.md entries missing: " +
              std::to_string(missing)};
}

Outcome c7_threshold() {
  double worst = 0.0;
  int interior = 0;
  for (int attempt = 0; interior < 20 && attempt < 10000; ++attempt) {
    const int d = 2 + attempt % 3;
    const PauliProbTable t = depolarizing(QuditDim(d), u01());
    const ThresholdResult r = fid_threshold_mu(t.p(), t.q(), d);
    if (r.kind != ThresholdResult::Kind::Value) continue;
    worst = std::max(worst, std::abs(fid_max_entangled(t, r.mu) - fid_product(t, r.mu)));
    ++interior;
  }
  bool symmetric_zero = true;
  for (int d = 2; d <= 5; ++d) {
    const ThresholdResult r = fid_threshold_mu(1.0 / (d * d), 1.0 / (d * d), d);
    symmetric_zero = symmetric_zero && r.kind == ThresholdResult::Kind::Value && r.mu == 0.0;
  }
  bool decreasing = true;
  std::string seq;
  double prev = 2.0;
  for (int d = 2; d <= 5; ++d) {
    const double q = 0.01;
    const ThresholdResult r = fid_threshold_mu(1.0 - (d * d - 1.0) * q, q, d);
    decreasing = decreasing && r.kind == ThresholdResult::Kind::Value && r.mu < prev;
    prev = r.mu;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.4f", d > 2 ? " > " : "", r.mu);
    seq += buf;
  }
  return {interior == 20 && worst <= 1e-9 && symmetric_zero && decreasing,
          "|F_maxent - F_product| at threshold " + sci(worst) + " over " + std::to_string(interior) +
              " tables; p=q gives 0: " + (symmetric_zero ? "yes" : "no") + "; q=0.01, d=2..5: " + seq};
}

Outcome c8_figures() {
  int failed = 0, total = 0;
  std::string detail;
  for (const FigurePreset& preset : figure_presets()) {
    const SweepTable table = sweep(preset.channel, preset.curves, uniform_grid(preset.points));
    for (const PropertyCheck& c : check_figure(preset, table)) {
      ++total;
      if (!c.pass) {
        ++failed;
        detail += "\n    FAIL " + c.name + ": " + c.detail;
      }
    }
  }
  return {failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " figure checks pass" + detail};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome c9_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("qmc_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> jobs{"validate --seed 7"};
  for (const auto& p : figure_presets()) jobs.push_back("figure " + p.name);
  int differing = 0;
  std::string which;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    std::string outs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("out_" + std::to_string(j) + "_" + std::to_string(rep) + ".txt");
      const std::string cmd = std::string("\"") + QMC_CLI_PATH + "\" " + jobs[j] + " --out \"" + out.string() +
                              "\" > /dev/null 2>&1";
      if (std::system(cmd.c_str()) == -1) return {false, "could not run " + cmd};
      outs[rep] = slurp(out);
    }
    if (outs[0].empty() || outs[0] != outs[1]) {
      ++differing;
      which += " " + jobs[j];
    }
  }
  fs::remove_all(dir);
  return {differing == 0, std::to_string(jobs.size()) + " outputs compared byte for byte" +
                              (differing ? ", differing or empty:" + which : std::string(", all identical"))};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "algebra", 5, c1_algebra},
      {2, "kraus completeness", 30, c2_kraus},
      {3, "channel sanity", 60, c3_sanity},
      {4, "capacity endpoint", 30, c4_endpoint},
      {5, "high-error closed forms", 30, c5_high_error},
      {6, "oracle agreement", 180, c6_oracle_agreement},
      {7, "fidelity threshold", 30, c7_threshold},
      {8, "figure reproduction", 120, c8_figures},
      {9, "determinism", 300, c9_determinism},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  if (only < 0 || only > 9) {
    std::fprintf(stderr, "usage: acceptance [--criterion 1..9]\n");
    return 1;
  }
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    std::printf("criterion %d [%s]: %s (%.1fs, budget %.0fs) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs,
                c.budget_s, o.detail.c_str());
    all = all && pass;
  }
  return all ? 0 : 1;
}
