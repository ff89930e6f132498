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

#include "qmc/cli_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmc/channel_oracle.hpp"
#include "qmc/closed_forms.hpp"
#include "qmc/errors.hpp"
#include "qmc/kernels.hpp"
#include "qmc/state_factory.hpp"

namespace qmc {

namespace {

using nlohmann::json;

// q, r, t only mean something for the general family; the other families
// derive them, so they are zeroed to give one canonical form per channel.
ChannelParams canonical(ChannelParams ch) {
  if (ch.family != ChannelFamily::General) ch.q = ch.r = ch.t = 0.0;
  if (ch.family == ChannelFamily::HighError) ch.p = 1.0 / (double(ch.d) * ch.d);
  return ch;
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

kernels::Isa parse_isa(const std::string& s) {
  if (s == "auto") return kernels::detect_best();
  if (s == "scalar") return kernels::Isa::Scalar;
  if (s == "avx2") return kernels::Isa::Avx2;
  if (s == "neon") return kernels::Isa::Neon;
  throw InvalidArgument("unknown --isa '" + s + "' (auto, scalar, avx2, neon)");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open '" + cfg.out + "' for writing");
  f << text;
  if (!f) throw InvalidArgument("failed writing '" + cfg.out + "'");
}

// Everything that can be rejected without computing anything.
void check_config(const RunConfig& cfg) {
  if (cfg.command == "validate" || cfg.command == "figure") return;
  (void)cfg.channel.table();
  if (cfg.mu) (void)CorrelatedChannel(cfg.channel.table(), *cfg.mu);
  if (cfg.method != "closed-form" && cfg.method != "oracle") {
    throw InvalidArgument("unknown --method '" + cfg.method + "' (closed-form, oracle)");
  }
  if (cfg.command == "fidelity" || cfg.command == "mutualinfo") {
    if (!cfg.mu) throw InvalidArgument(cfg.command + " needs --mu");
    if (cfg.curves.size() != 1) throw InvalidArgument(cfg.command + " needs exactly one --state");
  }
  if (cfg.command == "crossover" && cfg.curves.size() != 2) {
    throw InvalidArgument("crossover needs exactly two --curves");
  }
  for (const auto& c : cfg.curves) (void)CurveSpec::parse(c);
  if (cfg.grid_points < 2) throw InvalidArgument("--points must be at least 2");
}

StateVector fiducial_state(QuditDim d, const CurveSpec& c) {
  switch (c.kind) {
    case CurveSpec::Kind::MaxEnt:
    case CurveSpec::Kind::FidMaxEnt:
      return EnsembleSpec::max_entangled_basis().fiducial(d);
    case CurveSpec::Kind::Product:
    case CurveSpec::Kind::FidProduct:
      return EnsembleSpec::product_basis().fiducial(d);
    case CurveSpec::Kind::Alpha:
      return alpha_state(d, c.angle());
    case CurveSpec::Kind::Km:
      return km_state(c.angle());
    case CurveSpec::Kind::KSupport:
      return diag_state(d, k_support_coeffs(d, c.k));
  }
  throw InvalidArgument("unknown state");
}

int cmd_pauli(const RunConfig& cfg, std::ostream& out) {
  const QuditDim d(cfg.channel.d);
  const Matrix u = gen_pauli(d, {cfg.shift, cfg.phase});
  std::string text;
  char buf[96];
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const double re = std::abs(u(i, j).real()) < 5e-13 ? 0.0 : u(i, j).real();
      const double im = std::abs(u(i, j).imag()) < 5e-13 ? 0.0 : u(i, j).imag();
      std::snprintf(buf, sizeof buf, "%s%.12f%+.12fi", j ? " " : "", re, im);
      text += buf;
    }
    text += '\n';
  }
  emit(cfg, text, out);
  return 0;
}

int cmd_fidelity(const RunConfig& cfg, std::ostream& out) {
  const CurveSpec state = CurveSpec::parse(cfg.curves.front());
  const bool has_closed = state.kind == CurveSpec::Kind::MaxEnt || state.kind == CurveSpec::Kind::Product;
  double value;
  if (cfg.method == "closed-form" && has_closed) {
    const PauliProbTable t = cfg.channel.table();
    value = state.kind == CurveSpec::Kind::MaxEnt ? fid_max_entangled(t, *cfg.mu) : fid_product(t, *cfg.mu);
  } else {
    const CorrelatedChannel ch(cfg.channel.table(), *cfg.mu);
    const StateVector psi = fiducial_state(ch.dim(), state);
    value = fidelity(psi, apply_channel(ch, to_density(psi)));
  }
  emit(cfg, fixed12(value) + "\n", out);
  return 0;
}

int cmd_mutualinfo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CurveSpec state = CurveSpec::parse(cfg.curves.front());
  double value;
  if (cfg.method == "oracle") {
    value = evaluate_curve_oracle(cfg.channel, state, *cfg.mu);
  } else {
    try {
      value = evaluate_curve(cfg.channel, state, *cfg.mu);
    } catch (const NumericError& e) {
      if (cfg.strict) throw;
      err << "warning: closed form failed (" << e.what() << "), using the oracle\n";
      value = evaluate_curve_oracle(cfg.channel, state, *cfg.mu);
    }
  }
  emit(cfg, fixed12(value) + "\n", out);
  return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<CurveSpec> curves;
  for (const auto& c : cfg.curves) curves.push_back(CurveSpec::parse(c));
  if (curves.empty()) curves = {CurveSpec::parse("product"), CurveSpec::parse("maxent")};
  const SweepTable table = sweep(cfg.channel, curves, uniform_grid(cfg.grid_points));
  emit(cfg, table.to_csv(), out);
  return 0;
}

int cmd_crossover(const RunConfig& cfg, std::ostream& out) {
  const CurveSpec a = CurveSpec::parse(cfg.curves[0]);
  const CurveSpec b = CurveSpec::parse(cfg.curves[1]);
  const CrossoverReport r = find_crossover(cfg.channel, a, b, uniform_grid(cfg.grid_points));
  char buf[256];
  std::snprintf(buf, sizeof buf, "curves: %s %s\nkind: %s\nmu_t: %.12f\nbracket: %.12f %.12f\nresidual: %.3e\n",
                a.label.c_str(), b.label.c_str(), std::string(crossover_kind_name(r.kind)).c_str(), r.mu_t, r.lo,
                r.hi, r.residual);
  emit(cfg, buf, out);
  if (cfg.strict && r.kind == CrossoverReport::Kind::NoCrossing) return 2;
  return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const ValidationReport report = validate(cfg.seed, cfg.tol);
  emit(cfg, report.to_text(), out);
  return report.all_pass() ? 0 : 1;
}

int cmd_figure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FigurePreset& preset = figure_preset(cfg.figure);
  const SweepTable table = sweep(preset.channel, preset.curves, uniform_grid(preset.points));
  emit(cfg, table.to_csv(), out);
  // Checks go to the error stream when the CSV is on stdout.
  std::ostream& report = cfg.out.empty() ? err : out;
  bool all = true;
  for (const PropertyCheck& c : check_figure(preset, table)) {
    report << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    all = all && c.pass;
  }
  return (cfg.strict && !all) ? 1 : 0;
}

}  // namespace

ChannelParams channel_from_json(const json& j) {
  ChannelParams ch;
  ch.family = parse_family(j.at("family").get<std::string>());
  ch.d = j.at("d").get<int>();
  if (ch.family != ChannelFamily::HighError) ch.p = j.at("p").get<double>();
  if (ch.family == ChannelFamily::General) {
    ch.q = j.at("q").get<double>();
    ch.r = j.at("r").get<double>();
    ch.t = j.at("t").get<double>();
  }
  return canonical(ch);
}

json channel_to_json(const ChannelParams& ch) {
  json j{{"family", std::string(family_name(ch.family))}, {"d", ch.d}};
  if (ch.family != ChannelFamily::HighError) j["p"] = ch.p;
  if (ch.family == ChannelFamily::General) {
    j["q"] = ch.q;
    j["r"] = ch.r;
    j["t"] = ch.t;
  }
  return j;
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  c.command = j.value("command", "");
  if (j.contains("channel")) {
    c.channel = channel_from_json(j.at("channel"));
    if (j.at("channel").contains("mu")) c.mu = j.at("channel").at("mu").get<double>();
  }
  if (j.contains("mu")) c.mu = j.at("mu").get<double>();
  c.grid_points = j.value("grid_points", c.grid_points);
  if (j.contains("curves")) c.curves = j.at("curves").get<std::vector<std::string>>();
  c.figure = j.value("figure", "");
  c.out = j.value("out", "");
  c.seed = j.value("seed", c.seed);
  c.tol = j.value("tol", c.tol);
  c.method = j.value("method", c.method);
  c.isa = j.value("isa", c.isa);
  c.strict = j.value("strict", c.strict);
  c.shift = j.value("shift", c.shift);
  c.phase = j.value("phase", c.phase);
  return c;
}

json config_to_json(const RunConfig& c) {
  json ch = channel_to_json(c.channel);
  if (c.mu) ch["mu"] = *c.mu;
  return json{{"command", c.command}, {"channel", ch},       {"grid_points", c.grid_points},
              {"curves", c.curves},   {"figure", c.figure},   {"out", c.out},
              {"seed", c.seed},       {"tol", c.tol},         {"method", c.method},
              {"isa", c.isa},         {"strict", c.strict},   {"shift", c.shift},
              {"phase", c.phase}};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlated Pauli channels on qudits: fidelity, mutual information, figure data."};
  app.require_subcommand(1);

  std::string config_path, family, curves_text, state, isa;
  int d = 0, points = 0, shift = 0, phase = 0;
  double p = 0, q = 0, r = 0, t = 0, mu = 0, tol = 0;
  std::uint64_t seed = 0;
  std::string out_path, method, figure;
  bool strict = false, print_config = false;

  auto* o_config = app.add_option("--config", config_path, "JSON run config; flags override its fields");
  auto* o_family = app.add_option("--family", family, "general | quasi-classical | depolarizing | high-error");
  auto* o_d = app.add_option("--d", d, "qudit dimension (also the number of channel uses)");
  auto* o_p = app.add_option("--p", p, "P_00");
  auto* o_q = app.add_option("--q", q, "P_0n (general family)");
  auto* o_r = app.add_option("--r", r, "P_m0 (general family)");
  auto* o_t = app.add_option("--t", t, "P_mn (general family)");
  auto* o_mu = app.add_option("--mu", mu, "memory degree in [0, 1]");
  auto* o_state = app.add_option("--state", state, "maxent | product | alpha:n=<n> | km:n=<n> | k=<k> ...");
  auto* o_curves = app.add_option("--curves", curves_text, "comma-separated curve list");
  auto* o_points = app.add_option("--points", points, "grid points on [0, 1]");
  auto* o_out = app.add_option("--out", out_path, "output file (default stdout)");
  auto* o_seed = app.add_option("--seed", seed, "validation seed");
  auto* o_tol = app.add_option("--tol", tol, "validation tolerance");
  auto* o_isa = app.add_option("--isa", isa, "auto | scalar | avx2 | neon");
  auto* o_strict = app.add_flag("--strict", strict, "numeric fallbacks and failed figure checks become errors");
  auto* o_method = app.add_option("--method", method, "closed-form | oracle");
  auto* o_m = app.add_option("--m", shift, "shift label (pauli)");
  auto* o_n = app.add_option("--n", phase, "phase label (pauli)");
  app.add_flag("--print-config", print_config, "print the resolved config as JSON and exit");

  std::vector<CLI::App*> subs;
  for (const char* name : {"pauli", "fidelity", "mutualinfo", "sweep", "crossover", "validate"}) {
    subs.push_back(app.add_subcommand(name)->fallthrough());
  }
  subs[0]->description("print U_{m,n}");
  subs[1]->description("fidelity of one input state");
  subs[2]->description("Holevo mutual information of one input ensemble");
  subs[3]->description("curves over a mu grid, CSV");
  subs[4]->description("crossing point of two curves");
  subs[5]->description("closed forms against the dense oracle");
  auto* fig = app.add_subcommand("figure", "figure data and property checks for a preset")->fallthrough();
  fig->add_option("name", figure, "fig1 .. fig5")->required();
  subs.push_back(fig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg;
    if (o_config->count()) {
      std::ifstream f(config_path);
      if (!f) throw InvalidArgument("cannot read config '" + config_path + "'");
      cfg = config_from_json(json::parse(f));
    }
    for (CLI::App* s : subs) {
      if (s->parsed()) cfg.command = s->get_name();
    }
    if (o_family->count()) cfg.channel.family = parse_family(family);
    if (o_d->count()) cfg.channel.d = d;
    if (o_p->count()) cfg.channel.p = p;
    if (o_q->count()) cfg.channel.q = q;
    if (o_r->count()) cfg.channel.r = r;
    if (o_t->count()) cfg.channel.t = t;
    cfg.channel = canonical(cfg.channel);
    if (o_mu->count()) cfg.mu = mu;
    if (o_state->count()) cfg.curves = {state};
    if (o_curves->count()) cfg.curves = split_list(curves_text);
    if (o_points->count()) cfg.grid_points = points;
    if (o_out->count()) cfg.out = out_path;
    if (o_seed->count()) cfg.seed = seed;
    if (o_tol->count()) cfg.tol = tol;
    if (o_isa->count()) cfg.isa = isa;
    if (o_strict->count()) cfg.strict = strict;
    if (o_method->count()) cfg.method = method;
    if (o_m->count()) cfg.shift = shift;
    if (o_n->count()) cfg.phase = phase;
    if (fig->parsed()) cfg.figure = figure;
    if (cfg.command == "crossover" && cfg.curves.empty()) cfg.curves = {"maxent", "product"};

    if (print_config) {
      out << config_to_json(cfg).dump(2) << '\n';
      return 0;
    }
    check_config(cfg);
    kernels::select(parse_isa(cfg.isa));

    if (cfg.command == "pauli") return cmd_pauli(cfg, out);
    if (cfg.command == "fidelity") return cmd_fidelity(cfg, out);
    if (cfg.command == "mutualinfo") return cmd_mutualinfo(cfg, out, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, out);
    if (cfg.command == "crossover") return cmd_crossover(cfg, out);
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "figure") return cmd_figure(cfg, out, err);
    throw InvalidArgument("unknown command '" + cfg.command + "'");
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: bad config: " << e.what() << '\n';
    return 1;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace qmc
