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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "qmc/cli_io.hpp"

namespace qmc {
namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<const char*> args) {
  args.insert(args.begin(), "qmc");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, HighErrorHolevoLimit) {
  const CliResult r = run({"mutualinfo", "--family", "high-error", "--d", "4", "--mu", "1", "--state", "maxent"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "8.000000000000\n");
}

TEST(Cli, OracleMethodAgrees) {
  const CliResult a = run({"mutualinfo", "--family", "depolarizing", "--d", "3", "--p", "0.8", "--mu", "0.3", "--state",
                     "maxent"});
  const CliResult b = run({"mutualinfo", "--family", "depolarizing", "--d", "3", "--p", "0.8", "--mu", "0.3", "--state",
                     "maxent", "--method", "oracle"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NEAR(std::stod(a.out), std::stod(b.out), 1e-10);
}

TEST(Cli, Fidelity) {
  const CliResult r = run({"fidelity", "--family", "high-error", "--d", "2", "--mu", "0", "--state", "product"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.250000000000\n");
}

TEST(Cli, Pauli) {
  const CliResult r = run({"pauli", "--d", "2", "--m", "1", "--n", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "0.000000000000+0.000000000000i 1.000000000000+0.000000000000i\n"
            "1.000000000000+0.000000000000i 0.000000000000+0.000000000000i\n");
}

TEST(Cli, ArgumentErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"mutualinfo", "--family", "high-error", "--d", "2", "--state", "maxent"}).code, 1);
  EXPECT_EQ(run({"mutualinfo", "--family", "nope", "--d", "2", "--mu", "0.1", "--state", "maxent"}).code, 1);
  EXPECT_EQ(run({"fidelity", "--family", "general", "--d", "2", "--p", "0.5", "--q", "0.6", "--mu", "0.1",
                 "--state", "maxent"})
                .code,
            1);
  EXPECT_EQ(run({"sweep", "--family", "quasi-classical", "--d", "2", "--p", "0.2", "--mu", "2"}).code, 1);
  EXPECT_EQ(run({"figure", "fig9"}).code, 1);
  EXPECT_EQ(run({"pauli", "--d", "3", "--m", "5"}).code, 1);
  const CliResult bad_isa = run({"pauli", "--d", "2", "--isa", "sse9"});
  EXPECT_EQ(bad_isa.code, 1);
  EXPECT_FALSE(bad_isa.err.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, SweepCsv) {
  const CliResult r = run({"sweep", "--family", "quasi-classical", "--d", "2", "--p", "0.3", "--curves", "product,maxent",
                     "--points", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "mu,I_product,I_maxent");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, Crossover) {
  const CliResult r = run({"crossover", "--family", "high-error", "--d", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("kind: boundary-touch"), std::string::npos);
}

TEST(Cli, FigureWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "qmc_cli_fig5.csv";
  const std::string p = path.string();
  const CliResult r = run({"figure", "fig5", "--out", p.c_str()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "mu,I_k1,I_k2,I_k3,I_k4");
  EXPECT_NE(r.out.find("PASS fig5: k-ordering"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Config, JsonRoundTrip) {
  RunConfig c;
  c.command = "sweep";
  c.channel = {ChannelFamily::General, 3, 0.4, 0.08, 0.06, 0.08};
  c.mu = 0.3;
  c.grid_points = 51;
  c.curves = {"maxent", "alpha:n=2"};
  c.out = "x.csv";
  c.seed = 99;
  c.tol = 1e-9;
  c.method = "oracle";
  c.strict = true;
  const RunConfig back = config_from_json(config_to_json(c));
  EXPECT_EQ(back, c);
  const RunConfig again = config_from_json(nlohmann::json::parse(config_to_json(back).dump()));
  EXPECT_EQ(again, c);
}

TEST(Config, DerivedParametersOmitted) {
  const nlohmann::json j = nlohmann::json::parse(R"({"family": "depolarizing", "d": 4, "p": 0.7, "mu": 0.2})");
  const ChannelParams ch = channel_from_json(j);
  EXPECT_NEAR(ch.table().q(), 0.02, 1e-15);
  EXPECT_FALSE(channel_to_json(ch).contains("q"));
  EXPECT_ANY_THROW(channel_from_json(nlohmann::json::parse(R"({"family": "general", "d": 2, "p": 1})")));
}

TEST(Config, FileWithFlagOverride) {
  const auto path = std::filesystem::temp_directory_path() / "qmc_cli_cfg.json";
  {
    std::ofstream f(path);
    f << R"({"channel": {"family": "high-error", "d": 2, "mu": 0.5}, "curves": ["product"]})";
  }
  const std::string p = path.string();
  const CliResult a = run({"mutualinfo", "--config", p.c_str()});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_NEAR(std::stod(a.out), 0.18872, 5e-6);
  const CliResult b = run({"mutualinfo", "--config", p.c_str(), "--state", "maxent"});
  EXPECT_NEAR(std::stod(b.out), 0.45121, 5e-6);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace qmc
