// Copyright 2026 The mbco Authors
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


#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mbco/cli/app.hpp"
#include "mbco/csv_io.hpp"

namespace mbco::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("mbco_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int call(std::vector<std::string> args, const fs::path& out_dir) {
    args.insert(args.begin(), {"--out", out_dir.string()});
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }
  int call(std::vector<std::string> args) { return call(std::move(args), dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, SweepSinglePoint) {
  ASSERT_EQ(call({"sweep", "--n", "16", "--tau-points", "1", "--tau-min", "3", "--tau-max", "3"}), kExitOk)
      << err_.str();
  const CsvTable t = read_csv_file(dir_ / "pt_series.csv");
  EXPECT_EQ(t.header, (std::vector<std::string>{"tau_ns", "P", "K", "stderr_P"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][0], 3.0);
  EXPECT_TRUE(fs::exists(dir_ / "quench_results.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "manifest.json"));
}

TEST_F(CliTest, SweepUniformChainHasZeroStaggering) {
  ASSERT_EQ(call({"sweep", "--n", "16", "--delta", "0", "--tau-points", "6", "--tau-max", "10"}), kExitOk);
  for (double p : read_csv_file(dir_ / "pt_series.csv").column_values("P")) EXPECT_LT(std::abs(p), 1e-9);
}

TEST_F(CliTest, SweepKzFitReport) {
  ASSERT_EQ(call({"sweep", "--n", "16", "--delta", "0", "--tau-points", "6", "--tau-min", "5", "--tau-max",
                  "15", "--kz-fit"}),
            kExitOk);
  const std::string fit = slurp(dir_ / "kz_fit.json");
  EXPECT_NE(fit.find("exponent"), std::string::npos);
}

TEST_F(CliTest, ManifestRecordsResolvedConfig) {
  ASSERT_EQ(call({"--seed", "7", "sweep", "--n", "8", "--tau-points", "2", "--tau-max", "6"}), kExitOk);
  const std::string m = slurp(dir_ / "manifest.json");
  for (const char* key : {"\"command\"", "\"resolved_config\"", "\"seed\"", "\"version\"", "\"started_at\"",
                          "\"tau-points\""}) {
    EXPECT_NE(m.find(key), std::string::npos) << key;
  }
}

TEST_F(CliTest, ManifestReplaysToIdenticalOutput) {
  ASSERT_EQ(call({"--threads", "1", "sweep", "--n", "8", "--delta", "0.3", "--tau-points", "4", "--tau-max", "8"}),
            kExitOk);
  const fs::path again = dir_ / "again";
  ASSERT_EQ(call({"--threads", "2", "--config", (dir_ / "manifest.json").string()}, again), kExitOk)
      << err_.str();
  EXPECT_EQ(slurp(dir_ / "pt_series.csv"), slurp(again / "pt_series.csv"));
  EXPECT_EQ(slurp(dir_ / "quench_results.csv"), slurp(again / "quench_results.csv"));
}

TEST_F(CliTest, FlagsOverrideConfigFile) {
  const fs::path cfg = dir_ / "cfg.json";
  fs::create_directories(dir_);
  std::ofstream(cfg) << R"({"command": "sweep", "sweep": {"n": 8, "tau-points": 3, "tau-max": 6}})";
  ASSERT_EQ(call({"--config", cfg.string(), "sweep", "--tau-points", "2"}), kExitOk) << err_.str();
  EXPECT_EQ(read_csv_file(dir_ / "pt_series.csv").rows.size(), 2u);
}

TEST_F(CliTest, UnknownConfigKeyIsConfigError) {
  const fs::path cfg = dir_ / "cfg.json";
  fs::create_directories(dir_);
  std::ofstream(cfg) << R"({"sweep": {"bogus": 1}})";
  EXPECT_EQ(call({"--config", cfg.string(), "sweep"}), kExitConfig);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(call({"sweep", "--n", "10"}), kExitConfig);
  EXPECT_EQ(call({"sweep", "--tau-points", "0"}), kExitConfig);
  EXPECT_EQ(call({"nonsense"}), kExitConfig);
  EXPECT_EQ(call({}), kExitConfig);
}

TEST_F(CliTest, NumericalFailureExitsThree) {
  EXPECT_EQ(call({"--tol", "-1", "sweep", "--n", "8", "--tau-points", "1"}), kExitConfig);
  ASSERT_EQ(call({"--tol", "1e-1", "sweep", "--n", "8", "--tau-points", "3", "--tau-max", "40"}),
            kExitNumerical);
  EXPECT_NE(err_.str().find("tau="), std::string::npos) << err_.str();
}

TEST_F(CliTest, SweepIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> cmd{"sweep", "--n", "16", "--delta", "0.3", "--tau-points", "5", "--tau-max",
                                     "7", "--disorder", "0.2", "--realizations", "3"};
  std::vector<std::string> one{"--threads", "1"}, three{"--threads", "3"};
  one.insert(one.end(), cmd.begin(), cmd.end());
  three.insert(three.end(), cmd.begin(), cmd.end());
  ASSERT_EQ(call(one, dir_ / "a"), kExitOk);
  ASSERT_EQ(call(three, dir_ / "b"), kExitOk);
  EXPECT_EQ(slurp(dir_ / "a" / "pt_series.csv"), slurp(dir_ / "b" / "pt_series.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "pt_series.svg"), slurp(dir_ / "b" / "pt_series.svg"));
}

TEST_F(CliTest, SpectrumOfConstantSeriesVanishesAwayFromDc) {
  fs::create_directories(dir_);
  {
    std::ofstream s(dir_ / "flat.csv");
    s << "tau_ns,P,K,stderr_P\n";
    for (int i = 0; i < 64; ++i) s << 5.0 + 0.25 * i << ",0.0125,0.2,0\n";
  }
  ASSERT_EQ(call({"spectrum", "--series", (dir_ / "flat.csv").string(), "--detrend", "none"}), kExitOk)
      << err_.str();
  const CsvTable t = read_csv_file(dir_ / "spectrum.csv");
  EXPECT_EQ(t.header, (std::vector<std::string>{"Omega_GHz", "S", "sigma"}));
  EXPECT_NEAR(t.rows[0][1], 64 * 0.0125, 1e-12);
  for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_LT(t.rows[i][1], 1e-12);
}

TEST_F(CliTest, SpectrumWithShotsWritesSignificance) {
  ASSERT_EQ(call({"spectrum", "--n", "16", "--tau-min", "1", "--tau-max", "4", "--tau-points", "40",
                  "--shots", "2000", "--series-count", "20"}),
            kExitOk)
      << err_.str();
  const std::string peak = slurp(dir_ / "peak.json");
  EXPECT_NE(peak.find("significance"), std::string::npos);
  const CsvTable t = read_csv_file(dir_ / "spectrum.csv");
  for (const auto& row : t.rows) EXPECT_FALSE(std::isnan(row[2]));
}

TEST_F(CliTest, ShimRejectsZeroIterations) {
  EXPECT_EQ(call({"shim", "--iterations", "0"}), kExitConfig);
}

TEST_F(CliTest, ShimFaultFreeRun) {
  ASSERT_EQ(call({"shim", "--n", "8", "--bias", "0", "--iterations", "3", "--shots", "4000"}), kExitOk)
      << err_.str();
  EXPECT_EQ(read_csv_file(dir_ / "shim_history.csv").header,
            (std::vector<std::string>{"iter", "orbit_id", "m", "std_pfrust", "sigma_mtilde"}));
  const std::string traj = slurp(dir_ / "shim_trajectories.json");
  EXPECT_NE(traj.find("\"converged\": true"), std::string::npos);
  for (const char* panel : {"shim_a_magnetization.svg", "shim_b_couplers.svg", "shim_c_flux.svg",
                            "shim_d_sigma.svg"}) {
    EXPECT_TRUE(fs::exists(dir_ / panel)) << panel;
  }
}

TEST_F(CliTest, OracleCleanPasses) {
  EXPECT_EQ(call({"oracle", "--n", "8", "--tau", "1,3"}), kExitOk) << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "oracle.csv"));
}

TEST_F(CliTest, OracleDisorderIsFlaggedApproximation) {
  EXPECT_EQ(call({"oracle", "--n", "8", "--tau", "2", "--disorder", "0.3"}), kExitOk);
  EXPECT_NE(out_.str().find("approximation"), std::string::npos);
}

TEST_F(CliTest, OracleMismatchAndSizeLimit) {
  EXPECT_EQ(call({"oracle", "--n", "16"}), kExitConfig);
  EXPECT_EQ(call({"oracle", "--n", "8", "--tau", "3", "--tol", "1e-30"}), kExitMismatch);
}

TEST_F(CliTest, FeasibilityReport) {
  ASSERT_EQ(call({"feasibility", "--dtau", "0.02", "--omega", "5"}), kExitOk);
  const std::string j = slurp(dir_ / "feasibility.json");
  EXPECT_NE(j.find("25"), std::string::npos);
  EXPECT_NE(out_.str().find("239.9"), std::string::npos) << out_.str();
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(call({"--help"}), kExitOk); }

}  // namespace
}  // namespace mbco::cli
