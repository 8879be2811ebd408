// Copyright 2026 The dfsqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfsqft/bench/cli.hpp"
#include "dfsqft/circuit_io.hpp"
#include "json.hpp"

namespace dfsqft::bench {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path golden(const std::string& name) { return fs::path(DFSQFT_GOLDEN_DIR) / name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("dfsqft_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

class SeedEnv {
 public:
  explicit SeedEnv(const char* value) { ::setenv("DFSQFT_SEED", value, 1); }
  ~SeedEnv() { ::unsetenv("DFSQFT_SEED"); }
};

void expect_report_header(const json& doc) {
  EXPECT_EQ(doc["schema"], "dfsqft/1");
  EXPECT_EQ(doc["version"], tool_version());
  EXPECT_TRUE(doc["config"].is_object());
  EXPECT_TRUE(doc["seed"].is_number_unsigned());
  EXPECT_TRUE(doc["duration_s"].is_number());
  EXPECT_GE(doc["duration_s"].get<double>(), 0.0);
}

std::size_t gate_lines(const std::string& text) {
  return parse_circuit(text).size();
}

TEST(CliSynth, WritesCircuitText) {
  const Result plain = run({"synth", "plain", "3"});
  EXPECT_EQ(plain.code, kExitOk);
  EXPECT_EQ(plain.out, slurp(golden("plain_qft_3.circ")));
  EXPECT_EQ(gate_lines(plain.out), 6u);
  EXPECT_EQ(gate_lines(run({"synth", "wcd", "3"}).out), 24u);
  EXPECT_EQ(gate_lines(run({"synth", "scd", "1"}).out), 29u);
}

TEST(CliSynth, OutFileAndReport) {
  TempDir dir;
  const auto path = dir / "wcd2.circ";
  const Result r = run({"synth", "wcd", "2", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(path), slurp(golden("wcd_qft_2.circ")));
  const json doc = json::parse(r.out);
  expect_report_header(doc);
  EXPECT_EQ(doc["kind"], "synth");
  EXPECT_EQ(doc["gate_count"], 11);
  EXPECT_EQ(doc["config"]["encoding"], "wcd");
  EXPECT_EQ(doc["config"]["n"], 2);
  EXPECT_EQ(doc["config"]["out"], path.string());
}

TEST(CliSynth, RangeAndUsageErrors) {
  EXPECT_EQ(run({"synth", "wcd", "7"}).code, kExitFailure);
  EXPECT_EQ(run({"synth", "scd", "3"}).code, kExitFailure);
  EXPECT_EQ(run({"synth", "plain", "0"}).code, kExitFailure);
  EXPECT_EQ(run({"synth", "qutrit", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "plain", "two"}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "plain"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "plain", "2", "--bogus"}).code, kExitUsage);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("noise-bench"), std::string::npos);
  EXPECT_EQ(run({"--version"}).code, kExitOk);
}

TEST(CliVerify, WcdTwoPasses) {
  const Result r = run({"verify", "wcd", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  expect_report_header(doc);
  EXPECT_EQ(doc["kind"], "verify");
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_LT(doc["max_deviation"].get<double>(), 1e-10);
  EXPECT_GT(doc["checks"].size(), 5u);
  for (const auto& c : doc["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("tolerance"));
    EXPECT_TRUE(c.contains("deviation"));
    EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
  }
}

TEST(CliVerify, PlainOneChecksHadamard) {
  const Result r = run({"verify", "plain", "1"});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  bool found = false;
  for (const auto& c : doc["checks"]) {
    if (c["name"] == "qft1.equals_hadamard") found = c["passed"].get<bool>();
  }
  EXPECT_TRUE(found);
}

TEST(CliVerify, ScdOneIncludesResolverReport) {
  const Result r = run({"verify", "scd", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_TRUE(doc.contains("conventions"));
  EXPECT_EQ(doc["conventions"]["kind"], "scd_convention_report");
  EXPECT_EQ(doc["conventions"]["erratum"], false);
  bool fallback = false;
  for (const auto& c : doc["checks"]) {
    if (c["name"] == "scd.fallback.hadamard") fallback = c["passed"].get<bool>();
  }
  EXPECT_TRUE(fallback);
}

TEST(CliVerify, CsvFormatAndRange) {
  const Result r = run({"verify", "plain", "3", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("name,tolerance,deviation,passed\n", 0), 0u);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_EQ(run({"verify", "wcd", "9"}).code, kExitFailure);
  EXPECT_EQ(run({"verify", "wcd", "2", "--format", "xml"}).code, kExitUsage);
}

TEST(CliNoiseBench, HeadlineComparison) {
  const Result r =
      run({"noise-bench", "wcd", "2", "--policy", "block", "--trials", "200", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  expect_report_header(doc);
  EXPECT_EQ(doc["seed"], 7u);
  EXPECT_EQ(doc["config"]["trials"], 200);
  EXPECT_EQ(doc["config"]["policy"], "block");
  EXPECT_GE(doc["encoded"]["mean_fidelity"].get<double>(), 1 - 1e-10);
  EXPECT_LT(doc["unencoded"]["mean_fidelity"].get<double>(), 0.99);
}

TEST(CliNoiseBench, ZeroNoiseBothArmsPerfect) {
  const Result r = run({"noise-bench", "scd", "1", "--trials", "1", "--distribution",
                        "gaussian", "--sigma", "0", "--policy", "elementary"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["encoded"]["mean_fidelity"].get<double>(), 1.0, 1e-10);
  EXPECT_NEAR(doc["unencoded"]["mean_fidelity"].get<double>(), 1.0, 1e-10);
}

TEST(CliNoiseBench, CsvIsByteIdenticalAcrossRuns) {
  TempDir dir;
  const std::vector<std::string> args = {"noise-bench", "wcd", "2", "--trials", "50",
                                         "--seed", "7", "--policy", "elementary",
                                         "--format", "csv"};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("arm,trial,fidelity,leakage\n", 0), 0u);
  EXPECT_EQ(a.out.find('\r'), std::string::npos);
  // 1 header + 2 arms x 50 trials.
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 101);

  const auto csv = dir / "trials.csv";
  const Result j = run({"noise-bench", "wcd", "2", "--trials", "50", "--seed", "7",
                        "--policy", "elementary", "--csv", csv.string()});
  ASSERT_EQ(j.code, kExitOk);
  EXPECT_EQ(slurp(csv), a.out);
  EXPECT_NE(run({"noise-bench", "wcd", "2", "--trials", "50", "--seed", "8",
                 "--policy", "elementary", "--format", "csv"})
                .out,
            a.out);
}

TEST(CliNoiseBench, RejectsBadArguments) {
  EXPECT_EQ(run({"noise-bench", "plain", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"noise-bench", "wcd", "2", "--trials", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"noise-bench", "wcd", "2", "--policy", "sometimes"}).code, kExitUsage);
  EXPECT_EQ(run({"noise-bench", "wcd", "2", "--input", "012"}).code, kExitUsage);
  EXPECT_EQ(run({"noise-bench", "wcd", "2", "--seed", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"noise-bench", "scd", "3"}).code, kExitFailure);
}

TEST(CliConfig, FileValuesApplyAndFlagsOverride) {
  TempDir dir;
  const auto cfg = dir / "bench.cfg";
  std::ofstream(cfg) << "# noise settings\nseed=11\ntrials = 3\npolicy=elementary\n";
  const Result a = run({"noise-bench", "wcd", "1", "--config", cfg.string()});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const json da = json::parse(a.out);
  EXPECT_EQ(da["seed"], 11u);
  EXPECT_EQ(da["config"]["trials"], 3);
  EXPECT_EQ(da["config"]["policy"], "elementary");
  EXPECT_EQ(da["config"]["config"], cfg.string());

  const Result b =
      run({"noise-bench", "wcd", "1", "--config", cfg.string(), "--trials", "5"});
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_EQ(json::parse(b.out)["config"]["trials"], 5);

  std::ofstream(dir / "bad.cfg") << "frequency=3\n";
  EXPECT_EQ(run({"synth", "plain", "2", "--config", (dir / "bad.cfg").string()}).code,
            kExitUsage);
  EXPECT_EQ(run({"synth", "plain", "2", "--config", (dir / "missing.cfg").string()}).code,
            kExitUsage);
}

TEST(CliConfig, EnvironmentSeedIsAFallback) {
  SeedEnv env("99");
  const Result a = run({"noise-bench", "wcd", "1", "--trials", "1"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(json::parse(a.out)["seed"], 99u);
  const Result b = run({"noise-bench", "wcd", "1", "--trials", "1", "--seed", "5"});
  EXPECT_EQ(json::parse(b.out)["seed"], 5u);
}

TEST(CliDfsTable, MatchesGoldenTables) {
  const Result wcd = run({"dfs-table", "wcd", "8"});
  ASSERT_EQ(wcd.code, kExitOk) << wcd.err;
  EXPECT_EQ(wcd.out, slurp(golden("dfs_table_wcd_8.csv")));
  const Result scd = run({"dfs-table", "scd", "8"});
  ASSERT_EQ(scd.code, kExitOk) << scd.err;
  EXPECT_EQ(scd.out, slurp(golden("dfs_table_scd_8.csv")));
}

TEST(CliDfsTable, RowsCarryTheDocumentedValues) {
  const Result r = run({"dfs-table", "scd", "4", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const json doc = json::parse(r.out);
  expect_report_header(doc);
  const auto& rows = doc["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3]["max_dim"], 2u);
  EXPECT_DOUBLE_EQ(rows[3]["eta_max"].get<double>(), 0.25);
  EXPECT_EQ(rows[3]["r"][0], 4);
  EXPECT_TRUE(rows[2]["eta_max"].is_null());

  const json w = json::parse(run({"dfs-table", "wcd", "2", "--format", "json"}).out);
  EXPECT_EQ(w["rows"][1]["max_dim"], 2u);
  EXPECT_DOUBLE_EQ(w["rows"][1]["eta_max"].get<double>(), 0.5);
  EXPECT_EQ(w["rows"][1]["r"][0], 2);
}

TEST(CliDfsTable, RangeErrors) {
  EXPECT_EQ(run({"dfs-table", "scd", "11"}).code, kExitFailure);
  EXPECT_EQ(run({"dfs-table", "scd", "0"}).code, kExitFailure);
  EXPECT_EQ(run({"dfs-table", "plain", "4"}).code, kExitUsage);
}

}  // namespace
}  // namespace dfsqft::bench
