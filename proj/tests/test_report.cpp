// Copyright 2026 The searchtime Authors
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
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "report.hpp"

namespace searchtime::cli {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

// Runs the command line tool with `args`; stderr is discarded.
CliRun RunCli(const std::string& args) {
  const std::string command =
      std::string(SEARCHTIME_CLI) + " " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) run.out.append(buf, n);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

void ExpectRoundTrip(const Json& j) {
  const Json back = Json::parse(j.dump());
  EXPECT_EQ(back, j);
  EXPECT_EQ(back.dump(), j.dump());
}

TEST(FormatNumber, RoundTrips) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> exponent(-12.0, 12.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, exponent(rng));
    EXPECT_EQ(std::strtod(FormatNumber(x).c_str(), nullptr), x);
  }
  EXPECT_EQ(FormatNumber(std::nan("")), "");
  EXPECT_EQ(FormatNumber(20.0), "20");
}

TEST(Json, EstimateRoundTrip) {
  st_problem p{};
  p.model = ST_MODEL_BINARY_GRAMMAR;
  p.depth = 14;
  p.goal_level = 11;
  p.goal_prob = 0.01;
  st_estimate_report r;
  ASSERT_EQ(st_estimate_problem(&p, ST_COND_GIVEN_GOAL, &r), ST_OK);
  const Json j = EstimateReportJson(p, ST_COND_GIVEN_GOAL, r);
  ExpectRoundTrip(j);
  EXPECT_EQ(j["dfs"]["formula"], "dfs_cb");
  EXPECT_EQ(j["meta"]["version"], st_version());
}

TEST(Json, TableRoundTripWithBlanks) {
  st_table* t = nullptr;
  ASSERT_EQ(st_table_run(ST_TABLE_SGL, 20, 5, 1, &t), ST_OK);
  const Json j = TableJson("sgl", t, 20, 5);
  st_table_destroy(t);
  ExpectRoundTrip(j);
  EXPECT_TRUE(j["cells"][0]["empirical"].is_null());
  EXPECT_TRUE(j["cells"][1]["empirical"].is_number());
  EXPECT_EQ(j["meta"]["seed"], 5);
  EXPECT_EQ(j["meta"]["trials"], 20);
}

TEST(Json, BoundaryAndDatasetRoundTrip) {
  st_boundary* b = nullptr;
  ASSERT_EQ(st_boundary_run(ST_BOUNDARY_GAUSSIAN, 6, 2, &b), ST_OK);
  ExpectRoundTrip(BoundaryJson("gaussian-fig", b, 6, 2));
  st_boundary_destroy(b);
  st_dataset* d = nullptr;
  ASSERT_EQ(st_dataset_run(6, 2, 1, &d), ST_OK);
  const Json j = DatasetJson(d, 6, 2);
  st_dataset_destroy(d);
  ExpectRoundTrip(j);
  EXPECT_EQ(j["rows"].size(), 6u);
}

TEST(Csv, SameSeedSameBytes) {
  auto table_csv = [](int threads) {
    st_table* t = nullptr;
    EXPECT_EQ(st_table_run(ST_TABLE_BG, 25, 11, threads, &t), ST_OK);
    const std::string csv = TableCsv("bg", t);
    st_table_destroy(t);
    return csv;
  };
  EXPECT_EQ(table_csv(1), table_csv(3));
  const std::string csv = table_csv(0);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "method,goal_level,goal_prob,blank,analytical_lower,"
            "analytical_mean,analytical_upper,conditioning,empirical,"
            "std_error,error_pct,discarded_no_goal");
}

TEST(Csv, DatasetHeaderNotesTies) {
  st_dataset* d = nullptr;
  ASSERT_EQ(st_dataset_run(3, 4, 1, &d), ST_OK);
  const std::string csv = DatasetCsv(d);
  st_dataset_destroy(d);
  EXPECT_EQ(csv.rfind("# winner ties", 0), 0u);
  EXPECT_NE(csv.find("\nmean_branching,std_branching,num_rules,max_depth,"),
            std::string::npos);
}

TEST(Cli, EstimateOutputs) {
  const CliRun text = RunCli(
      "estimate --model tree --depth 14 --goal-level 8 --goal-prob 0.01 "
      "--conditioned");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("BFS (bfs_sgl, given-goal): 333.8"),
            std::string::npos);
  EXPECT_NE(text.out.find("recommendation: BFS"), std::string::npos);

  const CliRun json = RunCli(
      "estimate --model binary-grammar --depth 14 --goal-level 14 "
      "--goal-prob 0.1 --condition-on-goal --format json");
  ASSERT_EQ(json.code, 0);
  const Json j = Json::parse(json.out);
  EXPECT_NEAR(j["dfs"]["lower"].get<double>(), 3.99, 0.005);
  EXPECT_NEAR(j["dfs"]["mean"].get<double>(), 20.06, 0.005);
  EXPECT_NEAR(j["dfs"]["upper"].get<double>(), 36.12, 0.005);

  const Json g = Json::parse(
      RunCli("estimate --model tree --depth 14 --mu 5 --sigma2 0.1 "
             "--format json")
          .out);
  EXPECT_NEAR(g["bfs"]["goal_terms"].get<double>(), 37.04, 0.005);
  EXPECT_NEAR(g["dfs"]["mean"].get<double>(), 5949.04, 0.01);
  EXPECT_EQ(g["verdict"], "BFS");
}

TEST(Cli, DeterministicFiles) {
  const std::string args = "dataset --count 12 --seed 9 --format csv";
  const CliRun a = RunCli(args + " --threads 1");
  const CliRun b = RunCli(args + " --threads 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun s1 = RunCli("simulate --depth 8 --goal-level 5 --goal-prob 0.05 "
                        "--trials 1 --seed 4 --method dfs --format csv");
  const CliRun s2 = RunCli("simulate --depth 8 --goal-level 5 --goal-prob 0.05 "
                        "--trials 1 --seed 4 --method dfs --format csv");
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, OutFlagWritesFile) {
  const std::string path = testing::TempDir() + "searchtime_table.csv";
  const CliRun r = RunCli("table mgl --trials 0 --out " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("5949.0"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(RunCli("").code, 2);
  EXPECT_EQ(RunCli("frobnicate").code, 2);
  EXPECT_EQ(RunCli("estimate --depth 14").code, 2);
  EXPECT_EQ(RunCli("estimate --goal-level 3 --goal-prob 0.1 --mu 4 "
                   "--sigma2 1")
                .code,
            2);
  EXPECT_EQ(RunCli("estimate --goal-level 30 --goal-prob 0.1").code, 2);
  EXPECT_EQ(RunCli("table xyz").code, 2);
  EXPECT_EQ(RunCli("export-graph --model binary-grammar --depth 40").code, 3);
  EXPECT_EQ(RunCli("export-graph --model tree --depth 2").code, 0);
  EXPECT_EQ(RunCli("--help").code, 0);
}

}  // namespace
}  // namespace searchtime::cli
