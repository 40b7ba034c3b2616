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

// Drivers behind the command-line tool: one-shot estimates, simulations,
// the experiment tables, decision-boundary scans and the grammar dataset.

#ifndef SEARCHTIME_EXPERIMENTS_HPP_
#define SEARCHTIME_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "searchtime/distributions.hpp"
#include "searchtime/estimate.hpp"
#include "searchtime/grammar.hpp"
#include "searchtime/search_graph.hpp"
#include "searchtime/simulator.hpp"
#include "searchtime/tree_analysis.hpp"

namespace searchtime {

enum class Model { kTree, kBinaryGrammar, kFullGrammar };
enum class GoalModel { kSingleLevel, kGaussian };

const char* ModelName(Model model);  // "tree", "binary-grammar", ...
std::optional<Model> ParseModel(const std::string& text);
const char* MethodName(Method method);  // "BFS", "DFS"

struct ProblemSpec {
  Model model = Model::kTree;
  int depth = 14;
  int branching = 2;  // trees only
  GoalModel goals = GoalModel::kSingleLevel;
  int goal_level = 0;
  double goal_prob = 0.0;
  GaussianGoalParams gaussian;

  void Validate() const;
};

GoalProbabilities ProblemGoals(const ProblemSpec& spec);
// The full grammar comes with every string goal-eligible, matching the
// level counts its estimates use.
SearchGraph BuildProblemGraph(const ProblemSpec& spec);

struct EstimateReport {
  RuntimeEstimate bfs;
  RuntimeEstimate dfs;
  // BFS with the no-goal term dropped and no renormalization.
  double bfs_goal_terms = 0.0;
  Verdict verdict = Verdict::kBfs;
  const char* bfs_formula = "";  // static strings
  const char* dfs_formula = "";
};

EstimateReport Estimate(const ProblemSpec& spec, Conditioning conditioning);

// Probability that the graph holds no goal at all.
double NoGoalProbability(const SearchGraph& graph, const GoalProbabilities& p);

struct SimulateReport {
  TrialStats stats;
  RuntimeEstimate estimate;
  // Exact expectation over the simulated graph, conditioned like the trials.
  std::optional<double> oracle;
};

inline constexpr size_t kMaxOracleNodes = size_t{1} << 22;

SimulateReport Simulate(const ProblemSpec& spec, Method method,
                        const MonteCarloOptions& options);

enum class TableKind { kSingleLevel, kMultiLevel, kBinaryGrammar };
const char* TableName(TableKind kind);  // "sgl", "mgl", "bg"
std::optional<TableKind> ParseTable(const std::string& text);

struct TableCell {
  Method method = Method::kBfs;
  double row = 0.0;     // g (sgl, bg) or mu (mgl)
  double column = 0.0;  // p_g (sgl, bg) or sigma2 (mgl)
  bool blank = false;
  RuntimeEstimate analytical;
  // NaN when no trials were run or the cell is blank.
  double empirical = 0.0;
  double std_error = 0.0;
  double error_pct = 0.0;  // against analytical.mean
  uint64_t discarded_no_goal = 0;
};

struct TableResult {
  TableKind kind = TableKind::kSingleLevel;
  int depth = 14;
  uint64_t trials = 0;
  uint64_t seed = 0;
  std::vector<TableCell> cells;  // BFS grid, then DFS grid, row-major
};

// trials == 0 computes the analytical side only.
TableResult RunTable(TableKind kind, uint64_t trials, uint64_t seed,
                     int threads = 0);

enum class BoundaryKind { kSingleLevel, kBinaryGrammar, kGaussian };
const char* BoundaryName(BoundaryKind kind);  // "sgl-fig", "bg-fig", ...
std::optional<BoundaryKind> ParseBoundary(const std::string& text);

struct BoundaryPoint {
  double x = 0.0;
  double y = 0.0;
  Verdict verdict = Verdict::kBfs;
};

struct BoundarySample {
  double x = 0.0;
  double y = 0.0;
  uint64_t bfs_time = 0;
  uint64_t dfs_time = 0;
  Method winner = Method::kBfs;  // ties go to BFS
  Method predicted = Method::kBfs;
  uint64_t redraws = 0;  // goalless instances discarded before this one
};

struct BoundaryResult {
  BoundaryKind kind = BoundaryKind::kSingleLevel;
  std::string x_name;
  std::string y_name;
  uint64_t seed = 0;
  std::vector<BoundaryPoint> grid;
  std::vector<BoundarySample> samples;
  double accuracy = 0.0;
};

BoundaryResult RunBoundary(BoundaryKind kind, uint64_t samples, uint64_t seed);

struct DatasetRow {
  GraphFeatures features;
  std::string rules;
  uint16_t rule_mask = 1;
  uint64_t goals = 0;  // distinct goal nodes
  uint64_t bfs_time = 0;
  uint64_t dfs_time = 0;
  Method winner = Method::kBfs;  // ties go to BFS
};

struct DatasetResult {
  uint64_t seed = 0;
  std::vector<DatasetRow> rows;
  uint64_t skipped = 0;
  std::vector<std::string> warnings;

  double DfsWinFraction() const;
};

DatasetResult RunDataset(uint64_t count, uint64_t seed, int threads = 0);

}  // namespace searchtime

#endif  // SEARCHTIME_EXPERIMENTS_HPP_
