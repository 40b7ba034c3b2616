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

#include <cmath>

#include "searchtime/error.hpp"
#include "searchtime/experiments.hpp"

namespace searchtime {
namespace {

ProblemSpec SingleLevel(Model model, int depth, int level, double p) {
  ProblemSpec spec;
  spec.model = model;
  spec.depth = depth;
  spec.goal_level = level;
  spec.goal_prob = p;
  return spec;
}

TEST(Estimate, TreeSingleLevel) {
  const auto r = Estimate(SingleLevel(Model::kTree, 14, 8, 0.01),
                          Conditioning::kGivenGoal);
  EXPECT_NEAR(r.bfs.mean, 333.85, 0.005);
  EXPECT_NEAR(r.dfs.mean, 9967.0, 2.0);
  EXPECT_EQ(r.verdict, Verdict::kBfs);
  EXPECT_STREQ(r.bfs_formula, "bfs_sgl");
  EXPECT_STREQ(r.dfs_formula, "dfs_sgl");
}

TEST(Estimate, TreeGaussian) {
  ProblemSpec spec;
  spec.goals = GoalModel::kGaussian;
  spec.gaussian = {5, 0.1};
  const auto r = Estimate(spec, Conditioning::kNone);
  EXPECT_NEAR(r.bfs_goal_terms, 37.04, 0.005);
  EXPECT_NEAR(r.dfs.mean, 5949.04, 0.01);
  EXPECT_EQ(r.verdict, Verdict::kBfs);
  EXPECT_STREQ(r.bfs_formula, "bfs_mgl");
}

TEST(Estimate, BinaryGrammar) {
  const auto r = Estimate(SingleLevel(Model::kBinaryGrammar, 14, 14, 0.1),
                          Conditioning::kGivenGoal);
  EXPECT_NEAR(r.dfs.lower, 3.99, 0.005);
  EXPECT_NEAR(r.dfs.mean, 20.06, 0.005);
  EXPECT_NEAR(r.dfs.upper, 36.12, 0.005);
  EXPECT_EQ(r.verdict, Verdict::kDfs);
  EXPECT_STREQ(r.dfs_formula, "dfs_cb");
}

TEST(Estimate, InvalidSpecs) {
  EXPECT_THROW(Estimate(SingleLevel(Model::kTree, 14, 15, 0.1),
                        Conditioning::kNone),
               Error);
  EXPECT_THROW(Estimate(SingleLevel(Model::kTree, 14, 3, 0.0),
                        Conditioning::kNone),
               Error);
}

TEST(Simulate, TreeAgainstOracle) {
  MonteCarloOptions options;
  options.trials = 10000;
  options.seed = 12;
  const auto r =
      Simulate(SingleLevel(Model::kTree, 6, 3, 0.2), Method::kBfs, options);
  ASSERT_TRUE(r.oracle.has_value());
  EXPECT_LE(std::abs(r.stats.mean - *r.oracle), 4.0 * r.stats.std_error);
  EXPECT_NEAR(*r.oracle, r.estimate.mean, 1e-9 * r.estimate.mean);
}

TEST(Simulate, BinaryGrammarBracket) {
  MonteCarloOptions options;
  options.trials = 10000;
  options.seed = 3;
  const auto r = Simulate(SingleLevel(Model::kBinaryGrammar, 10, 10, 0.1),
                          Method::kDfs, options);
  EXPECT_GE(r.stats.mean, r.estimate.lower);
  EXPECT_LE(r.stats.mean, r.estimate.upper + 11.0);
}

TEST(Simulate, ConditionedOracle) {
  MonteCarloOptions options;
  options.trials = 20000;
  options.seed = 8;
  options.condition_on_goal = true;
  const auto r = Simulate(SingleLevel(Model::kFullGrammar, 5, 4, 0.02),
                          Method::kBfs, options);
  ASSERT_TRUE(r.oracle.has_value());
  EXPECT_LE(std::abs(r.stats.mean - *r.oracle), 4.0 * r.stats.std_error);
  EXPECT_NEAR(*r.oracle, r.estimate.mean, 1e-9 * r.estimate.mean);
}

TEST(Simulate, SingleTrialIsReproducible) {
  MonteCarloOptions options;
  options.trials = 1;
  options.seed = 99;
  const auto spec = SingleLevel(Model::kTree, 10, 6, 0.05);
  const auto a = Simulate(spec, Method::kDfs, options);
  const auto b = Simulate(spec, Method::kDfs, options);
  EXPECT_EQ(a.stats.mean, b.stats.mean);
  EXPECT_EQ(a.stats.trials_total, 1u);
}

TEST(Table, AnalyticalGrid) {
  const TableResult sgl = RunTable(TableKind::kSingleLevel, 0, 1);
  ASSERT_EQ(sgl.cells.size(), 24u);
  EXPECT_EQ(sgl.cells[0].row, 5.0);
  EXPECT_EQ(sgl.cells[0].column, 0.001);
  EXPECT_TRUE(sgl.cells[0].blank);
  EXPECT_TRUE(sgl.cells[12].blank);
  EXPECT_TRUE(std::isnan(sgl.cells[4].empirical));
  EXPECT_EQ(sgl.cells[12].method, Method::kDfs);

  const TableResult mgl = RunTable(TableKind::kMultiLevel, 0, 1);
  ASSERT_EQ(mgl.cells.size(), 32u);
  for (const auto& c : mgl.cells) EXPECT_FALSE(c.blank);
}

TEST(Table, EmpiricalSideIsSeeded) {
  const TableResult a = RunTable(TableKind::kSingleLevel, 50, 4, 1);
  const TableResult b = RunTable(TableKind::kSingleLevel, 50, 4, 3);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (size_t i = 0; i < a.cells.size(); ++i) {
    const TableCell& c = a.cells[i];
    if (c.blank) {
      EXPECT_TRUE(std::isnan(c.empirical));
      continue;
    }
    EXPECT_EQ(c.empirical, b.cells[i].empirical);
    EXPECT_NEAR(c.error_pct,
                100.0 * std::abs(c.empirical - c.analytical.mean) /
                    c.analytical.mean,
                1e-9);
  }
}

TEST(Boundary, ShapeAndDeterminism) {
  const BoundaryResult a = RunBoundary(BoundaryKind::kSingleLevel, 10, 5);
  const BoundaryResult b = RunBoundary(BoundaryKind::kSingleLevel, 10, 5);
  EXPECT_EQ(a.x_name, "depth");
  EXPECT_EQ(a.y_name, "goal_level");
  ASSERT_EQ(a.samples.size(), 10u);
  for (size_t i = 0; i < a.samples.size(); ++i) {
    const auto& s = a.samples[i];
    EXPECT_EQ(s.bfs_time, b.samples[i].bfs_time);
    EXPECT_EQ(s.dfs_time, b.samples[i].dfs_time);
    EXPECT_GE(s.x, 4);
    EXPECT_LE(s.x, 15);
    EXPECT_GE(s.y, 3);
    EXPECT_LE(s.y, s.x);
    EXPECT_EQ(s.winner, s.dfs_time < s.bfs_time ? Method::kDfs : Method::kBfs);
  }
  EXPECT_EQ(a.accuracy, b.accuracy);
  EXPECT_FALSE(a.grid.empty());

  const BoundaryResult g = RunBoundary(BoundaryKind::kGaussian, 4, 2);
  EXPECT_EQ(g.x_name, "mu");
  for (const auto& s : g.samples) {
    EXPECT_GE(s.x, 5);
    EXPECT_LE(s.x, 14);
    EXPECT_GE(s.y, -2.0);
    EXPECT_LE(s.y, 2.0);
  }
}

TEST(Dataset, RowsAreConsistent) {
  const DatasetResult a = RunDataset(20, 7, 1);
  const DatasetResult b = RunDataset(20, 7, 4);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    const DatasetRow& r = a.rows[i];
    EXPECT_GE(r.features.num_rules, 5);
    EXPECT_LE(r.features.num_rules, 9);
    EXPECT_GE(r.features.max_depth, 11);
    EXPECT_LE(r.features.max_depth, 15);
    EXPECT_EQ(r.winner, r.dfs_time < r.bfs_time ? Method::kDfs : Method::kBfs);
    EXPECT_GE(r.goals, 1u);
    EXPECT_EQ(GrammarRules::FromMask(r.rule_mask).ToString(), r.rules);
    EXPECT_EQ(r.bfs_time, b.rows[i].bfs_time);
    EXPECT_EQ(r.dfs_time, b.rows[i].dfs_time);
  }
  EXPECT_EQ(a.rows.size(), 20u);
  EXPECT_EQ(a.skipped, b.skipped);
}

}  // namespace
}  // namespace searchtime
