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
#include <cstring>
#include <string>
#include <vector>

#include "searchtime/searchtime.h"

namespace {

TEST(CApi, VersionAndErrors) {
  EXPECT_STREQ(st_version(), "0.3.0");
  double out = 0.0;
  EXPECT_EQ(st_tc(0.0, 5, &out), ST_ERR_DOMAIN);
  EXPECT_NE(std::string(st_last_error()).find("0 < p"), std::string::npos);
  EXPECT_EQ(st_tc(0.5, 5, nullptr), ST_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(st_status_name(ST_ERR_NO_GOAL), "no goal");
  EXPECT_EQ(st_tc(0.01, 256, &out), ST_OK);
  EXPECT_NEAR(out, 78.85, 0.01);
  EXPECT_EQ(st_exp_rate(0.5, &out), ST_OK);
  EXPECT_NEAR(out, std::log(2.0), 1e-15);
  EXPECT_EQ(st_level_goal_prob(0.01, 256, &out), ST_OK);
  EXPECT_NEAR(out, 1.0 - std::pow(0.99, 256), 1e-12);
}

TEST(CApi, GoalProbsAndTrees) {
  st_goal_probs* p = nullptr;
  ASSERT_EQ(st_goal_probs_gaussian(14, 5, 0.1, &p), ST_OK);
  EXPECT_EQ(st_goal_probs_depth(p), 14);
  EXPECT_NEAR(st_goal_probs_get(p, 5), 0.158114, 1e-6);
  st_estimate e;
  ASSERT_EQ(st_dfs_mgl(14, 2, p, &e), ST_OK);
  EXPECT_NEAR(e.mean, 5949.04, 0.01);
  ASSERT_EQ(st_bfs_mgl(14, 2, p, ST_COND_DROP_NO_GOAL_TERM, &e), ST_OK);
  EXPECT_NEAR(e.mean, 37.04, 0.005);
  EXPECT_EQ(e.conditioning, ST_COND_DROP_NO_GOAL_TERM);
  st_verdict v;
  ASSERT_EQ(st_mgl_decision(14, 2, p, &v), ST_OK);
  EXPECT_EQ(v, ST_VERDICT_BFS);
  std::vector<uint64_t> sizes;
  for (int k = 0; k <= 14; ++k) sizes.push_back(uint64_t{1} << k);
  std::vector<double> first(16);
  ASSERT_EQ(st_first_goal_level_probs(p, sizes.data(), sizes.size(),
                                      first.data(), first.size()),
            ST_OK);
  double total = 0.0;
  for (double f : first) total += f;
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_EQ(st_first_goal_level_probs(p, sizes.data(), sizes.size(),
                                      first.data(), 3),
            ST_ERR_INVALID_ARGUMENT);
  st_goal_probs_destroy(p);
  p = nullptr;

  ASSERT_EQ(st_bfs_sgl(14, 2, 8, 0.01, ST_COND_GIVEN_GOAL, &e), ST_OK);
  EXPECT_NEAR(e.mean, 333.85, 0.005);
  ASSERT_EQ(st_dfs_sgl(14, 2, 14, 0.1, ST_COND_GIVEN_GOAL, &e), ST_OK);
  EXPECT_NEAR(e.mean, 20.0, 1e-9);
  ASSERT_EQ(st_sgl_decision(14, 2, 14, 0.1, &v), ST_OK);
  EXPECT_EQ(v, ST_VERDICT_DFS);

  const double probs[] = {0.0, 0.0};
  EXPECT_EQ(st_goal_probs_create(probs, 2, &p), ST_ERR_NO_GOAL);
  EXPECT_EQ(p, nullptr);
}

TEST(CApi, CountersAndCollidingBranches) {
  uint64_t n = 0;
  ASSERT_EQ(st_lbg(1, 3, &n), ST_OK);
  EXPECT_EQ(n, 7u);
  ASSERT_EQ(st_lfg(0, 2, &n), ST_OK);
  EXPECT_EQ(n, 16u);
  ASSERT_EQ(st_abg(1, 3, &n), ST_OK);
  EXPECT_EQ(n, 3u);
  EXPECT_EQ(st_lfg(0, 62, &n), ST_ERR_CAPACITY);

  st_counter* c = nullptr;
  ASSERT_EQ(st_counter_binary_grammar(14, &c), ST_OK);
  st_goal_probs* p = nullptr;
  ASSERT_EQ(st_goal_probs_single(14, 8, 0.01, &p), ST_OK);
  st_estimate e;
  ASSERT_EQ(st_dfs_cb(c, p, ST_COND_GIVEN_GOAL, &e), ST_OK);
  EXPECT_NEAR(e.lower, 22151.33, 0.01);
  EXPECT_NEAR(e.mean, 24420.62, 0.01);
  EXPECT_NEAR(e.upper, 26689.92, 0.01);
  ASSERT_EQ(st_bfs_cb_sgl(c, 8, 0.01, ST_COND_GIVEN_GOAL, &e), ST_OK);
  EXPECT_NEAR(e.mean, 333.85, 0.005);
  std::vector<uint64_t> sizes(17);
  ASSERT_EQ(st_subgraph_sizes(c, sizes.data(), sizes.size()), ST_OK);
  EXPECT_EQ(sizes[1], (uint64_t{1} << 15) - 1);
  st_goal_probs_destroy(p);

  st_graph* g = nullptr;
  ASSERT_EQ(st_graph_binary_grammar(6, &g), ST_OK);
  st_counter* computed = nullptr;
  ASSERT_EQ(st_descendant_counter(g, &computed), ST_OK);
  st_counter* closed = nullptr;
  ASSERT_EQ(st_counter_binary_grammar(6, &closed), ST_OK);
  EXPECT_EQ(st_counter_equal(computed, closed), 1);
  EXPECT_EQ(st_counter_get(closed, 1, 3), 7u);
  st_counter_destroy(computed);
  st_counter_destroy(closed);
  st_graph_destroy(g);
  st_counter_destroy(c);
}

TEST(CApi, GraphsAndSimulation) {
  st_graph* g = nullptr;
  ASSERT_EQ(st_graph_complete_tree(2, 2, &g), ST_OK);
  EXPECT_EQ(st_graph_node_count(g), 7u);
  EXPECT_EQ(st_graph_edge_count(g), 6u);
  EXPECT_EQ(st_graph_depth(g), 2);
  std::vector<uint32_t> order(7);
  ASSERT_EQ(st_search_order(g, ST_DFS, order.data(), order.size()), ST_OK);
  EXPECT_EQ(order[0], 0u);
  st_goal_probs* p = nullptr;
  ASSERT_EQ(st_goal_probs_single(2, 1, 0.5, &p), ST_OK);
  double expected = 0.0;
  ASSERT_EQ(st_exact_expected_runtime(g, ST_BFS, p, &expected), ST_OK);
  EXPECT_NEAR(expected, 3.75, 1e-12);
  ASSERT_EQ(st_exact_expected_runtime(g, ST_DFS, p, &expected), ST_OK);
  EXPECT_NEAR(expected, 4.25, 1e-12);

  std::vector<uint8_t> mask(7, 0);
  uint64_t explored = 0;
  ASSERT_EQ(st_run_search(g, ST_BFS, mask.data(), mask.size(), &explored),
            ST_OK);
  EXPECT_EQ(explored, 8u);
  ASSERT_EQ(st_sample_goal_mask(g, p, 4, mask.data(), mask.size()), ST_OK);
  EXPECT_EQ(mask[0], 0);

  st_trial_stats s;
  ASSERT_EQ(st_monte_carlo(g, p, ST_BFS, 20000, 1, 0, 1, &s), ST_OK);
  EXPECT_LE(std::abs(s.mean - 3.75), 4.0 * s.std_error);
  st_goal_probs_destroy(p);

  char* text = nullptr;
  ASSERT_EQ(st_graph_export(g, &text), ST_OK);
  EXPECT_EQ(std::string(text).substr(0, 8), "0\tr\t0\t1\n");
  st_string_free(text);
  st_graph_destroy(g);

  uint32_t rules = 0;
  ASSERT_EQ(st_parse_rules("S->Sa,S->bS", &rules), ST_OK);
  EXPECT_EQ(rules, 0x13u);
  EXPECT_EQ(st_parse_rules("S->zz", &rules), ST_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(st_rules_to_string(rules, &text), ST_OK);
  EXPECT_STREQ(text, "S->e,S->Sa,S->bS");
  st_string_free(text);
  ASSERT_EQ(st_graph_random_grammar(rules, 11, &g), ST_OK);
  st_features f;
  ASSERT_EQ(st_graph_features(g, rules, &f), ST_OK);
  EXPECT_EQ(f.num_rules, 3);
  EXPECT_EQ(f.max_depth, 11);
  st_graph_destroy(g);
}

TEST(CApi, Drivers) {
  st_problem problem{};
  problem.model = ST_MODEL_BINARY_GRAMMAR;
  problem.depth = 14;
  problem.goal_level = 14;
  problem.goal_prob = 0.1;
  st_estimate_report r;
  ASSERT_EQ(st_estimate_problem(&problem, ST_COND_GIVEN_GOAL, &r), ST_OK);
  EXPECT_NEAR(r.dfs.mean, 20.06, 0.005);
  EXPECT_STREQ(r.dfs_formula, "dfs_cb");

  problem.goal_level = 20;
  EXPECT_EQ(st_estimate_problem(&problem, ST_COND_NONE, &r),
            ST_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(st_estimate_problem(nullptr, ST_COND_NONE, &r),
            ST_ERR_INVALID_ARGUMENT);

  st_problem small{};
  small.model = ST_MODEL_TREE;
  small.depth = 6;
  small.branching = 2;
  small.goal_level = 3;
  small.goal_prob = 0.2;
  st_simulate_report s;
  ASSERT_EQ(st_simulate_problem(&small, ST_BFS, 10000, 1, 0, 0, &s), ST_OK);
  ASSERT_EQ(s.has_oracle, 1);
  EXPECT_LE(std::abs(s.stats.mean - s.oracle), 4.0 * s.stats.std_error);

  st_table* t = nullptr;
  ASSERT_EQ(st_table_run(ST_TABLE_BG, 0, 1, 0, &t), ST_OK);
  EXPECT_EQ(st_table_depth(t), 14);
  ASSERT_EQ(st_table_cell_count(t), 24u);
  st_table_cell cell;
  ASSERT_EQ(st_table_get_cell(t, 16, &cell), ST_OK);
  EXPECT_EQ(cell.method, ST_DFS);
  EXPECT_EQ(cell.row, 8.0);
  EXPECT_EQ(cell.column, 0.01);
  EXPECT_NEAR(cell.analytical.mean, 24420.62, 0.01);
  EXPECT_TRUE(std::isnan(cell.empirical));
  EXPECT_EQ(st_table_get_cell(t, 24, &cell), ST_ERR_INVALID_ARGUMENT);
  st_table_destroy(t);

  st_boundary* b = nullptr;
  ASSERT_EQ(st_boundary_run(ST_BOUNDARY_BG, 5, 1, &b), ST_OK);
  EXPECT_STREQ(st_boundary_x_name(b), "goal_level");
  EXPECT_EQ(st_boundary_sample_count(b), 5u);
  EXPECT_GT(st_boundary_grid_count(b), 0u);
  const double acc = st_boundary_accuracy(b);
  EXPECT_GE(acc, 0.0);
  EXPECT_LE(acc, 1.0);
  st_boundary_destroy(b);

  st_dataset* d = nullptr;
  ASSERT_EQ(st_dataset_run(5, 2, 0, &d), ST_OK);
  EXPECT_EQ(st_dataset_row_count(d), 5u);
  st_dataset_row row;
  ASSERT_EQ(st_dataset_get_row(d, 0, &row), ST_OK);
  EXPECT_EQ(row.winner, row.dfs_time < row.bfs_time ? ST_DFS : ST_BFS);
  st_dataset_destroy(d);
  EXPECT_EQ(st_dataset_run(0, 2, 0, &d), ST_ERR_INVALID_ARGUMENT);
}

TEST(CApi, NullHandlesAreSafe) {
  st_graph_destroy(nullptr);
  st_goal_probs_destroy(nullptr);
  st_counter_destroy(nullptr);
  st_table_destroy(nullptr);
  st_boundary_destroy(nullptr);
  st_dataset_destroy(nullptr);
  st_string_free(nullptr);
  st_graph* g = nullptr;
  EXPECT_EQ(st_graph_complete_tree(1, 3, &g), ST_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(g, nullptr);
}

}  // namespace
