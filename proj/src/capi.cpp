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

#include "searchtime/searchtime.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <utility>

#include "searchtime/colliding_branches.hpp"
#include "searchtime/distributions.hpp"
#include "searchtime/error.hpp"
#include "searchtime/experiments.hpp"
#include "searchtime/grammar.hpp"
#include "searchtime/simulator.hpp"
#include "searchtime/tree_analysis.hpp"

namespace st = searchtime;

struct st_goal_probs {
  st::GoalProbabilities value;
};
struct st_counter {
  st::DescendantCounter value;
};
struct st_graph {
  st::SearchGraph value;
};
struct st_table {
  st::TableResult value;
};
struct st_boundary {
  st::BoundaryResult value;
};
struct st_dataset {
  st::DatasetResult value;
};

namespace {

thread_local std::string last_error;

st_status Record(st_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
st_status Guard(F&& body) {
  try {
    body();
    return ST_OK;
  } catch (const st::Error& e) {
    switch (e.code()) {
      case st::ErrorCode::kInvalidArgument:
        return Record(ST_ERR_INVALID_ARGUMENT, e.what());
      case st::ErrorCode::kDomain:
        return Record(ST_ERR_DOMAIN, e.what());
      case st::ErrorCode::kCapacity:
        return Record(ST_ERR_CAPACITY, e.what());
      case st::ErrorCode::kNoGoal:
        return Record(ST_ERR_NO_GOAL, e.what());
    }
    return Record(ST_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return Record(ST_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return Record(ST_ERR_INTERNAL, e.what());
  }
}

void Require(bool ok, const char* what) {
  if (!ok) st::Fail(st::ErrorCode::kInvalidArgument, what);
}

void RequireCount(size_t have, size_t need) {
  if (have < need) {
    st::Fail(st::ErrorCode::kInvalidArgument,
             "output buffer holds " + std::to_string(have) +
                 " entries, need " + std::to_string(need));
  }
}

st::Conditioning ToConditioning(st_conditioning c) {
  switch (c) {
    case ST_COND_NONE:
      return st::Conditioning::kNone;
    case ST_COND_GIVEN_GOAL:
      return st::Conditioning::kGivenGoal;
    case ST_COND_DROP_NO_GOAL_TERM:
      return st::Conditioning::kDropNoGoalTerm;
  }
  st::Fail(st::ErrorCode::kInvalidArgument, "unknown conditioning");
}

st_conditioning FromConditioning(st::Conditioning c) {
  switch (c) {
    case st::Conditioning::kNone:
      return ST_COND_NONE;
    case st::Conditioning::kGivenGoal:
      return ST_COND_GIVEN_GOAL;
    case st::Conditioning::kDropNoGoalTerm:
      return ST_COND_DROP_NO_GOAL_TERM;
  }
  return ST_COND_NONE;
}

st::Method ToMethod(st_method m) {
  Require(m == ST_BFS || m == ST_DFS, "unknown search method");
  return m == ST_BFS ? st::Method::kBfs : st::Method::kDfs;
}

st_method FromMethod(st::Method m) {
  return m == st::Method::kBfs ? ST_BFS : ST_DFS;
}

st_verdict FromVerdict(st::Verdict v) {
  switch (v) {
    case st::Verdict::kBfs:
      return ST_VERDICT_BFS;
    case st::Verdict::kDfs:
      return ST_VERDICT_DFS;
    case st::Verdict::kBand:
      return ST_VERDICT_BAND;
  }
  return ST_VERDICT_BFS;
}

st_estimate FromEstimate(const st::RuntimeEstimate& e) {
  return {e.lower, e.mean, e.upper, FromConditioning(e.conditioning)};
}

st_trial_stats FromStats(const st::TrialStats& s) {
  return {s.trials_total, s.trials_kept, s.discarded_no_goal, s.mean,
          s.std_error};
}

st::TreeModel Tree(int depth, int branching) {
  st::TreeModel model{depth, branching};
  model.Validate();
  return model;
}

st::ProblemSpec ToSpec(const st_problem* problem) {
  Require(problem != nullptr, "problem is null");
  st::ProblemSpec spec;
  switch (problem->model) {
    case ST_MODEL_TREE:
      spec.model = st::Model::kTree;
      break;
    case ST_MODEL_BINARY_GRAMMAR:
      spec.model = st::Model::kBinaryGrammar;
      break;
    case ST_MODEL_FULL_GRAMMAR:
      spec.model = st::Model::kFullGrammar;
      break;
    default:
      st::Fail(st::ErrorCode::kInvalidArgument, "unknown model");
  }
  spec.depth = problem->depth;
  spec.branching = problem->branching;
  spec.goals = problem->gaussian ? st::GoalModel::kGaussian
                                 : st::GoalModel::kSingleLevel;
  spec.goal_level = problem->goal_level;
  spec.goal_prob = problem->goal_prob;
  spec.gaussian = {problem->mu, problem->sigma2};
  return spec;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Handle, typename Value>
void Emit(Handle** out, Value&& value) {
  Require(out != nullptr, "output handle pointer is null");
  *out = new Handle{std::forward<Value>(value)};
}

}  // namespace

extern "C" {

const char* st_version(void) { return "0.3.0"; }

const char* st_last_error(void) { return last_error.c_str(); }

const char* st_status_name(st_status status) {
  switch (status) {
    case ST_OK:
      return "ok";
    case ST_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ST_ERR_DOMAIN:
      return "domain error";
    case ST_ERR_CAPACITY:
      return "capacity exceeded";
    case ST_ERR_NO_GOAL:
      return "no goal";
    case ST_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void st_string_free(char* s) { std::free(s); }

st_status st_tc(double p, uint64_t m, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::TruncatedGeometricMean(p, m);
  });
}

st_status st_exp_rate(double p, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::ExponentialRate(p);
  });
}

st_status st_level_goal_prob(double p, uint64_t n_k, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::LevelGoalProbability(p, n_k);
  });
}

st_status st_goal_probs_create(const double* probs, size_t count,
                               st_goal_probs** out) {
  return Guard([&] {
    Require(probs != nullptr && count > 0, "empty goal probability vector");
    Emit(out, st::GoalProbabilities::Create(
                  std::vector<double>(probs, probs + count)));
  });
}

st_status st_goal_probs_single(int depth, int level, double p,
                               st_goal_probs** out) {
  return Guard(
      [&] { Emit(out, st::GoalProbabilities::SingleLevel(depth, level, p)); });
}

st_status st_goal_probs_gaussian(int depth, int mu, double sigma2,
                                 st_goal_probs** out) {
  return Guard(
      [&] { Emit(out, st::GaussianGoalVector(depth, {mu, sigma2})); });
}

void st_goal_probs_destroy(st_goal_probs* p) { delete p; }

int st_goal_probs_depth(const st_goal_probs* p) { return p->value.depth(); }

double st_goal_probs_get(const st_goal_probs* p, int level) {
  return p->value[level];
}

st_status st_first_goal_level_probs(const st_goal_probs* p,
                                    const uint64_t* sizes, size_t size_count,
                                    double* out, size_t out_count) {
  return Guard([&] {
    Require(p != nullptr && sizes != nullptr && out != nullptr,
            "null argument");
    st::LevelSizes levels{std::vector<uint64_t>(sizes, sizes + size_count)};
    const std::vector<double> f =
        st::FirstGoalLevelProbabilities(p->value, levels);
    RequireCount(out_count, f.size());
    std::copy(f.begin(), f.end(), out);
  });
}

st_status st_bfs_sgl(int depth, int branching, int goal_level,
                     double goal_prob, st_conditioning c, st_estimate* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = FromEstimate(st::BfsSingleLevel(Tree(depth, branching), goal_level,
                                           goal_prob, ToConditioning(c)));
  });
}

st_status st_dfs_sgl(int depth, int branching, int goal_level,
                     double goal_prob, st_conditioning c, st_estimate* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = FromEstimate(st::DfsSingleLevel(Tree(depth, branching), goal_level,
                                           goal_prob, ToConditioning(c)));
  });
}

st_status st_sgl_decision(int depth, int branching, int goal_level,
                          double goal_prob, st_verdict* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = FromVerdict(
        st::SingleLevelDecision(Tree(depth, branching), goal_level, goal_prob));
  });
}

st_status st_boundary_shift(int depth, int branching, int goal_level,
                            double goal_prob, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::BoundaryShift(Tree(depth, branching), goal_level, goal_prob);
  });
}

st_status st_bfs_mgl(int depth, int branching, const st_goal_probs* p,
                     st_conditioning c, st_estimate* out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = FromEstimate(
        st::BfsMultiLevel(Tree(depth, branching), p->value, ToConditioning(c)));
  });
}

st_status st_dfs_mgl(int depth, int branching, const st_goal_probs* p,
                     st_estimate* out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = FromEstimate(st::DfsMultiLevel(Tree(depth, branching), p->value));
  });
}

st_status st_mgl_decision(int depth, int branching, const st_goal_probs* p,
                          st_verdict* out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = FromVerdict(
        st::MultiLevelDecision(Tree(depth, branching), p->value));
  });
}

st_status st_counter_binary_grammar(int depth, st_counter** out) {
  return Guard([&] { Emit(out, st::BinaryGrammarCounter(depth)); });
}

st_status st_counter_full_grammar(int depth, st_counter** out) {
  return Guard([&] { Emit(out, st::FullGrammarCounter(depth)); });
}

st_status st_counter_create(int depth, const uint64_t* entries,
                            st_counter** out) {
  return Guard([&] {
    Require(entries != nullptr, "entries is null");
    st::DescendantCounter counter(depth);
    for (int n = 0; n <= depth; ++n) {
      for (int d = 0; d <= depth; ++d) {
        counter.set(n, d, entries[static_cast<size_t>(n) * (depth + 1) + d]);
      }
    }
    counter.Validate();
    Emit(out, std::move(counter));
  });
}

void st_counter_destroy(st_counter* c) { delete c; }

int st_counter_depth(const st_counter* c) { return c->value.depth(); }

uint64_t st_counter_get(const st_counter* c, int n, int d) {
  return c->value(n, d);
}

int st_counter_equal(const st_counter* a, const st_counter* b) {
  return a->value == b->value ? 1 : 0;
}

st_status st_lbg(int n, int d, uint64_t* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::BinaryGrammarCount(n, d);
  });
}

st_status st_lfg(int n, int d, uint64_t* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::FullGrammarCount(n, d);
  });
}

st_status st_abg(int n, int d, uint64_t* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    *out = st::BinaryGrammarExplorables(n, d);
  });
}

st_status st_subgraph_sizes(const st_counter* c, uint64_t* out,
                            size_t out_count) {
  return Guard([&] {
    Require(c != nullptr && out != nullptr, "null argument");
    const st::SubgraphSizes sizes = st::ComputeSubgraphSizes(c->value);
    RequireCount(out_count, sizes.s.size());
    std::copy(sizes.s.begin(), sizes.s.end(), out);
  });
}

st_status st_explorable_goal_probs(const st_counter* c, const st_goal_probs* p,
                                   double* out, size_t out_count) {
  return Guard([&] {
    Require(c != nullptr && p != nullptr && out != nullptr, "null argument");
    const st::ExplorableGoalProbs probs =
        st::ComputeExplorableGoalProbs(c->value, p->value);
    RequireCount(out_count, probs.phi.size());
    std::copy(probs.phi.begin(), probs.phi.end(), out);
  });
}

st_status st_dfs_cb(const st_counter* c, const st_goal_probs* p,
                    st_conditioning cond, st_estimate* out) {
  return Guard([&] {
    Require(c != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = FromEstimate(
        st::DfsCollidingBranches(c->value, p->value, ToConditioning(cond)));
  });
}

st_status st_bfs_cb(const st_counter* c, const st_goal_probs* p,
                    st_conditioning cond, st_estimate* out) {
  return Guard([&] {
    Require(c != nullptr && p != nullptr && out != nullptr, "null argument");
    *out = FromEstimate(
        st::BfsCollidingBranches(c->value, p->value, ToConditioning(cond)));
  });
}

st_status st_bfs_cb_sgl(const st_counter* c, int goal_level, double goal_prob,
                        st_conditioning cond, st_estimate* out) {
  return Guard([&] {
    Require(c != nullptr && out != nullptr, "null argument");
    *out = FromEstimate(st::BfsCollidingSingleLevel(
        c->value, goal_level, goal_prob, ToConditioning(cond)));
  });
}

st_status st_graph_complete_tree(int branching, int depth, st_graph** out) {
  return Guard([&] { Emit(out, st::BuildCompleteTree(branching, depth)); });
}

st_status st_graph_binary_grammar(int depth, st_graph** out) {
  return Guard([&] { Emit(out, st::BuildBinaryGrammar(depth)); });
}

st_status st_graph_full_grammar(int depth, st_graph** out) {
  return Guard([&] { Emit(out, st::BuildFullGrammar(depth)); });
}

st_status st_graph_random_grammar(uint32_t rule_mask, int depth,
                                  st_graph** out) {
  return Guard([&] {
    Require(rule_mask < (1u << st::kRuleCount), "rule mask has unknown bits");
    Emit(out, st::BuildRandomGrammar(
                  st::GrammarRules::FromMask(static_cast<uint16_t>(rule_mask)),
                  depth));
  });
}

st_status st_parse_rules(const char* text, uint32_t* mask) {
  return Guard([&] {
    Require(text != nullptr && mask != nullptr, "null argument");
    *mask = st::GrammarRules::Parse(text).mask();
  });
}

st_status st_rules_to_string(uint32_t rule_mask, char** out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    Require(rule_mask < (1u << st::kRuleCount), "rule mask has unknown bits");
    *out = CopyString(
        st::GrammarRules::FromMask(static_cast<uint16_t>(rule_mask))
            .ToString());
  });
}

void st_graph_destroy(st_graph* g) { delete g; }

size_t st_graph_node_count(const st_graph* g) { return g->value.node_count(); }

size_t st_graph_edge_count(const st_graph* g) { return g->value.edge_count(); }

int st_graph_depth(const st_graph* g) { return g->value.depth(); }

st_status st_graph_level_sizes(const st_graph* g, uint64_t* out,
                               size_t out_count) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const st::LevelSizes sizes = g->value.Sizes();
    RequireCount(out_count, sizes.sizes.size());
    std::copy(sizes.sizes.begin(), sizes.sizes.end(), out);
  });
}

st_status st_graph_export(const st_graph* g, char** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    std::ostringstream text;
    g->value.ExportText(text);
    *out = CopyString(text.str());
  });
}

st_status st_graph_features(const st_graph* g, uint32_t rule_mask,
                            st_features* out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const st::GraphFeatures f = st::ComputeGraphFeatures(
        g->value, st::GrammarRules::FromMask(static_cast<uint16_t>(rule_mask)));
    *out = {f.mean_branching, f.std_branching, f.num_rules, f.max_depth};
  });
}

st_status st_descendant_counter(const st_graph* g, st_counter** out) {
  return Guard([&] {
    Require(g != nullptr, "graph is null");
    Emit(out, st::ComputeDescendantCounter(g->value));
  });
}

st_status st_search_order(const st_graph* g, st_method m, uint32_t* out,
                          size_t out_count) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const st::SearchOrder order = st::ComputeSearchOrder(g->value, ToMethod(m));
    RequireCount(out_count, order.nodes.size());
    std::copy(order.nodes.begin(), order.nodes.end(), out);
  });
}

st_status st_sample_goal_mask(const st_graph* g, const st_goal_probs* p,
                              uint64_t seed, uint8_t* out, size_t out_count) {
  return Guard([&] {
    Require(g != nullptr && p != nullptr && out != nullptr, "null argument");
    const st::GoalMask mask = st::SampleGoalMask(g->value, p->value, seed);
    RequireCount(out_count, mask.size());
    std::copy(mask.begin(), mask.end(), out);
  });
}

st_status st_run_search(const st_graph* g, st_method m, const uint8_t* mask,
                        size_t mask_count, uint64_t* out) {
  return Guard([&] {
    Require(g != nullptr && mask != nullptr && out != nullptr,
            "null argument");
    const st::SearchOrder order = st::ComputeSearchOrder(g->value, ToMethod(m));
    *out = st::RunSearch(order, st::GoalMask(mask, mask + mask_count));
  });
}

st_status st_exact_expected_runtime(const st_graph* g, st_method m,
                                    const st_goal_probs* p, double* out) {
  return Guard([&] {
    Require(g != nullptr && p != nullptr && out != nullptr, "null argument");
    const st::SearchOrder order = st::ComputeSearchOrder(g->value, ToMethod(m));
    *out = st::ExactExpectedRuntime(order, g->value, p->value);
  });
}

st_status st_monte_carlo(const st_graph* g, const st_goal_probs* p,
                         st_method m, uint64_t trials, uint64_t seed,
                         int condition_on_goal, int threads,
                         st_trial_stats* out) {
  return Guard([&] {
    Require(g != nullptr && p != nullptr && out != nullptr, "null argument");
    st::MonteCarloOptions options;
    options.trials = trials;
    options.seed = seed;
    options.condition_on_goal = condition_on_goal != 0;
    options.threads = threads;
    *out = FromStats(st::MonteCarlo(g->value, p->value, ToMethod(m), options));
  });
}

st_status st_estimate_problem(const st_problem* problem, st_conditioning c,
                              st_estimate_report* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    const st::EstimateReport r =
        st::Estimate(ToSpec(problem), ToConditioning(c));
    out->bfs = FromEstimate(r.bfs);
    out->dfs = FromEstimate(r.dfs);
    out->bfs_goal_terms = r.bfs_goal_terms;
    out->verdict = FromVerdict(r.verdict);
    out->bfs_formula = r.bfs_formula;
    out->dfs_formula = r.dfs_formula;
  });
}

st_status st_simulate_problem(const st_problem* problem, st_method m,
                              uint64_t trials, uint64_t seed,
                              int condition_on_goal, int threads,
                              st_simulate_report* out) {
  return Guard([&] {
    Require(out != nullptr, "out is null");
    st::MonteCarloOptions options;
    options.trials = trials;
    options.seed = seed;
    options.condition_on_goal = condition_on_goal != 0;
    options.threads = threads;
    const st::SimulateReport r =
        st::Simulate(ToSpec(problem), ToMethod(m), options);
    out->stats = FromStats(r.stats);
    out->estimate = FromEstimate(r.estimate);
    out->has_oracle = r.oracle.has_value() ? 1 : 0;
    out->oracle = r.oracle.value_or(0.0);
  });
}

st_status st_table_run(st_table_kind kind, uint64_t trials, uint64_t seed,
                       int threads, st_table** out) {
  return Guard([&] {
    st::TableKind k;
    switch (kind) {
      case ST_TABLE_SGL:
        k = st::TableKind::kSingleLevel;
        break;
      case ST_TABLE_MGL:
        k = st::TableKind::kMultiLevel;
        break;
      case ST_TABLE_BG:
        k = st::TableKind::kBinaryGrammar;
        break;
      default:
        st::Fail(st::ErrorCode::kInvalidArgument, "unknown table");
    }
    Emit(out, st::RunTable(k, trials, seed, threads));
  });
}

void st_table_destroy(st_table* t) { delete t; }

int st_table_depth(const st_table* t) { return t->value.depth; }

size_t st_table_cell_count(const st_table* t) { return t->value.cells.size(); }

st_status st_table_get_cell(const st_table* t, size_t i, st_table_cell* out) {
  return Guard([&] {
    Require(t != nullptr && out != nullptr, "null argument");
    Require(i < t->value.cells.size(), "cell index out of range");
    const st::TableCell& c = t->value.cells[i];
    *out = {FromMethod(c.method), c.row,       c.column,
            c.blank ? 1 : 0,      FromEstimate(c.analytical),
            c.empirical,          c.std_error, c.error_pct,
            c.discarded_no_goal};
  });
}

st_status st_boundary_run(st_boundary_kind kind, uint64_t samples,
                          uint64_t seed, st_boundary** out) {
  return Guard([&] {
    st::BoundaryKind k;
    switch (kind) {
      case ST_BOUNDARY_SGL:
        k = st::BoundaryKind::kSingleLevel;
        break;
      case ST_BOUNDARY_BG:
        k = st::BoundaryKind::kBinaryGrammar;
        break;
      case ST_BOUNDARY_GAUSSIAN:
        k = st::BoundaryKind::kGaussian;
        break;
      default:
        st::Fail(st::ErrorCode::kInvalidArgument, "unknown boundary");
    }
    Emit(out, st::RunBoundary(k, samples, seed));
  });
}

void st_boundary_destroy(st_boundary* b) { delete b; }

const char* st_boundary_x_name(const st_boundary* b) {
  return b->value.x_name.c_str();
}

const char* st_boundary_y_name(const st_boundary* b) {
  return b->value.y_name.c_str();
}

double st_boundary_accuracy(const st_boundary* b) { return b->value.accuracy; }

size_t st_boundary_grid_count(const st_boundary* b) {
  return b->value.grid.size();
}

st_status st_boundary_grid_point(const st_boundary* b, size_t i,
                                 st_boundary_point* out) {
  return Guard([&] {
    Require(b != nullptr && out != nullptr, "null argument");
    Require(i < b->value.grid.size(), "grid index out of range");
    const st::BoundaryPoint& p = b->value.grid[i];
    *out = {p.x, p.y, FromVerdict(p.verdict)};
  });
}

size_t st_boundary_sample_count(const st_boundary* b) {
  return b->value.samples.size();
}

st_status st_boundary_sample_at(const st_boundary* b, size_t i,
                                st_boundary_sample* out) {
  return Guard([&] {
    Require(b != nullptr && out != nullptr, "null argument");
    Require(i < b->value.samples.size(), "sample index out of range");
    const st::BoundarySample& s = b->value.samples[i];
    *out = {s.x,
            s.y,
            s.bfs_time,
            s.dfs_time,
            FromMethod(s.winner),
            FromMethod(s.predicted),
            s.redraws};
  });
}

st_status st_dataset_run(uint64_t count, uint64_t seed, int threads,
                         st_dataset** out) {
  return Guard([&] { Emit(out, st::RunDataset(count, seed, threads)); });
}

void st_dataset_destroy(st_dataset* d) { delete d; }

size_t st_dataset_row_count(const st_dataset* d) {
  return d->value.rows.size();
}

st_status st_dataset_get_row(const st_dataset* d, size_t i,
                             st_dataset_row* out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    Require(i < d->value.rows.size(), "row index out of range");
    const st::DatasetRow& r = d->value.rows[i];
    out->features = {r.features.mean_branching, r.features.std_branching,
                     r.features.num_rules, r.features.max_depth};
    out->rule_mask = r.rule_mask;
    out->goals = r.goals;
    out->bfs_time = r.bfs_time;
    out->dfs_time = r.dfs_time;
    out->winner = FromMethod(r.winner);
  });
}

uint64_t st_dataset_skipped(const st_dataset* d) { return d->value.skipped; }

size_t st_dataset_warning_count(const st_dataset* d) {
  return d->value.warnings.size();
}

const char* st_dataset_warning(const st_dataset* d, size_t i) {
  return d->value.warnings[i].c_str();
}

double st_dataset_dfs_win_fraction(const st_dataset* d) {
  return d->value.DfsWinFraction();
}

}  // extern "C"
