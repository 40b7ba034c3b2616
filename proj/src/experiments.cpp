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

#include "searchtime/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "searchtime/colliding_branches.hpp"
#include "searchtime/error.hpp"

namespace searchtime {
namespace {

constexpr int kTableDepth = 14;
constexpr std::array<int, 4> kGoalLevels = {5, 8, 11, 14};
constexpr std::array<double, 3> kGoalProbs = {0.001, 0.01, 0.1};
constexpr std::array<int, 4> kGoalPeaks = {5, 8, 11, 14};
constexpr std::array<double, 4> kGoalSpreads = {0.1, 1.0, 10.0, 100.0};

constexpr double kBoundaryGoalProb = 0.07;
constexpr int kBoundaryDepth = 14;
constexpr double kGridStep = 0.05;
constexpr uint64_t kMaxRedraws = 1'000'000;
constexpr int kMaxLevelRetries = 100;

const double kNaN = std::numeric_limits<double>::quiet_NaN();

uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return MakeTrialRng(seed, stream)();
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double UniformReal(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Method Faster(uint64_t bfs_time, uint64_t dfs_time) {
  return dfs_time < bfs_time ? Method::kDfs : Method::kBfs;
}

DescendantCounter ClosedFormCounter(Model model, int depth) {
  return model == Model::kBinaryGrammar ? BinaryGrammarCounter(depth)
                                        : FullGrammarCounter(depth);
}

// Runs both searches on one goal set drawn from `p`, redrawing goalless sets.
struct Race {
  uint64_t bfs_time = 0;
  uint64_t dfs_time = 0;
  uint64_t redraws = 0;
};

Race RaceOnce(const SearchGraph& graph, const SearchOrder& bfs,
              const SearchOrder& dfs, const GoalProbabilities& p,
              std::mt19937_64& rng) {
  Race race;
  for (;;) {
    const std::vector<NodeId> goals = SampleGoals(graph, p, rng);
    if (!goals.empty()) {
      race.bfs_time = RunSearch(bfs, goals);
      race.dfs_time = RunSearch(dfs, goals);
      return race;
    }
    if (++race.redraws > kMaxRedraws) {
      Fail(ErrorCode::kNoGoal, "could not draw a problem with a goal");
    }
  }
}

struct PreparedGraph {
  SearchGraph graph;
  SearchOrder bfs;
  SearchOrder dfs;

  explicit PreparedGraph(SearchGraph g)
      : graph(std::move(g)),
        bfs(ComputeSearchOrder(graph, Method::kBfs)),
        dfs(ComputeSearchOrder(graph, Method::kDfs)) {}
};

std::vector<double> GridSteps(double lo, double hi) {
  std::vector<double> steps;
  const int n = static_cast<int>(std::lround((hi - lo) / kGridStep));
  for (int i = 0; i <= n; ++i) steps.push_back(lo + i * kGridStep);
  return steps;
}

}  // namespace

const char* ModelName(Model model) {
  switch (model) {
    case Model::kTree:
      return "tree";
    case Model::kBinaryGrammar:
      return "binary-grammar";
    case Model::kFullGrammar:
      return "full-grammar";
  }
  return "?";
}

std::optional<Model> ParseModel(const std::string& text) {
  for (Model m : {Model::kTree, Model::kBinaryGrammar, Model::kFullGrammar}) {
    if (text == ModelName(m)) return m;
  }
  return std::nullopt;
}

const char* MethodName(Method method) {
  return method == Method::kBfs ? "BFS" : "DFS";
}

void ProblemSpec::Validate() const {
  switch (model) {
    case Model::kTree:
      TreeModel{depth, branching}.Validate();
      break;
    case Model::kBinaryGrammar:
    case Model::kFullGrammar:
      if (depth < 0 || depth > kMaxCounterDepth) {
        Fail(ErrorCode::kCapacity, "grammar depth outside [0, 62]");
      }
      break;
  }
  if (goals == GoalModel::kSingleLevel) {
    if (goal_level < 0 || goal_level > depth) {
      Fail(ErrorCode::kInvalidArgument,
           "goal level " + std::to_string(goal_level) + " outside [0, " +
               std::to_string(depth) + "]");
    }
    if (!(goal_prob >= 0.0 && goal_prob <= 1.0)) {
      Fail(ErrorCode::kDomain, "goal probability outside [0, 1]");
    }
  } else {
    gaussian.Validate(depth);
  }
}

GoalProbabilities ProblemGoals(const ProblemSpec& spec) {
  spec.Validate();
  if (spec.goals == GoalModel::kSingleLevel) {
    return GoalProbabilities::SingleLevel(spec.depth, spec.goal_level,
                                          spec.goal_prob);
  }
  return GaussianGoalVector(spec.depth, spec.gaussian);
}

SearchGraph BuildProblemGraph(const ProblemSpec& spec) {
  spec.Validate();
  switch (spec.model) {
    case Model::kTree:
      return BuildCompleteTree(spec.branching, spec.depth);
    case Model::kBinaryGrammar:
      return BuildBinaryGrammar(spec.depth);
    case Model::kFullGrammar:
      return BuildFullGrammar(spec.depth).WithAllEligible();
  }
  return {};
}

EstimateReport Estimate(const ProblemSpec& spec, Conditioning conditioning) {
  const GoalProbabilities p = ProblemGoals(spec);
  if (!p.any_positive()) {
    Fail(ErrorCode::kNoGoal, "every goal probability is zero");
  }
  EstimateReport report;
  const bool single = spec.goals == GoalModel::kSingleLevel;

  if (spec.model == Model::kTree) {
    const TreeModel tree{spec.depth, spec.branching};
    if (single) {
      report.bfs = BfsSingleLevel(tree, spec.goal_level, spec.goal_prob,
                                  conditioning);
      report.dfs = DfsSingleLevel(tree, spec.goal_level, spec.goal_prob,
                                  conditioning);
      report.bfs_goal_terms =
          BfsSingleLevel(tree, spec.goal_level, spec.goal_prob,
                         Conditioning::kDropNoGoalTerm)
              .mean;
      report.verdict =
          SingleLevelDecision(tree, spec.goal_level, spec.goal_prob);
      report.bfs_formula = "bfs_sgl";
      report.dfs_formula = "dfs_sgl";
    } else {
      report.bfs = BfsMultiLevel(tree, p, conditioning);
      report.dfs = DfsMultiLevel(tree, p);
      report.bfs_goal_terms =
          BfsMultiLevel(tree, p, Conditioning::kDropNoGoalTerm).mean;
      report.verdict = MultiLevelDecision(tree, p);
      report.bfs_formula = "bfs_mgl";
      report.dfs_formula = "dfs_mgl";
    }
    return report;
  }

  const DescendantCounter counter = ClosedFormCounter(spec.model, spec.depth);
  auto bfs = [&](Conditioning c) {
    return single ? BfsCollidingSingleLevel(counter, spec.goal_level,
                                            spec.goal_prob, c)
                  : BfsCollidingBranches(counter, p, c);
  };
  report.bfs = bfs(conditioning);
  report.dfs = DfsCollidingBranches(counter, p, conditioning);
  report.bfs_goal_terms = bfs(Conditioning::kDropNoGoalTerm).mean;
  const double bfs_given = bfs(Conditioning::kGivenGoal).mean;
  const double dfs_given =
      DfsCollidingBranches(counter, p, Conditioning::kGivenGoal).mean;
  report.verdict = dfs_given < bfs_given ? Verdict::kDfs : Verdict::kBfs;
  report.bfs_formula = "bfs_cb";
  report.dfs_formula = "dfs_cb";
  return report;
}

double NoGoalProbability(const SearchGraph& graph, const GoalProbabilities& p) {
  if (p.depth() < graph.depth()) {
    Fail(ErrorCode::kInvalidArgument, "goal vector shorter than graph depth");
  }
  double log_none = 0.0;
  for (int k = 0; k <= graph.depth(); ++k) {
    const size_t n = graph.eligible_on_level(k).size();
    if (n == 0 || p[k] == 0.0) continue;
    if (p[k] >= 1.0) return 0.0;
    log_none += static_cast<double>(n) * std::log1p(-p[k]);
  }
  return std::exp(log_none);
}

SimulateReport Simulate(const ProblemSpec& spec, Method method,
                        const MonteCarloOptions& options) {
  const GoalProbabilities p = ProblemGoals(spec);
  const SearchGraph graph = BuildProblemGraph(spec);
  SimulateReport report;
  report.stats = MonteCarlo(graph, p, method, options);
  const Conditioning conditioning =
      options.condition_on_goal ? Conditioning::kGivenGoal
                                : Conditioning::kNone;
  const EstimateReport estimate = Estimate(spec, conditioning);
  report.estimate = method == Method::kBfs ? estimate.bfs : estimate.dfs;
  if (graph.node_count() <= kMaxOracleNodes) {
    const SearchOrder order = ComputeSearchOrder(graph, method);
    double exact = ExactExpectedRuntime(order, graph, p);
    if (options.condition_on_goal) {
      const double none = NoGoalProbability(graph, p);
      exact = (exact - static_cast<double>(graph.node_count() + 1) * none) /
              (1.0 - none);
    }
    report.oracle = exact;
  }
  return report;
}

const char* TableName(TableKind kind) {
  switch (kind) {
    case TableKind::kSingleLevel:
      return "sgl";
    case TableKind::kMultiLevel:
      return "mgl";
    case TableKind::kBinaryGrammar:
      return "bg";
  }
  return "?";
}

std::optional<TableKind> ParseTable(const std::string& text) {
  for (TableKind k : {TableKind::kSingleLevel, TableKind::kMultiLevel,
                      TableKind::kBinaryGrammar}) {
    if (text == TableName(k)) return k;
  }
  return std::nullopt;
}

TableResult RunTable(TableKind kind, uint64_t trials, uint64_t seed,
                     int threads) {
  TableResult result;
  result.kind = kind;
  result.depth = kTableDepth;
  result.trials = trials;
  result.seed = seed;

  const TreeModel tree{kTableDepth, 2};
  std::optional<DescendantCounter> counter;
  if (kind == TableKind::kBinaryGrammar) {
    counter = BinaryGrammarCounter(kTableDepth);
  }
  std::optional<SearchGraph> graph;
  if (trials > 0) {
    graph = kind == TableKind::kBinaryGrammar
                ? BuildBinaryGrammar(kTableDepth)
                : BuildCompleteTree(2, kTableDepth);
  }

  std::vector<std::pair<double, double>> grid;
  if (kind == TableKind::kMultiLevel) {
    for (int mu : kGoalPeaks) {
      for (double s2 : kGoalSpreads) grid.emplace_back(mu, s2);
    }
  } else {
    for (int g : kGoalLevels) {
      for (double p : kGoalProbs) grid.emplace_back(g, p);
    }
  }

  uint64_t stream = 0;
  for (Method method : {Method::kBfs, Method::kDfs}) {
    for (const auto& [row, column] : grid) {
      TableCell cell;
      cell.method = method;
      cell.row = row;
      cell.column = column;
      const uint64_t cell_seed = DeriveSeed(seed, stream++);
      GoalProbabilities p = GoalProbabilities::CreateAllowingZero({0.0});
      if (kind == TableKind::kMultiLevel) {
        p = GaussianGoalVector(kTableDepth,
                               {static_cast<int>(row), column});
        cell.analytical =
            method == Method::kBfs
                ? BfsMultiLevel(tree, p, Conditioning::kDropNoGoalTerm)
                : DfsMultiLevel(tree, p);
      } else {
        const int g = static_cast<int>(row);
        p = GoalProbabilities::SingleLevel(kTableDepth, g, column);
        cell.blank = g == 5 && column == 0.001;
        if (kind == TableKind::kSingleLevel) {
          cell.analytical =
              method == Method::kBfs
                  ? BfsSingleLevel(tree, g, column, Conditioning::kGivenGoal)
                  : DfsSingleLevel(tree, g, column, Conditioning::kGivenGoal);
        } else {
          cell.analytical =
              method == Method::kBfs
                  ? BfsCollidingSingleLevel(*counter, g, column,
                                            Conditioning::kGivenGoal)
                  : DfsCollidingBranches(*counter, p,
                                         Conditioning::kGivenGoal);
        }
      }

      cell.empirical = kNaN;
      cell.std_error = kNaN;
      cell.error_pct = kNaN;
      if (trials > 0 && !cell.blank) {
        MonteCarloOptions options;
        options.trials = trials;
        options.seed = cell_seed;
        options.condition_on_goal = true;
        options.threads = threads;
        const TrialStats stats = MonteCarlo(*graph, p, method, options);
        cell.empirical = stats.mean;
        cell.std_error = stats.std_error;
        cell.discarded_no_goal = stats.discarded_no_goal;
        if (cell.analytical.mean > 0.0) {
          cell.error_pct = 100.0 * std::abs(stats.mean - cell.analytical.mean) /
                           cell.analytical.mean;
        }
      }
      result.cells.push_back(cell);
    }
  }
  return result;
}

const char* BoundaryName(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::kSingleLevel:
      return "sgl-fig";
    case BoundaryKind::kBinaryGrammar:
      return "bg-fig";
    case BoundaryKind::kGaussian:
      return "gaussian-fig";
  }
  return "?";
}

std::optional<BoundaryKind> ParseBoundary(const std::string& text) {
  for (BoundaryKind k : {BoundaryKind::kSingleLevel,
                         BoundaryKind::kBinaryGrammar,
                         BoundaryKind::kGaussian}) {
    if (text == BoundaryName(k)) return k;
  }
  return std::nullopt;
}

namespace {

Method ResolveSingleLevel(const TreeModel& tree, int g, double p) {
  switch (SingleLevelDecision(tree, g, p)) {
    case Verdict::kBfs:
      return Method::kBfs;
    case Verdict::kDfs:
      return Method::kDfs;
    case Verdict::kBand:
      break;
  }
  const double bfs = BfsSingleLevel(tree, g, p, Conditioning::kGivenGoal).mean;
  const double dfs = DfsSingleLevel(tree, g, p, Conditioning::kGivenGoal).mean;
  return dfs < bfs ? Method::kDfs : Method::kBfs;
}

Verdict CollidingVerdict(const DescendantCounter& counter, int g, double p) {
  const GoalProbabilities probs =
      GoalProbabilities::SingleLevel(counter.depth(), g, p);
  const double bfs =
      BfsCollidingSingleLevel(counter, g, p, Conditioning::kGivenGoal).mean;
  const double dfs =
      DfsCollidingBranches(counter, probs, Conditioning::kGivenGoal).mean;
  return dfs < bfs ? Verdict::kDfs : Verdict::kBfs;
}

Method ToMethod(Verdict v) {
  return v == Verdict::kDfs ? Method::kDfs : Method::kBfs;
}

}  // namespace

BoundaryResult RunBoundary(BoundaryKind kind, uint64_t samples,
                           uint64_t seed) {
  BoundaryResult result;
  result.kind = kind;
  result.seed = seed;

  switch (kind) {
    case BoundaryKind::kSingleLevel: {
      result.x_name = "depth";
      result.y_name = "goal_level";
      for (int d = 4; d <= 15; ++d) {
        for (int g = 3; g <= d; ++g) {
          result.grid.push_back(
              {double(d), double(g),
               SingleLevelDecision(TreeModel{d, 2}, g, kBoundaryGoalProb)});
        }
      }
      std::map<int, PreparedGraph> trees;
      for (uint64_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng = MakeTrialRng(seed, i);
        const int d = UniformInt(rng, 4, 15);
        const int g = UniformInt(rng, 3, d);
        auto it = trees.find(d);
        if (it == trees.end()) {
          it = trees.emplace(d, PreparedGraph(BuildCompleteTree(2, d))).first;
        }
        const PreparedGraph& pg = it->second;
        const auto p = GoalProbabilities::SingleLevel(d, g, kBoundaryGoalProb);
        const Race race = RaceOnce(pg.graph, pg.bfs, pg.dfs, p, rng);
        const Method predicted =
            ResolveSingleLevel(TreeModel{d, 2}, g, kBoundaryGoalProb);
        BoundarySample s{double(d), double(g), race.bfs_time, race.dfs_time,
                         Faster(race.bfs_time, race.dfs_time), predicted,
                         race.redraws};
        result.samples.push_back(s);
      }
      break;
    }
    case BoundaryKind::kBinaryGrammar: {
      result.x_name = "goal_level";
      result.y_name = "log10_goal_prob";
      const DescendantCounter counter = BinaryGrammarCounter(kBoundaryDepth);
      for (int g = 8; g <= 14; ++g) {
        for (double y : GridSteps(-4.0, 0.0)) {
          result.grid.push_back(
              {double(g), y, CollidingVerdict(counter, g, std::pow(10.0, y))});
        }
      }
      const PreparedGraph pg(BuildBinaryGrammar(kBoundaryDepth));
      for (uint64_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng = MakeTrialRng(seed, i);
        const int g = UniformInt(rng, 8, 14);
        const double y = UniformReal(rng, -4.0, 0.0);
        const double p = std::pow(10.0, y);
        const Race race =
            RaceOnce(pg.graph, pg.bfs, pg.dfs,
                     GoalProbabilities::SingleLevel(kBoundaryDepth, g, p), rng);
        result.samples.push_back(
            {double(g), y, race.bfs_time, race.dfs_time,
             Faster(race.bfs_time, race.dfs_time),
             ToMethod(CollidingVerdict(counter, g, p)), race.redraws});
      }
      break;
    }
    case BoundaryKind::kGaussian: {
      result.x_name = "mu";
      result.y_name = "log10_sigma2";
      const TreeModel tree{kBoundaryDepth, 2};
      for (int mu = 5; mu <= 14; ++mu) {
        for (double y : GridSteps(-2.0, 2.0)) {
          const GoalProbabilities p = GaussianGoalVector(
              kBoundaryDepth, {mu, std::pow(10.0, y)});
          result.grid.push_back({double(mu), y, MultiLevelDecision(tree, p)});
        }
      }
      const PreparedGraph pg(BuildCompleteTree(2, kBoundaryDepth));
      for (uint64_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng = MakeTrialRng(seed, i);
        const int mu = UniformInt(rng, 5, 14);
        const double y = UniformReal(rng, -2.0, 2.0);
        const GoalProbabilities p =
            GaussianGoalVector(kBoundaryDepth, {mu, std::pow(10.0, y)});
        const Race race = RaceOnce(pg.graph, pg.bfs, pg.dfs, p, rng);
        result.samples.push_back({double(mu), y, race.bfs_time, race.dfs_time,
                                  Faster(race.bfs_time, race.dfs_time),
                                  ToMethod(MultiLevelDecision(tree, p)),
                                  race.redraws});
      }
      break;
    }
  }

  if (!result.samples.empty()) {
    uint64_t correct = 0;
    for (const auto& s : result.samples) correct += s.winner == s.predicted;
    result.accuracy = static_cast<double>(correct) /
                      static_cast<double>(result.samples.size());
  }
  return result;
}

double DatasetResult::DfsWinFraction() const {
  if (rows.empty()) return 0.0;
  uint64_t dfs = 0;
  for (const auto& row : rows) dfs += row.winner == Method::kDfs;
  return static_cast<double>(dfs) / static_cast<double>(rows.size());
}

namespace {

struct DatasetAttempt {
  std::optional<DatasetRow> row;
  std::string warning;
};

DatasetAttempt DrawDatasetProblem(uint64_t seed, uint64_t attempt) {
  std::mt19937_64 rng = MakeTrialRng(seed, attempt);
  std::array<int, kRuleCount - 1> pool;
  for (int i = 0; i < kRuleCount - 1; ++i) pool[i] = i + 1;
  const int r = UniformInt(rng, 4, 8);
  uint16_t mask = 1;
  for (int i = 0; i < r; ++i) {
    const int j = UniformInt(rng, i, kRuleCount - 2);
    std::swap(pool[i], pool[j]);
    mask |= static_cast<uint16_t>(1u << pool[i]);
  }
  const GrammarRules rules = GrammarRules::FromMask(mask);
  const int depth = UniformInt(rng, 11, 15);
  const int n = UniformInt(rng, 3, 5 * depth);

  const SearchGraph graph = BuildRandomGrammar(rules, depth);
  std::vector<NodeId> goals;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (int retry = 0; retry < kMaxLevelRetries && !placed; ++retry) {
      const int k = UniformInt(rng, 1, depth);
      if (k > graph.depth()) continue;
      const auto& level = graph.eligible_on_level(k);
      if (level.empty()) continue;
      const size_t idx = std::uniform_int_distribution<size_t>(
          0, level.size() - 1)(rng);
      goals.push_back(level[idx]);
      placed = true;
    }
    if (!placed) {
      return {std::nullopt,
              "problem " + std::to_string(attempt) + " (rules " +
                  rules.ToString() + ", D=" + std::to_string(depth) +
                  "): no goal-eligible node on the sampled levels; skipped"};
    }
  }
  std::sort(goals.begin(), goals.end());
  goals.erase(std::unique(goals.begin(), goals.end()), goals.end());

  DatasetRow row;
  row.features = ComputeGraphFeatures(graph, rules);
  row.rules = rules.ToString();
  row.rule_mask = rules.mask();
  row.goals = goals.size();
  row.bfs_time = RunSearch(ComputeSearchOrder(graph, Method::kBfs), goals);
  row.dfs_time = RunSearch(ComputeSearchOrder(graph, Method::kDfs), goals);
  row.winner = Faster(row.bfs_time, row.dfs_time);
  return {row, {}};
}

}  // namespace

DatasetResult RunDataset(uint64_t count, uint64_t seed, int threads) {
  if (count == 0) Fail(ErrorCode::kInvalidArgument, "count must be >= 1");
  DatasetResult result;
  result.seed = seed;
  const unsigned workers =
      threads > 0 ? static_cast<unsigned>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());

  uint64_t next = 0;
  while (result.rows.size() < count) {
    const uint64_t batch =
        std::max<uint64_t>(workers, count - result.rows.size());
    std::vector<DatasetAttempt> attempts(batch);
    auto work = [&](unsigned w) {
      for (uint64_t i = w; i < batch; i += workers) {
        attempts[i] = DrawDatasetProblem(seed, next + i);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    next += batch;
    for (auto& a : attempts) {
      if (result.rows.size() == count) break;
      if (a.row) {
        result.rows.push_back(std::move(*a.row));
      } else {
        ++result.skipped;
        result.warnings.push_back(std::move(a.warning));
      }
    }
  }
  return result;
}

}  // namespace searchtime
