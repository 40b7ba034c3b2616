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

#include "searchtime/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "searchtime/error.hpp"

namespace searchtime {
namespace {

constexpr uint64_t kNoGoal = std::numeric_limits<uint64_t>::max();

void CheckCoverage(const SearchGraph& graph, const GoalProbabilities& p) {
  if (p.depth() < graph.depth()) {
    Fail(ErrorCode::kInvalidArgument,
         "goal vector depth " + std::to_string(p.depth()) +
             " is smaller than graph depth " + std::to_string(graph.depth()));
  }
}

// Failures before the first success of a Bernoulli(p) sequence.
uint64_t GeometricSkip(double p, std::mt19937_64& rng) {
  if (p >= 1.0) return 0;
  const double u = 1.0 - std::generate_canonical<double, 64>(rng);  // (0, 1]
  const double skip = std::floor(std::log(u) / std::log1p(-p));
  if (!(skip < 1.8e19)) return kNoGoal;
  return static_cast<uint64_t>(skip);
}

// Search ranks of the goal-eligible nodes, per level, ascending.
std::vector<std::vector<uint32_t>> EligibleRanksByLevel(
    const SearchGraph& graph, const SearchOrder& order) {
  std::vector<std::vector<uint32_t>> ranks(graph.depth() + 1);
  for (int k = 0; k <= graph.depth(); ++k) {
    for (NodeId v : graph.eligible_on_level(k)) {
      ranks[k].push_back(order.rank[v]);
    }
    std::sort(ranks[k].begin(), ranks[k].end());
  }
  return ranks;
}

}  // namespace

SearchGraph BuildCompleteTree(int branching, int depth) {
  if (branching < 2) {
    Fail(ErrorCode::kInvalidArgument, "branching factor must be at least 2");
  }
  if (depth < 0) Fail(ErrorCode::kInvalidArgument, "depth must be >= 0");
  uint64_t width = 1;
  uint64_t total = 1;
  for (int k = 1; k <= depth; ++k) {
    if (__builtin_mul_overflow(width, static_cast<uint64_t>(branching),
                               &width) ||
        width > (uint64_t{1} << 40)) {
      Fail(ErrorCode::kCapacity, "complete tree exceeds b^D <= 2^40");
    }
    total += width;
  }
  if (total >= std::numeric_limits<NodeId>::max()) {
    Fail(ErrorCode::kCapacity,
         "complete tree with " + std::to_string(total) + " nodes is too large");
  }

  SearchGraph::Builder builder(LabelKind::kTreePath, branching);
  builder.set_depth_limit(depth);
  uint64_t first = 0;
  width = 1;
  for (int k = 0; k <= depth; ++k) {
    for (uint64_t i = 0; i < width; ++i) {
      builder.AddNode(k, true, false, first + i);
    }
    first += width;
    width *= branching;
  }
  const uint64_t internal = total - width / branching;
  for (uint64_t v = 0; v < internal; ++v) {
    for (int c = 0; c < branching; ++c) {
      builder.AddEdge(static_cast<NodeId>(v),
                      static_cast<NodeId>(v * branching + 1 + c),
                      static_cast<uint8_t>(c));
    }
  }
  return std::move(builder).Build();
}

SearchOrder ComputeSearchOrder(const SearchGraph& graph, Method method) {
  const size_t n = graph.node_count();
  SearchOrder order;
  order.method = method;
  order.nodes.reserve(n);
  order.rank.assign(n, std::numeric_limits<uint32_t>::max());
  if (n == 0) return order;
  std::vector<uint8_t> discovered(n, 0);
  auto check = [&](NodeId v) {
    order.rank[v] = static_cast<uint32_t>(order.nodes.size());
    order.nodes.push_back(v);
  };

  if (method == Method::kBfs) {
    std::deque<NodeId> queue;
    discovered[graph.root()] = 1;
    queue.push_back(graph.root());
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      if (order.rank[v] == std::numeric_limits<uint32_t>::max()) check(v);
      for (NodeId c : graph.children(v)) {
        if (discovered[c]) continue;
        discovered[c] = 1;
        if (graph.checked_on_discovery(c)) check(c);
        queue.push_back(c);
      }
    }
    return order;
  }

  // Iterative preorder: (node, next child index).
  std::vector<std::pair<NodeId, uint32_t>> stack;
  discovered[graph.root()] = 1;
  check(graph.root());
  stack.emplace_back(graph.root(), 0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto kids = graph.children(v);
    if (next == kids.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId c = kids[next++];
    if (discovered[c]) continue;
    discovered[c] = 1;
    check(c);
    stack.emplace_back(c, 0);
  }
  return order;
}

std::mt19937_64 MakeTrialRng(uint64_t seed, uint64_t stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream),
                    static_cast<uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::vector<NodeId> SampleGoals(const SearchGraph& graph,
                                const GoalProbabilities& p,
                                std::mt19937_64& rng) {
  CheckCoverage(graph, p);
  std::vector<NodeId> goals;
  for (int k = 0; k <= graph.depth(); ++k) {
    if (p[k] <= 0.0) continue;
    const auto& nodes = graph.eligible_on_level(k);
    uint64_t i = GeometricSkip(p[k], rng);
    while (i < nodes.size()) {
      goals.push_back(nodes[i]);
      const uint64_t skip = GeometricSkip(p[k], rng);
      if (skip == kNoGoal) break;
      i += skip + 1;
    }
  }
  return goals;
}

GoalMask SampleGoalMask(const SearchGraph& graph, const GoalProbabilities& p,
                        uint64_t seed) {
  std::mt19937_64 rng = MakeTrialRng(seed, 0);
  GoalMask mask(graph.node_count(), 0);
  for (NodeId v : SampleGoals(graph, p, rng)) mask[v] = 1;
  return mask;
}

uint64_t RunSearch(const SearchOrder& order, const GoalMask& mask) {
  if (mask.size() != order.rank.size()) {
    Fail(ErrorCode::kInvalidArgument, "goal mask does not match the graph");
  }
  for (size_t i = 0; i < order.nodes.size(); ++i) {
    if (mask[order.nodes[i]]) return i + 1;
  }
  return order.rank.size() + 1;
}

uint64_t RunSearch(const SearchOrder& order, const std::vector<NodeId>& goals) {
  uint64_t best = order.rank.size() + 1;
  for (NodeId v : goals) {
    if (v >= order.rank.size()) {
      Fail(ErrorCode::kInvalidArgument, "goal node outside the graph");
    }
    if (order.rank[v] == std::numeric_limits<uint32_t>::max()) continue;
    best = std::min<uint64_t>(best, uint64_t{order.rank[v]} + 1);
  }
  return best;
}

double ExactExpectedRuntime(const SearchOrder& order, const SearchGraph& graph,
                            const GoalProbabilities& p) {
  CheckCoverage(graph, p);
  double expected = 0.0;
  double none_yet = 1.0;
  for (size_t i = 0; i < order.nodes.size(); ++i) {
    const NodeId v = order.nodes[i];
    if (!graph.goal_eligible(v)) continue;
    const double pv = p[graph.level(v)];
    if (pv == 0.0) continue;
    expected += static_cast<double>(i + 1) * pv * none_yet;
    none_yet *= 1.0 - pv;
  }
  return expected +
         static_cast<double>(graph.node_count() + 1) * none_yet;
}

TrialStats MonteCarlo(const SearchGraph& graph, const GoalProbabilities& p,
                      Method method, const MonteCarloOptions& options) {
  CheckCoverage(graph, p);
  if (options.trials == 0) {
    Fail(ErrorCode::kInvalidArgument, "trials must be at least 1");
  }
  const SearchOrder order = ComputeSearchOrder(graph, method);
  const auto ranks = EligibleRanksByLevel(graph, order);
  const uint64_t no_goal_cost = graph.node_count() + 1;

  // Per-trial explored counts; kNoGoal marks a goalless instance.
  std::vector<uint64_t> results(options.trials);
  auto run_range = [&](uint64_t begin, uint64_t end) {
    for (uint64_t t = begin; t < end; ++t) {
      std::mt19937_64 rng = MakeTrialRng(options.seed, t);
      uint64_t best = kNoGoal;
      for (int k = 0; k <= graph.depth(); ++k) {
        if (p[k] <= 0.0 || ranks[k].empty()) continue;
        const uint64_t j = GeometricSkip(p[k], rng);
        if (j < ranks[k].size()) {
          best = std::min<uint64_t>(best, ranks[k][j] + 1);
        }
      }
      results[t] = best;
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<uint64_t>(threads, (options.trials + 255) / 256));
  if (threads <= 1) {
    run_range(0, options.trials);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (options.trials + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const uint64_t begin = std::min(options.trials, i * chunk);
      const uint64_t end = std::min(options.trials, begin + chunk);
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  TrialStats stats;
  stats.trials_total = options.trials;
  double sum = 0.0;
  for (uint64_t r : results) {
    if (r == kNoGoal) {
      if (options.condition_on_goal) {
        ++stats.discarded_no_goal;
        continue;
      }
      r = no_goal_cost;
    }
    ++stats.trials_kept;
    sum += static_cast<double>(r);
  }
  if (stats.trials_kept == 0) {
    Fail(ErrorCode::kNoGoal, "all trials goalless");
  }
  stats.mean = sum / static_cast<double>(stats.trials_kept);
  if (stats.trials_kept > 1) {
    double squares = 0.0;
    for (uint64_t r : results) {
      if (r == kNoGoal) {
        if (options.condition_on_goal) continue;
        r = no_goal_cost;
      }
      const double dev = static_cast<double>(r) - stats.mean;
      squares += dev * dev;
    }
    const double kept = static_cast<double>(stats.trials_kept);
    stats.std_error = std::sqrt(squares / (kept - 1.0) / kept);
  }
  return stats;
}

DescendantCounter ComputeDescendantCounter(const SearchGraph& graph) {
  const int depth = graph.depth();
  if (depth > kMaxCounterDepth) {
    Fail(ErrorCode::kCapacity, "graph too deep for a descendant counter");
  }
  const SearchOrder dfs = ComputeSearchOrder(graph, Method::kDfs);
  std::vector<NodeId> delta(depth + 1, std::numeric_limits<NodeId>::max());
  int found = 0;
  for (NodeId v : dfs.nodes) {
    const int k = graph.level(v);
    if (delta[k] == std::numeric_limits<NodeId>::max()) {
      delta[k] = v;
      ++found;
    }
  }
  if (found != depth + 1) {
    Fail(ErrorCode::kInvalidArgument, "some level is not reached by DFS");
  }

  DescendantCounter counter(depth);
  std::vector<uint32_t> seen(graph.node_count(), 0);
  std::vector<NodeId> stack;
  for (int n = 0; n <= depth; ++n) {
    const uint32_t stamp = static_cast<uint32_t>(n) + 1;
    std::vector<uint64_t> per_level(depth + 1, 0);
    stack.assign(1, delta[n]);
    seen[delta[n]] = stamp;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++per_level[graph.level(v)];
      for (NodeId c : graph.children(v)) {
        if (seen[c] == stamp) continue;
        seen[c] = stamp;
        stack.push_back(c);
      }
    }
    for (int d = 0; d <= depth; ++d) counter.set(n, d, per_level[d]);
  }
  return counter;
}

}  // namespace searchtime
