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

#ifndef SEARCHTIME_SIMULATOR_HPP_
#define SEARCHTIME_SIMULATOR_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "searchtime/colliding_branches.hpp"
#include "searchtime/distributions.hpp"
#include "searchtime/estimate.hpp"
#include "searchtime/search_graph.hpp"

namespace searchtime {

// Complete b-ary tree of depth D in heap order. Requires b >= 2 and
// b^D <= 2^40 (and the node count must fit a NodeId).
SearchGraph BuildCompleteTree(int branching, int depth);

// One flag per node; only goal-eligible nodes are ever set.
using GoalMask = std::vector<uint8_t>;

// Nodes in goal-check order for one method.
struct SearchOrder {
  Method method = Method::kBfs;
  std::vector<NodeId> nodes;  // nodes[i] is checked (i+1)-th
  std::vector<uint32_t> rank;  // inverse: rank[nodes[i]] == i

  size_t size() const { return nodes.size(); }
};

// BFS: FIFO queue, dedup at enqueue, goal check at dequeue, except that
// nodes flagged checked_on_discovery are checked when first discovered.
// DFS: preorder with a discovered set, goal check on entry.
SearchOrder ComputeSearchOrder(const SearchGraph& graph, Method method);

// Per-trial generator seeded from (seed, stream).
std::mt19937_64 MakeTrialRng(uint64_t seed, uint64_t stream);

// Goal-eligible nodes drawn iid with the probability of their level, visited
// by geometric skipping. Returned in level order, id order within a level.
std::vector<NodeId> SampleGoals(const SearchGraph& graph,
                                const GoalProbabilities& p,
                                std::mt19937_64& rng);
GoalMask SampleGoalMask(const SearchGraph& graph, const GoalProbabilities& p,
                        uint64_t seed);

// 1-based position of the first goal in `order`, or N + 1 without a goal.
uint64_t RunSearch(const SearchOrder& order, const GoalMask& mask);
uint64_t RunSearch(const SearchOrder& order, const std::vector<NodeId>& goals);

// Exact E[RunSearch] under iid seeding, O(N).
double ExactExpectedRuntime(const SearchOrder& order, const SearchGraph& graph,
                            const GoalProbabilities& p);

struct MonteCarloOptions {
  uint64_t trials = 1000;
  uint64_t seed = 1;
  bool condition_on_goal = false;
  int threads = 0;  // 0: hardware concurrency
};

struct TrialStats {
  uint64_t trials_total = 0;
  uint64_t trials_kept = 0;
  uint64_t discarded_no_goal = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials_kept)
};

// Runs `method` on independently seeded goal masks. The result depends only
// on the options, not on the thread count.
TrialStats MonteCarlo(const SearchGraph& graph, const GoalProbabilities& p,
                      Method method, const MonteCarloOptions& options);

// delta_n is the first level-n node in DFS order; L(n, d) counts the level-d
// nodes reachable from it.
DescendantCounter ComputeDescendantCounter(const SearchGraph& graph);

}  // namespace searchtime

#endif  // SEARCHTIME_SIMULATOR_HPP_
