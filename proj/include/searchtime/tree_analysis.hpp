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

// Expected BFS/DFS runtimes on complete b-ary trees with iid goals.
//
// Runtime counts goal checks up to and including the first goal; a problem
// without goals costs N + 1 where N is the total node count. The BFS formulas
// are exact. The DFS formulas are approximations: the single-level one counts
// whole sibling subtrees left of the first goal, the multi-level one replaces
// every level's first-goal position by an exponential variable and takes the
// minimum over levels.

#ifndef SEARCHTIME_TREE_ANALYSIS_HPP_
#define SEARCHTIME_TREE_ANALYSIS_HPP_

#include <cstdint>

#include "searchtime/distributions.hpp"
#include "searchtime/estimate.hpp"

namespace searchtime {

struct TreeModel {
  int depth = 0;
  int branching = 2;

  // Throws unless branching >= 2, depth >= 0 and the node count fits in
  // 62 bits.
  void Validate() const;

  uint64_t LevelSize(int level) const;
  // Nodes on levels 0..level-1.
  uint64_t NodesAbove(int level) const;
  uint64_t NodeCount() const;
  LevelSizes Sizes() const;
  // DFS cost of moving past one goal-level candidate that is not a goal:
  // 2 (b^{D-level} - 1) / (b - 1) + 2, which is 2^{D-level+1} for b = 2.
  double SiblingBlockSize(int level) const;
};

enum class Verdict { kBfs, kDfs, kBand };

const char* VerdictName(Verdict v);

// Expected BFS runtime with goals only on level g.
RuntimeEstimate BfsSingleLevel(const TreeModel& model, int goal_level,
                               double goal_prob, Conditioning conditioning);

// Approximate expected DFS runtime with goals only on level g.
RuntimeEstimate DfsSingleLevel(const TreeModel& model, int goal_level,
                               double goal_prob, Conditioning conditioning);

// gamma = log_b(tc(p_g, b^g) - 1) / 2, the shift of the BFS/DFS boundary
// away from the middle level. Returns -infinity when tc == 1.
double BoundaryShift(const TreeModel& model, int goal_level, double goal_prob);
// The log_b((1-p)/p)/2 approximation of BoundaryShift, for display.
double ApproximateBoundaryShift(const TreeModel& model, double goal_prob);

// BFS if g < D/2 + gamma, DFS if g > D/2 + gamma + 1/2, kBand in between.
Verdict SingleLevelDecision(const TreeModel& model, int goal_level,
                            double goal_prob);

struct GaussianGoalParams {
  int mu = 0;          // goal peak level
  double sigma2 = 1.0;  // goal spread

  void Validate(int depth) const;
};

// p_i = min(exp(-(i-mu)^2 / sigma2) / (20 sqrt(sigma2)), 1/2).
GoalProbabilities GaussianGoalVector(int depth,
                                     const GaussianGoalParams& params);

// 1 / sum_k lambda_k / block_k, with lambda_k = -ln(1-p_k) and block_k the
// sibling block size of level k. Not conditioned on goal existence.
RuntimeEstimate DfsMultiLevel(const TreeModel& model,
                              const GoalProbabilities& p);

// Exact expected BFS runtime, summing over the level that holds the first
// goal.
RuntimeEstimate BfsMultiLevel(const TreeModel& model,
                              const GoalProbabilities& p,
                              Conditioning conditioning);

// BFS iff the unconditioned BFS expectation is at most the DFS estimate.
Verdict MultiLevelDecision(const TreeModel& model, const GoalProbabilities& p);

}  // namespace searchtime

#endif  // SEARCHTIME_TREE_ANALYSIS_HPP_
