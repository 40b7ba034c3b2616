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

#include "searchtime/colliding_branches.hpp"

#include <cmath>
#include <string>

#include "searchtime/error.hpp"

namespace searchtime {
namespace {

uint64_t CheckedAdd(uint64_t a, uint64_t b) {
  uint64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) {
    Fail(ErrorCode::kCapacity, "subgraph size overflows 64 bits");
  }
  return sum;
}

void CheckDepths(const DescendantCounter& counter, const GoalProbabilities& p) {
  if (counter.depth() != p.depth()) {
    Fail(ErrorCode::kInvalidArgument,
         "descendant counter depth " + std::to_string(counter.depth()) +
             " does not match goal vector depth " + std::to_string(p.depth()));
  }
}

}  // namespace

DescendantCounter::DescendantCounter(int depth) : depth_(depth) {
  if (depth < 0 || depth > kMaxCounterDepth) {
    Fail(ErrorCode::kCapacity, "descendant counter depth " +
                                   std::to_string(depth) + " outside [0, " +
                                   std::to_string(kMaxCounterDepth) + "]");
  }
  counts_.assign(static_cast<size_t>(depth + 1) * (depth + 1), 0);
}

uint64_t DescendantCounter::Explorables(int n, int d) const {
  const uint64_t below = n < depth_ ? (*this)(n + 1, d) : 0;
  return (*this)(n, d) - below;
}

LevelSizes DescendantCounter::RootLevelSizes() const {
  LevelSizes sizes;
  sizes.sizes.reserve(static_cast<size_t>(depth_) + 1);
  for (int d = 0; d <= depth_; ++d) sizes.sizes.push_back((*this)(0, d));
  return sizes;
}

void DescendantCounter::Validate() const {
  if (counts_.size() != static_cast<size_t>(depth_ + 1) * (depth_ + 1)) {
    Fail(ErrorCode::kInvalidArgument, "descendant counter is not square");
  }
  for (int n = 0; n <= depth_; ++n) {
    if ((*this)(n, n) < 1) {
      Fail(ErrorCode::kInvalidArgument,
           "L(" + std::to_string(n) + "," + std::to_string(n) +
               ") must count delta_n itself");
    }
    for (int d = 0; d < n; ++d) {
      if ((*this)(n, d) != 0) {
        Fail(ErrorCode::kInvalidArgument,
             "L(" + std::to_string(n) + "," + std::to_string(d) +
                 ") must be zero above delta_n");
      }
    }
    if (n == depth_) continue;
    for (int d = n + 1; d <= depth_; ++d) {
      if ((*this)(n, d) < (*this)(n + 1, d)) {
        Fail(ErrorCode::kInvalidArgument,
             "L(" + std::to_string(n) + "," + std::to_string(d) +
                 ") is smaller than L(" + std::to_string(n + 1) + "," +
                 std::to_string(d) + ")");
      }
    }
  }
}

SubgraphSizes ComputeSubgraphSizes(const DescendantCounter& counter) {
  counter.Validate();
  const int depth = counter.depth();
  SubgraphSizes sizes;
  sizes.s.assign(static_cast<size_t>(depth) + 3, 0);
  sizes.t.assign(static_cast<size_t>(depth) + 1, 0);
  sizes.u.assign(static_cast<size_t>(depth) + 2, 0);

  for (int n = 0; n <= depth; ++n) {
    uint64_t reach = 0;
    uint64_t explorable = 0;
    for (int d = 0; d <= depth; ++d) {
      reach = CheckedAdd(reach, counter(n, d));
      if (d >= n) {
        explorable = CheckedAdd(explorable, counter.Explorables(n, d));
      }
    }
    sizes.s[n + 1] = reach;
    sizes.t[n] = explorable;
  }
  sizes.s[0] = CheckedAdd(sizes.s[1], 1);  // |S_{-1}| = |S_0| + 1
  // sizes.s[depth + 2] stays 0: S_{D+1} is empty.

  for (int k = 1; k <= depth + 1; ++k) {
    sizes.u[k] = CheckedAdd(sizes.u[k - 1], counter(0, k - 1));
  }
  return sizes;
}

ExplorableGoalProbs ComputeExplorableGoalProbs(const DescendantCounter& counter,
                                               const GoalProbabilities& p) {
  CheckDepths(counter, p);
  const int depth = counter.depth();
  ExplorableGoalProbs result;
  result.tau.assign(static_cast<size_t>(depth) + 1, 0.0);
  result.phi.assign(static_cast<size_t>(depth) + 2, 0.0);

  for (int n = 0; n <= depth; ++n) {
    double log_miss = 0.0;
    bool certain = false;
    for (int k = 0; k <= depth; ++k) {
      const uint64_t probes = counter.Explorables(n, k);
      if (p[k] == 0.0 || probes == 0) continue;
      if (p[k] >= 1.0) {
        certain = true;
        break;
      }
      log_miss += static_cast<double>(probes) * std::log1p(-p[k]);
    }
    result.tau[n] = certain ? 1.0 : -std::expm1(log_miss);
  }

  // DFS explores T_D first, then T_{D-1}, ..., T_0.
  double none_deeper = 1.0;
  double total = 0.0;
  for (int n = depth; n >= 0; --n) {
    result.phi[n + 1] = result.tau[n] * none_deeper;
    none_deeper *= 1.0 - result.tau[n];
    total += result.phi[n + 1];
  }
  result.phi[0] = 1.0 - total;
  if (result.phi[0] < 0.0) result.phi[0] = 0.0;
  return result;
}

RuntimeEstimate DfsCollidingBranches(const DescendantCounter& counter,
                                     const GoalProbabilities& p,
                                     Conditioning conditioning) {
  CheckDepths(counter, p);
  if (!p.any_positive()) {
    Fail(ErrorCode::kNoGoal, "every goal probability is zero");
  }
  const SubgraphSizes sizes = ComputeSubgraphSizes(counter);
  const ExplorableGoalProbs probs = ComputeExplorableGoalProbs(counter, p);
  const int depth = counter.depth();

  double lower = 0.0;
  double upper = 0.0;
  double goal_mass = 0.0;
  for (int n = 0; n <= depth; ++n) {
    const double phi = probs.Phi(n);
    lower += static_cast<double>(sizes.S(n + 1)) * phi;
    upper += static_cast<double>(sizes.S(n)) * phi;
    goal_mass += phi;
  }

  switch (conditioning) {
    case Conditioning::kNone:
      lower += static_cast<double>(sizes.S(0)) * probs.Phi(-1);
      upper += static_cast<double>(sizes.S(-1)) * probs.Phi(-1);
      break;
    case Conditioning::kGivenGoal:
      if (goal_mass <= 0.0) {
        Fail(ErrorCode::kNoGoal, "no goal is reachable in the counted graph");
      }
      lower /= goal_mass;
      upper /= goal_mass;
      break;
    case Conditioning::kDropNoGoalTerm:
      break;
  }
  return {lower, (lower + upper) / 2.0, upper, conditioning};
}

RuntimeEstimate BfsCollidingSingleLevel(const DescendantCounter& counter,
                                        int goal_level, double goal_prob,
                                        Conditioning conditioning) {
  const int depth = counter.depth();
  if (goal_level < 0 || goal_level > depth) {
    Fail(ErrorCode::kInvalidArgument,
         "goal level " + std::to_string(goal_level) + " outside [0, " +
             std::to_string(depth) + "]");
  }
  if (!(goal_prob >= 0.0 && goal_prob <= 1.0)) {
    Fail(ErrorCode::kDomain, "goal probability outside [0, 1]");
  }
  if (goal_prob == 0.0) {
    Fail(ErrorCode::kNoGoal, "goal probability is zero: no goal level");
  }
  const uint64_t width = counter(0, goal_level);
  if (width == 0) {
    Fail(ErrorCode::kInvalidArgument,
         "goal level " + std::to_string(goal_level) + " has no nodes");
  }
  const LevelSizes sizes = counter.RootLevelSizes();
  const double given_goal = static_cast<double>(sizes.above(goal_level)) +
                            TruncatedGeometricMean(goal_prob, width);
  const double no_goal = SurvivalPower(goal_prob, static_cast<double>(width));
  const double value =
      MixNoGoal((1.0 - no_goal) * given_goal, no_goal,
                static_cast<double>(sizes.total()) + 1.0, conditioning);
  return RuntimeEstimate::Point(value, conditioning);
}

RuntimeEstimate BfsCollidingBranches(const DescendantCounter& counter,
                                     const GoalProbabilities& p,
                                     Conditioning conditioning) {
  CheckDepths(counter, p);
  if (!p.any_positive()) {
    Fail(ErrorCode::kNoGoal, "every goal probability is zero");
  }
  const LevelSizes sizes = counter.RootLevelSizes();
  double goal_sum = 0.0;
  double none_yet = 1.0;
  uint64_t above = 0;
  for (int k = 0; k <= counter.depth(); ++k) {
    const uint64_t width = sizes[k];
    if (p[k] > 0.0 && width > 0) {
      const double level_prob = LevelGoalProbability(p[k], width);
      goal_sum += none_yet * level_prob *
                  (static_cast<double>(above) +
                   TruncatedGeometricMean(p[k], width));
      none_yet *= 1.0 - level_prob;
    }
    above += width;
  }
  const double value = MixNoGoal(
      goal_sum, none_yet, static_cast<double>(above) + 1.0, conditioning);
  return RuntimeEstimate::Point(value, conditioning);
}

}  // namespace searchtime
