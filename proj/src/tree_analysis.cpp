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

#include "searchtime/tree_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "searchtime/error.hpp"

namespace searchtime {
namespace {

constexpr uint64_t kMaxTreeNodes = uint64_t{1} << 62;

void CheckGoalLevel(const TreeModel& model, int goal_level, double goal_prob) {
  model.Validate();
  if (goal_level < 0 || goal_level > model.depth) {
    Fail(ErrorCode::kInvalidArgument,
         "goal level " + std::to_string(goal_level) + " outside [0, " +
             std::to_string(model.depth) + "]");
  }
  if (!(goal_prob >= 0.0 && goal_prob <= 1.0)) {
    Fail(ErrorCode::kDomain, "goal probability outside [0, 1]");
  }
  if (goal_prob == 0.0) {
    Fail(ErrorCode::kNoGoal, "goal probability is zero: no goal level");
  }
}

uint64_t IntPow(uint64_t base, int exponent) {
  uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

void TreeModel::Validate() const {
  if (branching < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "branching factor must be at least 2, got " +
             std::to_string(branching));
  }
  if (depth < 0) {
    Fail(ErrorCode::kInvalidArgument, "depth must be non-negative");
  }
  // Accumulate level sizes with an overflow guard instead of trusting
  // D * log2(b).
  uint64_t level = 1;
  uint64_t total = 1;
  for (int k = 1; k <= depth; ++k) {
    if (level > kMaxTreeNodes / static_cast<uint64_t>(branching)) {
      Fail(ErrorCode::kCapacity, "tree with branching " +
                                     std::to_string(branching) + " and depth " +
                                     std::to_string(depth) + " is too large");
    }
    level *= static_cast<uint64_t>(branching);
    total += level;
    if (total > kMaxTreeNodes) {
      Fail(ErrorCode::kCapacity, "tree node count exceeds 2^62");
    }
  }
}

uint64_t TreeModel::LevelSize(int level) const {
  return IntPow(static_cast<uint64_t>(branching), level);
}

uint64_t TreeModel::NodesAbove(int level) const {
  uint64_t total = 0;
  uint64_t size = 1;
  for (int k = 0; k < level; ++k) {
    total += size;
    size *= static_cast<uint64_t>(branching);
  }
  return total;
}

uint64_t TreeModel::NodeCount() const { return NodesAbove(depth + 1); }

LevelSizes TreeModel::Sizes() const {
  LevelSizes sizes;
  sizes.sizes.reserve(static_cast<size_t>(depth) + 1);
  for (int k = 0; k <= depth; ++k) sizes.sizes.push_back(LevelSize(k));
  return sizes;
}

double TreeModel::SiblingBlockSize(int level) const {
  const double b = branching;
  return 2.0 * (std::pow(b, depth - level) - 1.0) / (b - 1.0) + 2.0;
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kBfs:
      return "BFS";
    case Verdict::kDfs:
      return "DFS";
    case Verdict::kBand:
      return "BAND";
  }
  return "?";
}

RuntimeEstimate BfsSingleLevel(const TreeModel& model, int goal_level,
                               double goal_prob, Conditioning conditioning) {
  CheckGoalLevel(model, goal_level, goal_prob);
  const uint64_t width = model.LevelSize(goal_level);
  const double given_goal =
      static_cast<double>(model.NodesAbove(goal_level)) +
      TruncatedGeometricMean(goal_prob, width);
  const double no_goal = SurvivalPower(goal_prob, static_cast<double>(width));
  const double value =
      MixNoGoal((1.0 - no_goal) * given_goal, no_goal,
                static_cast<double>(model.NodeCount()) + 1.0, conditioning);
  return RuntimeEstimate::Point(value, conditioning);
}

RuntimeEstimate DfsSingleLevel(const TreeModel& model, int goal_level,
                               double goal_prob, Conditioning conditioning) {
  CheckGoalLevel(model, goal_level, goal_prob);
  const uint64_t width = model.LevelSize(goal_level);
  const double given_goal =
      (TruncatedGeometricMean(goal_prob, width) - 1.0) *
          model.SiblingBlockSize(goal_level) +
      2.0;
  const double no_goal = SurvivalPower(goal_prob, static_cast<double>(width));
  const double value =
      MixNoGoal((1.0 - no_goal) * given_goal, no_goal,
                static_cast<double>(model.NodeCount()) + 1.0, conditioning);
  return RuntimeEstimate::Point(value, conditioning);
}

double BoundaryShift(const TreeModel& model, int goal_level,
                     double goal_prob) {
  CheckGoalLevel(model, goal_level, goal_prob);
  const double excess =
      TruncatedGeometricMean(goal_prob, model.LevelSize(goal_level)) - 1.0;
  if (excess <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(excess) / std::log(static_cast<double>(model.branching)) /
         2.0;
}

double ApproximateBoundaryShift(const TreeModel& model, double goal_prob) {
  if (!(goal_prob > 0.0 && goal_prob < 1.0)) {
    Fail(ErrorCode::kDomain, "approximate shift needs 0 < p < 1");
  }
  return std::log((1.0 - goal_prob) / goal_prob) /
         std::log(static_cast<double>(model.branching)) / 2.0;
}

Verdict SingleLevelDecision(const TreeModel& model, int goal_level,
                            double goal_prob) {
  const double shift = BoundaryShift(model, goal_level, goal_prob);
  // tc == 1 (p_g == 1 or g == 0): the boundary degenerates; BFS by convention.
  if (std::isinf(shift)) return Verdict::kBfs;
  const double boundary = model.depth / 2.0 + shift;
  if (goal_level < boundary) return Verdict::kBfs;
  if (goal_level > boundary + 0.5) return Verdict::kDfs;
  return Verdict::kBand;
}

void GaussianGoalParams::Validate(int depth) const {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    Fail(ErrorCode::kDomain, "goal spread sigma2 must be positive and finite");
  }
  if (mu < 0 || mu > depth) {
    Fail(ErrorCode::kInvalidArgument,
         "goal peak mu = " + std::to_string(mu) + " outside [0, " +
             std::to_string(depth) + "]");
  }
}

GoalProbabilities GaussianGoalVector(int depth,
                                     const GaussianGoalParams& params) {
  if (depth < 0) Fail(ErrorCode::kInvalidArgument, "negative depth");
  params.Validate(depth);
  const double scale = 1.0 / (20.0 * std::sqrt(params.sigma2));
  std::vector<double> probs(static_cast<size_t>(depth) + 1);
  for (int i = 0; i <= depth; ++i) {
    const double offset = i - params.mu;
    probs[i] =
        std::min(scale * std::exp(-offset * offset / params.sigma2), 0.5);
  }
  return GoalProbabilities::CreateAllowingZero(std::move(probs));
}

RuntimeEstimate DfsMultiLevel(const TreeModel& model,
                              const GoalProbabilities& p) {
  model.Validate();
  if (p.depth() != model.depth) {
    Fail(ErrorCode::kInvalidArgument, "goal vector depth does not match tree");
  }
  double rate = 0.0;
  for (int k = 0; k <= model.depth; ++k) {
    if (p[k] == 0.0) continue;
    rate += ExponentialRate(p[k]) / model.SiblingBlockSize(k);
  }
  if (rate <= 0.0) Fail(ErrorCode::kNoGoal, "every goal probability is zero");
  return RuntimeEstimate::Point(1.0 / rate, Conditioning::kNone);
}

RuntimeEstimate BfsMultiLevel(const TreeModel& model,
                              const GoalProbabilities& p,
                              Conditioning conditioning) {
  model.Validate();
  if (p.depth() != model.depth) {
    Fail(ErrorCode::kInvalidArgument, "goal vector depth does not match tree");
  }
  if (!p.any_positive()) {
    Fail(ErrorCode::kNoGoal, "every goal probability is zero");
  }
  double goal_sum = 0.0;
  double none_yet = 1.0;
  uint64_t above = 0;
  for (int k = 0; k <= model.depth; ++k) {
    const uint64_t width = model.LevelSize(k);
    if (p[k] > 0.0) {
      const double level_prob = LevelGoalProbability(p[k], width);
      goal_sum += none_yet * level_prob *
                  (static_cast<double>(above) +
                   TruncatedGeometricMean(p[k], width));
      none_yet *= 1.0 - level_prob;
    }
    above += width;
  }
  const double value =
      MixNoGoal(goal_sum, none_yet, static_cast<double>(above) + 1.0,
                conditioning);
  return RuntimeEstimate::Point(value, conditioning);
}

Verdict MultiLevelDecision(const TreeModel& model,
                           const GoalProbabilities& p) {
  const double bfs = BfsMultiLevel(model, p, Conditioning::kNone).mean;
  const double dfs = DfsMultiLevel(model, p).mean;
  return bfs <= dfs ? Verdict::kBfs : Verdict::kDfs;
}

}  // namespace searchtime
