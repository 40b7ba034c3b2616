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

#include "searchtime/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "searchtime/error.hpp"
#include "searchtime/estimate.hpp"

namespace searchtime {
namespace {

void CheckProbabilities(const std::vector<double>& probs) {
  if (probs.empty()) {
    Fail(ErrorCode::kInvalidArgument, "goal probability vector is empty");
  }
  for (size_t k = 0; k < probs.size(); ++k) {
    if (!(probs[k] >= 0.0 && probs[k] <= 1.0)) {
      Fail(ErrorCode::kDomain, "goal probability p_" + std::to_string(k) +
                                   " = " + std::to_string(probs[k]) +
                                   " is outside [0, 1]");
    }
  }
}

}  // namespace

GoalProbabilities GoalProbabilities::Create(std::vector<double> probs) {
  CheckProbabilities(probs);
  GoalProbabilities result(std::move(probs));
  if (!result.any_positive()) {
    Fail(ErrorCode::kNoGoal, "every goal probability is zero");
  }
  return result;
}

GoalProbabilities GoalProbabilities::CreateAllowingZero(
    std::vector<double> probs) {
  CheckProbabilities(probs);
  return GoalProbabilities(std::move(probs));
}

GoalProbabilities GoalProbabilities::SingleLevel(int depth, int level,
                                                 double p) {
  if (depth < 0 || level < 0 || level > depth) {
    Fail(ErrorCode::kInvalidArgument,
         "goal level " + std::to_string(level) + " outside [0, " +
             std::to_string(depth) + "]");
  }
  std::vector<double> probs(static_cast<size_t>(depth) + 1, 0.0);
  probs[level] = p;
  return Create(std::move(probs));
}

bool GoalProbabilities::any_positive() const {
  return std::any_of(probs_.begin(), probs_.end(),
                     [](double p) { return p > 0.0; });
}

uint64_t LevelSizes::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), uint64_t{0});
}

uint64_t LevelSizes::above(int level) const {
  return std::accumulate(sizes.begin(), sizes.begin() + level, uint64_t{0});
}

double SurvivalPower(double p, double n) {
  if (n == 0.0 || p == 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  return std::exp(n * std::log1p(-p));
}

double TruncatedGeometricMean(double p, uint64_t m) {
  if (!(p > 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kDomain,
         "truncated geometric mean needs 0 < p <= 1, got " + std::to_string(p));
  }
  if (m == 0) {
    Fail(ErrorCode::kDomain, "truncated geometric mean needs m >= 1");
  }
  if (p == 1.0 || m == 1) return 1.0;

  const double md = static_cast<double>(m);
  const double rate = -std::log1p(-p);
  const double x = md * rate;
  if (x < 1e-2) {
    // Series of 1/(1-e^-r) - m/(e^{mr}-1) in r; the closed form cancels to
    // nothing here. The next term is O((m r)^5 / m) relative to (m+1)/2.
    const double m2 = md * md;
    return (md + 1.0) / 2.0 - (m2 - 1.0) * rate / 12.0 +
           (m2 * m2 - 1.0) * rate * rate * rate / 720.0;
  }
  return 1.0 / -std::expm1(-rate) - md * std::exp(-x) / -std::expm1(-x);
}

double ExponentialRate(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    Fail(ErrorCode::kDomain,
         "exponential rate needs 0 <= p < 1, got " + std::to_string(p));
  }
  return -std::log1p(-p);
}

double LevelGoalProbability(double p, uint64_t n_k) {
  if (!(p >= 0.0 && p <= 1.0)) {
    Fail(ErrorCode::kDomain, "goal probability outside [0, 1]");
  }
  if (n_k == 0 || p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n_k) * std::log1p(-p));
}

std::vector<double> FirstGoalLevelProbabilities(const GoalProbabilities& p,
                                                const LevelSizes& sizes) {
  if (p.depth() != sizes.depth()) {
    Fail(ErrorCode::kInvalidArgument,
         "goal vector depth " + std::to_string(p.depth()) +
             " does not match level sizes depth " +
             std::to_string(sizes.depth()));
  }
  const int depth = p.depth();
  std::vector<double> first(static_cast<size_t>(depth) + 2, 0.0);
  double none_so_far = 1.0;
  double total = 0.0;
  for (int k = 0; k <= depth; ++k) {
    const double level_prob = LevelGoalProbability(p[k], sizes[k]);
    first[k] = none_so_far * level_prob;
    none_so_far *= 1.0 - level_prob;
    total += first[k];
  }
  first[depth + 1] = std::clamp(1.0 - total, 0.0, 1.0);
  return first;
}

double MixNoGoal(double goal_sum, double no_goal_prob, double no_goal_cost,
                 Conditioning conditioning) {
  const double goal_prob = 1.0 - no_goal_prob;
  switch (conditioning) {
    case Conditioning::kNone:
      return goal_sum + no_goal_prob * no_goal_cost;
    case Conditioning::kGivenGoal:
      if (goal_prob <= 0.0) {
        Fail(ErrorCode::kNoGoal,
             "cannot condition on a goal that exists with probability 0");
      }
      return goal_sum / goal_prob;
    case Conditioning::kDropNoGoalTerm:
      return goal_sum;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace searchtime
