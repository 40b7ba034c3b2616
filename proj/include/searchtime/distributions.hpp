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

// Probability primitives shared by the runtime estimators.
//
// Powers (1-p)^n are always evaluated as exp(n * log1p(-p)); level sizes reach
// 2^40 and the naive product underflows or loses all precision long before.

#ifndef SEARCHTIME_DISTRIBUTIONS_HPP_
#define SEARCHTIME_DISTRIBUTIONS_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace searchtime {

// Per-level iid goal probabilities p_0..p_D of a search problem of depth D.
class GoalProbabilities {
 public:
  // Validates entries in [0,1] and requires at least one positive entry.
  static GoalProbabilities Create(std::vector<double> probs);
  // Same range checks, but an all-zero vector is accepted.
  static GoalProbabilities CreateAllowingZero(std::vector<double> probs);
  // Zero everywhere except `level`, which gets `p`.
  static GoalProbabilities SingleLevel(int depth, int level, double p);

  int depth() const { return static_cast<int>(probs_.size()) - 1; }
  std::span<const double> probs() const { return probs_; }
  double operator[](int level) const { return probs_[level]; }
  double q(int level) const { return 1.0 - probs_[level]; }
  bool any_positive() const;

  friend bool operator==(const GoalProbabilities&,
                         const GoalProbabilities&) = default;

 private:
  explicit GoalProbabilities(std::vector<double> probs)
      : probs_(std::move(probs)) {}

  std::vector<double> probs_;
};

// Node count per level. Counts are exact integers; b^k for the supported
// model sizes stays below 2^62.
struct LevelSizes {
  std::vector<uint64_t> sizes;

  int depth() const { return static_cast<int>(sizes.size()) - 1; }
  uint64_t operator[](int level) const { return sizes[level]; }
  uint64_t total() const;
  // Number of nodes strictly above `level`.
  uint64_t above(int level) const;
};

// (1-p)^n computed as exp(n log1p(-p)).
double SurvivalPower(double p, double n);

// Expectation of a geometric variable truncated to {1..m}: the expected
// position of the first success among m iid trials, given one exists.
// Requires 0 < p <= 1 and m >= 1; throws ErrorCode::kDomain otherwise.
double TruncatedGeometricMean(double p, uint64_t m);

// Rate -ln(1-p) of the exponential variable whose CDF agrees with Geo(p) on
// the integers. Requires 0 <= p < 1.
double ExponentialRate(double p);

// Probability that a level with n_k iid candidates holds at least one goal.
double LevelGoalProbability(double p, uint64_t n_k);

// P(F_0)..P(F_D), P(F_{D+1}): the probability that level k holds the first
// goal, with the last entry the probability that no goal exists at all.
std::vector<double> FirstGoalLevelProbabilities(const GoalProbabilities& p,
                                                const LevelSizes& sizes);

}  // namespace searchtime

#endif  // SEARCHTIME_DISTRIBUTIONS_HPP_
