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

#ifndef SEARCHTIME_ESTIMATE_HPP_
#define SEARCHTIME_ESTIMATE_HPP_

namespace searchtime {

// How an expected runtime treats the event that the problem has no goal.
//
//   kNone            E[X], where a goalless problem costs N+1 explored nodes.
//   kGivenGoal       E[X | a goal exists].
//   kDropNoGoalTerm  E[X; a goal exists] = E[X | goal] * P(goal). This is the
//                    goal-level sum with the no-goal term removed but not
//                    renormalised; the Gaussian-tree BFS reference values are
//                    computed this way.
enum class Conditioning { kNone, kGivenGoal, kDropNoGoalTerm };

enum class Method { kBfs, kDfs };

// A runtime expectation, either a point value (lower == mean == upper) or a
// bracket with a representative mean.
struct RuntimeEstimate {
  double lower = 0.0;
  double mean = 0.0;
  double upper = 0.0;
  Conditioning conditioning = Conditioning::kNone;

  static RuntimeEstimate Point(double value, Conditioning c) {
    return {value, value, value, c};
  }

  bool conditioned_on_goal() const {
    return conditioning == Conditioning::kGivenGoal;
  }
  bool is_point() const { return lower == mean && mean == upper; }
};

// Mixes the goal-present part of an expectation with the goalless outcome.
//   goal_sum     sum over first-goal events F of P(F) * E[X | F]
//   no_goal_prob P(no goal exists)
//   no_goal_cost explored nodes when no goal exists (N + 1)
double MixNoGoal(double goal_sum, double no_goal_prob, double no_goal_cost,
                 Conditioning conditioning);

}  // namespace searchtime

#endif  // SEARCHTIME_ESTIMATE_HPP_
