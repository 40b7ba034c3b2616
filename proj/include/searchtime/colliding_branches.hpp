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

// Runtime estimates for graph search (BFS/DFS with a discovered set) on
// leveled graphs where branches collide.
//
// The graph enters only through its descendant counter. Let delta_n be the
// first level-n node DFS reaches; L(n, d) counts the level-d nodes reachable
// from delta_n. DFS exhausts everything below delta_{n+1} before it explores
// the rest of delta_n's descendants (T_n), which brackets the DFS runtime
// between |S_{n+1}| and |S_n| whenever the first goal lies in T_n.

#ifndef SEARCHTIME_COLLIDING_BRANCHES_HPP_
#define SEARCHTIME_COLLIDING_BRANCHES_HPP_

#include <cstdint>
#include <vector>

#include "searchtime/distributions.hpp"
#include "searchtime/estimate.hpp"

namespace searchtime {

inline constexpr int kMaxCounterDepth = 62;

// Dense (D+1) x (D+1) matrix L(n, d).
class DescendantCounter {
 public:
  DescendantCounter() = default;
  // Zero-filled counter; entries are set with set().
  explicit DescendantCounter(int depth);

  int depth() const { return depth_; }
  uint64_t operator()(int n, int d) const { return counts_[Index(n, d)]; }
  void set(int n, int d, uint64_t value) { counts_[Index(n, d)] = value; }

  // A_{n,d} = L(n,d) - L(n+1,d), with L(D+1, .) = 0.
  uint64_t Explorables(int n, int d) const;

  // Level sizes seen from the root: L(0, 0..D).
  LevelSizes RootLevelSizes() const;

  // Throws ErrorCode::kInvalidArgument unless L(n,n) >= 1, L(n,d) = 0 for
  // d < n, and L(n,d) >= L(n+1,d).
  void Validate() const;

  friend bool operator==(const DescendantCounter&,
                         const DescendantCounter&) = default;

 private:
  size_t Index(int n, int d) const {
    return static_cast<size_t>(n) * static_cast<size_t>(depth_ + 1) +
           static_cast<size_t>(d);
  }

  int depth_ = 0;
  std::vector<uint64_t> counts_;
};

// |S_n| for n in [-1, D+1], |T_n| for n in [0, D], U_k for k in [0, D+1].
struct SubgraphSizes {
  std::vector<uint64_t> s;  // s[n + 1] = |S_n|
  std::vector<uint64_t> t;
  std::vector<uint64_t> u;

  uint64_t S(int n) const { return s[static_cast<size_t>(n + 1)]; }
};

SubgraphSizes ComputeSubgraphSizes(const DescendantCounter& counter);

// tau_n: T_n holds a goal. phi_n: T_n holds the first goal DFS finds;
// phi_{-1} is the probability that there is no goal.
struct ExplorableGoalProbs {
  std::vector<double> tau;  // n in [0, D]
  std::vector<double> phi;  // phi[n + 1] for n in [-1, D]

  double Phi(int n) const { return phi[static_cast<size_t>(n + 1)]; }
};

ExplorableGoalProbs ComputeExplorableGoalProbs(const DescendantCounter& counter,
                                               const GoalProbabilities& p);

// Bracket [sum |S_{n+1}| phi_n, sum |S_n| phi_n] over n in [-1, D] with the
// midpoint as mean. Conditioning drops the n = -1 term; kGivenGoal also
// divides by 1 - phi_{-1}.
//
// The bracket ignores the handful of nodes DFS checks on its way down to
// T_n, and assumes DFS does not find a goal before reaching delta_D.
RuntimeEstimate DfsCollidingBranches(const DescendantCounter& counter,
                                     const GoalProbabilities& p,
                                     Conditioning conditioning);

// Exact BFS runtime with a single goal level: U_g + tc(p_g, L(0, g)).
RuntimeEstimate BfsCollidingSingleLevel(const DescendantCounter& counter,
                                        int goal_level, double goal_prob,
                                        Conditioning conditioning);

// Exact BFS runtime for level-by-level BFS with level sizes L(0, k).
RuntimeEstimate BfsCollidingBranches(const DescendantCounter& counter,
                                     const GoalProbabilities& p,
                                     Conditioning conditioning);

}  // namespace searchtime

#endif  // SEARCHTIME_COLLIDING_BRANCHES_HPP_
