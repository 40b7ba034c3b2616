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

#ifndef SEARCHTIME_SEARCH_GRAPH_HPP_
#define SEARCHTIME_SEARCH_GRAPH_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "searchtime/distributions.hpp"

namespace searchtime {

using NodeId = uint32_t;

// How node keys turn into printable labels.
enum class LabelKind {
  kTreePath,       // key is the heap index; label is the child-index path
  kGrammarString,  // key is a packed grammar string (see grammar.hpp)
};

// Immutable leveled directed graph with ordered, duplicate-free child lists.
// Node 0 is the root. Node ids are assigned in discovery order by the
// builders, so every parent precedes its first-discovered children.
class SearchGraph {
 public:
  class Builder {
   public:
    explicit Builder(LabelKind label_kind, int branching = 0)
        : label_kind_(label_kind), branching_(branching) {
      offsets_.push_back(0);
    }

    NodeId AddNode(int level, bool goal_eligible, bool checked_on_discovery,
                   uint64_t key);
    // The depth bound the graph was built with; defaults to the deepest level.
    void set_depth_limit(int depth) { depth_limit_ = depth; }
    // Parents must be passed in non-decreasing order.
    void AddEdge(NodeId parent, NodeId child, uint8_t rule);
    size_t node_count() const { return levels_.size(); }

    SearchGraph Build() &&;

   private:
    friend class SearchGraph;
    LabelKind label_kind_;
    int branching_;
    int depth_limit_ = -1;
    std::vector<int> levels_;
    std::vector<uint8_t> eligible_;
    std::vector<uint8_t> eager_;
    std::vector<uint64_t> keys_;
    std::vector<uint32_t> offsets_;
    std::vector<NodeId> children_;
    std::vector<uint8_t> rules_;
  };

  SearchGraph() = default;

  NodeId root() const { return 0; }
  size_t node_count() const { return levels_.size(); }
  size_t edge_count() const { return children_.size(); }
  // Deepest populated level.
  int depth() const { return depth_; }
  // Depth bound requested at construction (>= depth()).
  int depth_limit() const { return depth_limit_; }

  int level(NodeId v) const { return levels_[v]; }
  bool goal_eligible(NodeId v) const { return eligible_[v] != 0; }
  // Nodes the search goal-checks as soon as they are discovered instead of
  // when they are dequeued (the S-less grammar strings, which never have
  // children).
  bool checked_on_discovery(NodeId v) const { return eager_[v] != 0; }

  std::span<const NodeId> children(NodeId v) const {
    return {children_.data() + offsets_[v], children_.data() + offsets_[v + 1]};
  }
  std::span<const uint8_t> child_rules(NodeId v) const {
    return {rules_.data() + offsets_[v], rules_.data() + offsets_[v + 1]};
  }
  size_t out_degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Every node per level, and the goal-eligible subset, in id order.
  const std::vector<NodeId>& nodes_on_level(int level) const {
    return by_level_[level];
  }
  const std::vector<NodeId>& eligible_on_level(int level) const {
    return eligible_by_level_[level];
  }
  LevelSizes Sizes() const;

  std::string Label(NodeId v) const;

  // Copy with every node goal-eligible; nodes checked on discovery stay so,
  // which keeps BFS level-monotone on the grammar graphs. Formulas that count
  // all nodes of a level as goal candidates are checked against this view.
  SearchGraph WithAllEligible() const;

  // Line-oriented text: one `index\tlabel\tlevel\tgoal_eligible` line per node,
  // then one `parent\tchild\trule_id` line per edge.
  void ExportText(std::ostream& out) const;

 private:
  void Index();

  LabelKind label_kind_ = LabelKind::kTreePath;
  int branching_ = 0;
  int depth_ = 0;
  int depth_limit_ = 0;
  std::vector<int> levels_;
  std::vector<uint8_t> eligible_;
  std::vector<uint8_t> eager_;
  std::vector<uint64_t> keys_;
  std::vector<uint32_t> offsets_;
  std::vector<NodeId> children_;
  std::vector<uint8_t> rules_;
  std::vector<std::vector<NodeId>> by_level_;
  std::vector<std::vector<NodeId>> eligible_by_level_;
};

}  // namespace searchtime

#endif  // SEARCHTIME_SEARCH_GRAPH_HPP_
