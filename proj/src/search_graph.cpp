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

#include "searchtime/search_graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "searchtime/error.hpp"
#include "searchtime/grammar.hpp"

namespace searchtime {

NodeId SearchGraph::Builder::AddNode(int level, bool goal_eligible,
                                     bool checked_on_discovery, uint64_t key) {
  if (levels_.size() >= std::numeric_limits<NodeId>::max() - 1) {
    Fail(ErrorCode::kCapacity, "search graph exceeds 2^32 nodes");
  }
  levels_.push_back(level);
  eligible_.push_back(goal_eligible ? 1 : 0);
  eager_.push_back(checked_on_discovery ? 1 : 0);
  keys_.push_back(key);
  return static_cast<NodeId>(levels_.size() - 1);
}

void SearchGraph::Builder::AddEdge(NodeId parent, NodeId child, uint8_t rule) {
  // offsets_ has one entry per parent whose list is open or closed.
  if (parent + 1 < offsets_.size()) {
    Fail(ErrorCode::kInvalidArgument, "edges must be added in parent order");
  }
  while (offsets_.size() < static_cast<size_t>(parent) + 1) {
    offsets_.push_back(static_cast<uint32_t>(children_.size()));
  }
  children_.push_back(child);
  rules_.push_back(rule);
}

SearchGraph SearchGraph::Builder::Build() && {
  const size_t n = levels_.size();
  while (offsets_.size() < n + 1) {
    offsets_.push_back(static_cast<uint32_t>(children_.size()));
  }
  SearchGraph graph;
  graph.label_kind_ = label_kind_;
  graph.branching_ = branching_;
  graph.levels_ = std::move(levels_);
  graph.eligible_ = std::move(eligible_);
  graph.eager_ = std::move(eager_);
  graph.keys_ = std::move(keys_);
  graph.offsets_ = std::move(offsets_);
  graph.children_ = std::move(children_);
  graph.rules_ = std::move(rules_);
  graph.Index();
  graph.depth_limit_ = std::max(depth_limit_, graph.depth_);
  return graph;
}

void SearchGraph::Index() {
  depth_ = levels_.empty()
               ? 0
               : *std::max_element(levels_.begin(), levels_.end());
  by_level_.assign(static_cast<size_t>(depth_) + 1, {});
  eligible_by_level_.assign(static_cast<size_t>(depth_) + 1, {});
  for (NodeId v = 0; v < levels_.size(); ++v) {
    by_level_[levels_[v]].push_back(v);
    if (eligible_[v]) eligible_by_level_[levels_[v]].push_back(v);
  }
}

LevelSizes SearchGraph::Sizes() const {
  LevelSizes sizes;
  sizes.sizes.reserve(by_level_.size());
  for (const auto& level : by_level_) sizes.sizes.push_back(level.size());
  return sizes;
}

std::string SearchGraph::Label(NodeId v) const {
  switch (label_kind_) {
    case LabelKind::kGrammarString:
      return GrammarString::Unpack(keys_[v]).ToString();
    case LabelKind::kTreePath: {
      // Heap numbering: the parent of i is (i - 1) / b.
      std::vector<uint64_t> steps;
      for (uint64_t i = keys_[v]; i > 0; i = (i - 1) / branching_) {
        steps.push_back((i - 1) % branching_);
      }
      std::string out = "r";
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        out += '.';
        out += std::to_string(*it);
      }
      return out;
    }
  }
  return {};
}

SearchGraph SearchGraph::WithAllEligible() const {
  SearchGraph copy = *this;
  std::fill(copy.eligible_.begin(), copy.eligible_.end(), uint8_t{1});
  copy.Index();
  return copy;
}

void SearchGraph::ExportText(std::ostream& out) const {
  for (NodeId v = 0; v < node_count(); ++v) {
    out << v << '\t' << Label(v) << '\t' << levels_[v] << '\t'
        << static_cast<int>(eligible_[v]) << '\n';
  }
  for (NodeId v = 0; v < node_count(); ++v) {
    const auto kids = children(v);
    const auto rules = child_rules(v);
    for (size_t i = 0; i < kids.size(); ++i) {
      out << v << '\t' << kids[i] << '\t' << static_cast<int>(rules[i])
          << '\n';
    }
  }
}

}  // namespace searchtime
