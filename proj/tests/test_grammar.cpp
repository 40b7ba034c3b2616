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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "searchtime/error.hpp"
#include "searchtime/grammar.hpp"
#include "searchtime/simulator.hpp"

namespace searchtime {
namespace {

std::string Canon(const std::string& label) {
  return label.empty() ? "ε" : label;
}

std::vector<std::string> OrderLabels(const SearchGraph& g, Method m) {
  std::vector<std::string> out;
  for (NodeId v : ComputeSearchOrder(g, m).nodes) out.push_back(g.Label(v));
  return out;
}

std::vector<std::string> OracleLabels(const oracle::Graph& g,
                                      const std::vector<int>& order) {
  std::vector<std::string> out;
  for (const auto& s : oracle::Labels(g, order)) out.push_back(Canon(s));
  return out;
}

// Same nodes, levels, eligibility and ordered child lists.
void ExpectSameGraph(const SearchGraph& got, const oracle::Graph& want) {
  ASSERT_EQ(got.node_count(), want.size());
  std::map<std::string, NodeId> ids;
  for (NodeId v = 0; v < got.node_count(); ++v) ids[got.Label(v)] = v;
  ASSERT_EQ(ids.size(), got.node_count());
  size_t edges = 0;
  for (size_t u = 0; u < want.size(); ++u) {
    const std::string label = Canon(want.labels[u]);
    ASSERT_TRUE(ids.count(label)) << label;
    const NodeId v = ids[label];
    EXPECT_EQ(got.level(v), want.levels[u]) << label;
    EXPECT_EQ(got.goal_eligible(v), want.eligible[u]) << label;
    const auto kids = got.children(v);
    ASSERT_EQ(kids.size(), want.kids[u].size()) << label;
    for (size_t i = 0; i < kids.size(); ++i) {
      EXPECT_EQ(got.Label(kids[i]), Canon(want.labels[want.kids[u][i]]));
    }
    edges += kids.size();
  }
  EXPECT_EQ(got.edge_count(), edges);
}

TEST(Counts, BinaryGrammar) {
  EXPECT_EQ(BinaryGrammarCount(0, 3), 8u);
  EXPECT_EQ(BinaryGrammarCount(1, 3), 7u);
  EXPECT_EQ(BinaryGrammarExplorables(1, 3), 3u);
  for (int d = 0; d <= 62; ++d) EXPECT_EQ(BinaryGrammarCount(d, d), 1u);
  EXPECT_EQ(BinaryGrammarCount(0, 62), uint64_t{1} << 62);
}

TEST(Counts, DifferenceIdentity) {
  for (int d = 1; d <= 30; ++d) {
    for (int n = 0; n < d; ++n) {
      EXPECT_EQ(BinaryGrammarCount(n, d) - BinaryGrammarCount(n + 1, d),
                oracle::Binomial(d, d - n));
      uint64_t sum = 0;
      for (int i = 0; i <= d - n; ++i) sum += oracle::Binomial(d, i);
      EXPECT_EQ(BinaryGrammarCount(n, d), sum);
    }
  }
}

TEST(Counts, FullGrammar) {
  EXPECT_EQ(FullGrammarCount(0, 2), 16u);
  EXPECT_EQ(FullGrammarCount(0, 0), 2u);
  for (int d = 0; d <= 20; ++d) EXPECT_EQ(FullGrammarCount(d, d), d + 2u);
  EXPECT_THROW(FullGrammarCount(0, 62), Error);
  EXPECT_THROW(BinaryGrammarCount(3, 2), Error);
}

TEST(Counts, ExplicitReachability) {
  const auto counts = oracle::DescendantCounts(oracle::BinaryGrammar(3), 3);
  EXPECT_EQ(counts[1][3], 7u);
  EXPECT_EQ(counts[0][3], 8u);
}

TEST(BinaryGrammar, Shape) {
  const SearchGraph g = BuildBinaryGrammar(3);
  EXPECT_EQ(g.node_count(), 15u);
  EXPECT_EQ(g.Sizes().sizes, (std::vector<uint64_t>{1, 2, 4, 8}));
  NodeId ab = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.Label(v) == "ab") ab = v;
  }
  std::vector<std::string> kids;
  for (NodeId c : g.children(ab)) kids.push_back(g.Label(c));
  EXPECT_EQ(kids, (std::vector<std::string>{"aab", "aba", "bab", "abb"}));
  EXPECT_THROW(BuildBinaryGrammar(kMaxBinaryGrammarDepth + 1), Error);
}

TEST(BinaryGrammar, MatchesStringConstruction) {
  for (int depth = 0; depth <= 7; ++depth) {
    const oracle::Graph want = oracle::BinaryGrammar(depth);
    const SearchGraph got = BuildBinaryGrammar(depth);
    ExpectSameGraph(got, want);
    EXPECT_EQ(OrderLabels(got, Method::kBfs),
              OracleLabels(want, oracle::BfsOrder(want)));
    EXPECT_EQ(OrderLabels(got, Method::kDfs),
              OracleLabels(want, oracle::DfsOrder(want)));
  }
}

TEST(BinaryGrammar, DfsReachesPowersOfAFirst) {
  const SearchGraph g = BuildBinaryGrammar(3);
  const auto labels = OrderLabels(g, Method::kDfs);
  EXPECT_EQ(std::vector<std::string>(labels.begin(), labels.begin() + 4),
            (std::vector<std::string>{"ε", "a", "aa", "aaa"}));
}

TEST(FullGrammar, LevelSizesAndClusters) {
  for (int depth = 0; depth <= 8; ++depth) {
    const SearchGraph g = BuildFullGrammar(depth);
    std::vector<uint64_t> eligible(depth + 1, 0);
    std::map<std::string, int> clusters;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.goal_eligible(v)) ++eligible[g.level(v)];
      std::string letters;
      for (char c : g.Label(v)) {
        if (c == 'a' || c == 'b') letters += c;
      }
      ++clusters[letters];
    }
    for (int d = 0; d <= depth; ++d) {
      EXPECT_EQ(g.Sizes()[d], (d + 2u) << d);
      EXPECT_EQ(eligible[d], uint64_t{1} << d);
    }
    for (const auto& [letters, size] : clusters) {
      EXPECT_EQ(size, static_cast<int>(letters.size()) + 2) << letters;
    }
  }
}

TEST(FullGrammar, RootAndEmptyString) {
  const SearchGraph g = BuildFullGrammar(2);
  EXPECT_EQ(g.Label(g.root()), "S");
  EXPECT_EQ(g.level(g.root()), 0);
  const auto kids = g.children(g.root());
  ASSERT_FALSE(kids.empty());
  EXPECT_EQ(g.Label(kids[0]), "ε");
  EXPECT_EQ(g.level(kids[0]), 0);
  EXPECT_TRUE(g.goal_eligible(kids[0]));
  EXPECT_FALSE(g.goal_eligible(g.root()));
}

TEST(FullGrammar, MatchesStringConstruction) {
  for (int depth = 0; depth <= 6; ++depth) {
    const oracle::Graph want = oracle::Grammar(0x1FF, depth);
    const SearchGraph got = BuildFullGrammar(depth);
    ExpectSameGraph(got, want);
    EXPECT_EQ(OrderLabels(got, Method::kBfs),
              OracleLabels(want, oracle::BfsOrder(want)));
    EXPECT_EQ(OrderLabels(got, Method::kDfs),
              OracleLabels(want, oracle::DfsOrder(want)));
  }
}

TEST(FullGrammar, DfsFindsSaNFirst) {
  const SearchGraph g = BuildFullGrammar(5);
  const auto order = ComputeSearchOrder(g, Method::kDfs);
  std::vector<std::string> first(6);
  for (NodeId v : order.nodes) {
    if (first[g.level(v)].empty()) first[g.level(v)] = g.Label(v);
  }
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(first[n], "S" + std::string(n, 'a'));
}

TEST(RandomGrammar, EveryRuleSubset) {
  for (uint32_t mask = 1; mask < 0x200; mask += 2) {
    const oracle::Graph want = oracle::Grammar(mask, 4);
    const SearchGraph got =
        BuildRandomGrammar(GrammarRules::FromMask(static_cast<uint16_t>(mask)),
                           4);
    ExpectSameGraph(got, want);
    EXPECT_EQ(OrderLabels(got, Method::kBfs),
              OracleLabels(want, oracle::BfsOrder(want)));
    EXPECT_EQ(OrderLabels(got, Method::kDfs),
              OracleLabels(want, oracle::DfsOrder(want)));
  }
}

TEST(RandomGrammar, SmallRuleSets) {
  const SearchGraph erase_only = BuildRandomGrammar(GrammarRules(), 6);
  EXPECT_EQ(erase_only.node_count(), 2u);

  const GrammarRules right = GrammarRules::Parse("S->e, S->Sa, S->Sb");
  const SearchGraph g = BuildRandomGrammar(right, 4);
  std::vector<uint64_t> with_s(5, 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!g.goal_eligible(v)) ++with_s[g.level(v)];
    if (g.goal_eligible(v)) {
      EXPECT_EQ(g.out_degree(v), 0u);
    }
  }
  EXPECT_EQ(with_s, (std::vector<uint64_t>{1, 2, 4, 8, 16}));

  const SearchGraph all = BuildRandomGrammar(GrammarRules::All(), 5);
  const SearchGraph full = BuildFullGrammar(5);
  EXPECT_EQ(all.node_count(), full.node_count());
  EXPECT_EQ(all.edge_count(), full.edge_count());
}

TEST(GrammarRules, ParseAndPrint) {
  const GrammarRules r = GrammarRules::Parse("S->aS,Sb->bS");
  EXPECT_TRUE(r.Contains(Rule::kErase));
  EXPECT_TRUE(r.Contains(Rule::kSToaS));
  EXPECT_TRUE(r.Contains(Rule::kSbTobS));
  EXPECT_EQ(r.size(), 3);
  EXPECT_EQ(r.ToString(), "S->e,S->aS,Sb->bS");
  EXPECT_EQ(GrammarRules::Parse(r.ToString()), r);
  EXPECT_EQ(ParseRule("S->ε"), Rule::kErase);
  EXPECT_THROW(GrammarRules::Parse("S->cc"), Error);
}

TEST(GrammarString, PackRoundTrip) {
  for (const char* text : {"ε", "S", "a", "Sab", "abS", "baSbb", "abba"}) {
    const GrammarString s = GrammarString::Parse(text);
    EXPECT_EQ(s.ToString(), text);
    EXPECT_EQ(GrammarString::Unpack(s.Pack()), s);
  }
}

TEST(Features, SmallGraphs) {
  const auto erase = ComputeGraphFeatures(
      BuildRandomGrammar(GrammarRules(), 11), GrammarRules());
  EXPECT_EQ(erase.mean_branching, 0.5);
  EXPECT_EQ(erase.std_branching, 0.5);
  EXPECT_EQ(erase.num_rules, 1);
  EXPECT_EQ(erase.max_depth, 11);

  const int depth = 6;
  const auto bg = ComputeGraphFeatures(BuildBinaryGrammar(depth),
                                       GrammarRules::All());
  double edges = 0.0;
  for (int d = 0; d < depth; ++d) edges += std::ldexp(d + 2.0, d);
  EXPECT_NEAR(bg.mean_branching, edges / ((2 << depth) - 1), 1e-12);
  EXPECT_EQ(bg.num_rules, 9);
}

TEST(Features, DegreeOfStartSymbol) {
  const SearchGraph g = BuildFullGrammar(2);
  const oracle::Graph want = oracle::Grammar(0x1FF, 2);
  EXPECT_EQ(g.out_degree(g.root()), want.kids[0].size());
  EXPECT_EQ(g.out_degree(g.root()), 5u);
}

}  // namespace
}  // namespace searchtime
