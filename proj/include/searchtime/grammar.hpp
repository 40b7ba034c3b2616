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

// Grammar search problems over the alphabet {S, a, b}.
//
// The binary grammar inserts an `a` or a `b` anywhere in a string of a/b
// letters, starting from the empty string. The random grammar starts from
// `S` and rewrites with S->e plus any subset of the adding rules (S->Sa,
// S->Sb, S->aS, S->bS) and moving rules (Sa->aS, Sb->bS, aS->Sa, bS->Sb);
// with every rule present it is the full grammar.
//
// Levels count a/b letters only. An S-less string therefore sits on the level
// of the S-string it was erased from, one above its shortest-path distance.
// Only S-less strings can be goals, and the searches check them as soon as
// they are discovered.

#ifndef SEARCHTIME_GRAMMAR_HPP_
#define SEARCHTIME_GRAMMAR_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "searchtime/colliding_branches.hpp"
#include "searchtime/search_graph.hpp"

namespace searchtime {

// Canonical rule order; child lists follow it.
enum class Rule : uint8_t {
  kErase = 0,  // S -> e
  kSToSa,
  kSToSb,
  kSToaS,
  kSTobS,
  kSaToaS,
  kSbTobS,
  kaSToSa,
  kbSToSb,
};

inline constexpr int kRuleCount = 9;

const char* RuleName(Rule rule);
std::optional<Rule> ParseRule(std::string_view text);

// A rule set. S -> e is always present.
class GrammarRules {
 public:
  GrammarRules() = default;
  static GrammarRules FromMask(uint16_t mask) {
    GrammarRules r;
    r.mask_ = static_cast<uint16_t>(mask | 1u);
    return r;
  }
  static GrammarRules All() { return FromMask(0x1FF); }

  GrammarRules With(Rule rule) const {
    return FromMask(mask_ | (1u << static_cast<int>(rule)));
  }
  bool Contains(Rule rule) const {
    return (mask_ >> static_cast<int>(rule)) & 1u;
  }
  int size() const { return __builtin_popcount(mask_); }
  uint16_t mask() const { return mask_; }
  std::string ToString() const;
  // Comma-separated rule names; S -> e is added if absent.
  static GrammarRules Parse(std::string_view text);

  friend bool operator==(GrammarRules, GrammarRules) = default;

 private:
  uint16_t mask_ = 1;
};

// A grammar string packed into 64 bits: letters as bits (a = 0, b = 1) in the
// low word, the letter count, and the position of S among the letters.
struct GrammarString {
  uint32_t letters = 0;
  int length = 0;
  int s_pos = -1;  // -1: no S; otherwise S sits before letter s_pos

  bool has_s() const { return s_pos >= 0; }
  char letter(int i) const { return ((letters >> i) & 1u) ? 'b' : 'a'; }
  uint64_t Pack() const;
  static GrammarString Unpack(uint64_t key);
  // "ε" for the empty string.
  std::string ToString() const;
  static GrammarString Parse(std::string_view text);

  friend bool operator==(const GrammarString&, const GrammarString&) = default;
};

// Number of level-d strings reachable from a^n in the binary grammar:
// sum_{i=0}^{d-n} C(d, i). Requires 0 <= n <= d <= 62.
uint64_t BinaryGrammarCount(int n, int d);
// A_{n,d} = C(d, d-n).
uint64_t BinaryGrammarExplorables(int n, int d);
// (d + 2) * BinaryGrammarCount(n, d): every binary string stands for a
// cluster of d + 2 full-grammar strings.
uint64_t FullGrammarCount(int n, int d);

DescendantCounter BinaryGrammarCounter(int depth);
DescendantCounter FullGrammarCounter(int depth);

inline constexpr int kMaxBinaryGrammarDepth = 20;
inline constexpr int kMaxFullGrammarDepth = 15;

// Strings over {a, b} of length <= D; children insert an `a` at each position
// left to right, then a `b`. Rule id 0 marks an `a` insertion, 1 a `b`.
SearchGraph BuildBinaryGrammar(int depth);
SearchGraph BuildFullGrammar(int depth);
// Closure of "S" under `rules`, truncated at `depth` letters. Rule ids are
// the Rule values.
SearchGraph BuildRandomGrammar(const GrammarRules& rules, int depth);

struct GraphFeatures {
  double mean_branching = 0.0;
  double std_branching = 0.0;  // population standard deviation
  int num_rules = 0;           // including S -> e
  int max_depth = 0;
};

GraphFeatures ComputeGraphFeatures(const SearchGraph& graph,
                                   const GrammarRules& rules);

}  // namespace searchtime

#endif  // SEARCHTIME_GRAMMAR_HPP_
