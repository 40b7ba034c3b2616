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

#include "searchtime/grammar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "searchtime/error.hpp"

namespace searchtime {
namespace {

constexpr std::array<const char*, kRuleCount> kRuleNames = {
    "S->e",   "S->Sa",  "S->Sb",  "S->aS", "S->bS",
    "Sa->aS", "Sb->bS", "aS->Sa", "bS->Sb",
};

constexpr int32_t kUnseen = -1;

__extension__ using Uint128 = unsigned __int128;

uint32_t InsertLetter(uint32_t letters, int pos, uint32_t bit) {
  const uint32_t low_mask = (uint32_t{1} << pos) - 1;
  return (letters & low_mask) | (bit << pos) | ((letters & ~low_mask) << 1);
}

// Maps every string with at most `depth` letters (and, if `with_s`, at most
// one S) to a slot of a flat table. Strings of length L take 2^L slots, times
// L + 2 placements of S (none, or before one of the L + 1 gaps) when S is
// allowed.
class DenseStringIndex {
 public:
  DenseStringIndex(int depth, bool with_s) : with_s_(with_s) {
    offsets_.reserve(static_cast<size_t>(depth) + 2);
    size_t total = 0;
    for (int len = 0; len <= depth; ++len) {
      offsets_.push_back(total);
      total += (size_t{1} << len) * Slots(len);
    }
    ids_.assign(total, kUnseen);
  }

  int32_t& operator[](const GrammarString& s) {
    const size_t slot =
        offsets_[s.length] + static_cast<size_t>(s.letters) * Slots(s.length) +
        (with_s_ ? static_cast<size_t>(s.s_pos + 1) : 0);
    return ids_[slot];
  }

 private:
  size_t Slots(int len) const { return with_s_ ? len + 2 : 1; }

  bool with_s_;
  std::vector<size_t> offsets_;
  std::vector<int32_t> ids_;
};

uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Uint128 value = 1;
  for (int i = 0; i < k; ++i) {
    value = value * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
  }
  return static_cast<uint64_t>(value);
}

void CheckCountArgs(int n, int d) {
  if (n < 0 || d < n || d > kMaxCounterDepth) {
    Fail(ErrorCode::kInvalidArgument,
         "descendant count needs 0 <= n <= d <= 62, got n=" +
             std::to_string(n) + " d=" + std::to_string(d));
  }
}

// Applies `rule` to `s`; nullopt when it does not apply.
std::optional<GrammarString> Apply(Rule rule, const GrammarString& s) {
  GrammarString t = s;
  switch (rule) {
    case Rule::kErase:
      t.s_pos = -1;
      return t;
    case Rule::kSToSa:
    case Rule::kSToSb:
      t.letters = InsertLetter(s.letters, s.s_pos, rule == Rule::kSToSb);
      t.length = s.length + 1;
      return t;
    case Rule::kSToaS:
    case Rule::kSTobS:
      t.letters = InsertLetter(s.letters, s.s_pos, rule == Rule::kSTobS);
      t.length = s.length + 1;
      t.s_pos = s.s_pos + 1;
      return t;
    case Rule::kSaToaS:
    case Rule::kSbTobS: {
      const char want = rule == Rule::kSaToaS ? 'a' : 'b';
      if (s.s_pos >= s.length || s.letter(s.s_pos) != want) return std::nullopt;
      t.s_pos = s.s_pos + 1;
      return t;
    }
    case Rule::kaSToSa:
    case Rule::kbSToSb: {
      const char want = rule == Rule::kaSToSa ? 'a' : 'b';
      if (s.s_pos == 0 || s.letter(s.s_pos - 1) != want) return std::nullopt;
      t.s_pos = s.s_pos - 1;
      return t;
    }
  }
  return std::nullopt;
}

bool IsAddingRule(Rule rule) {
  return rule >= Rule::kSToSa && rule <= Rule::kSTobS;
}

}  // namespace

const char* RuleName(Rule rule) { return kRuleNames[static_cast<int>(rule)]; }

std::optional<Rule> ParseRule(std::string_view text) {
  if (text == "S->ε" || text == "S->") return Rule::kErase;
  for (int i = 0; i < kRuleCount; ++i) {
    if (text == kRuleNames[i]) return static_cast<Rule>(i);
  }
  return std::nullopt;
}

std::string GrammarRules::ToString() const {
  std::string out;
  for (int i = 0; i < kRuleCount; ++i) {
    if (!Contains(static_cast<Rule>(i))) continue;
    if (!out.empty()) out += ',';
    out += kRuleNames[i];
  }
  return out;
}

GrammarRules GrammarRules::Parse(std::string_view text) {
  GrammarRules rules;
  while (!text.empty()) {
    const size_t comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      const auto rule = ParseRule(token);
      if (!rule) {
        Fail(ErrorCode::kInvalidArgument,
             "unknown grammar rule '" + std::string(token) + "'");
      }
      rules = rules.With(*rule);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return rules;
}

uint64_t GrammarString::Pack() const {
  return uint64_t{letters} | (uint64_t(length) << 32) |
         (uint64_t(s_pos + 1) << 40);
}

GrammarString GrammarString::Unpack(uint64_t key) {
  GrammarString s;
  s.letters = static_cast<uint32_t>(key & 0xFFFFFFFFu);
  s.length = static_cast<int>((key >> 32) & 0xFF);
  s.s_pos = static_cast<int>((key >> 40) & 0xFF) - 1;
  return s;
}

std::string GrammarString::ToString() const {
  std::string out;
  for (int i = 0; i < length; ++i) {
    if (s_pos == i) out += 'S';
    out += letter(i);
  }
  if (s_pos == length) out += 'S';
  return out.empty() ? "ε" : out;
}

GrammarString GrammarString::Parse(std::string_view text) {
  GrammarString s;
  if (text == "ε" || text.empty()) return s;
  for (char c : text) {
    if (c == 'S') {
      if (s.has_s()) {
        Fail(ErrorCode::kInvalidArgument, "grammar string has two S");
      }
      s.s_pos = s.length;
    } else if (c == 'a' || c == 'b') {
      if (s.length >= 31) {
        Fail(ErrorCode::kCapacity, "grammar string too long");
      }
      if (c == 'b') s.letters |= uint32_t{1} << s.length;
      ++s.length;
    } else {
      Fail(ErrorCode::kInvalidArgument,
           std::string("unexpected character '") + c + "' in grammar string");
    }
  }
  return s;
}

uint64_t BinaryGrammarCount(int n, int d) {
  CheckCountArgs(n, d);
  uint64_t total = 0;
  for (int i = 0; i <= d - n; ++i) total += Binomial(d, i);
  return total;
}

uint64_t BinaryGrammarExplorables(int n, int d) {
  CheckCountArgs(n, d);
  return Binomial(d, d - n);
}

uint64_t FullGrammarCount(int n, int d) {
  const uint64_t binary = BinaryGrammarCount(n, d);
  uint64_t full = 0;
  if (__builtin_mul_overflow(binary, static_cast<uint64_t>(d + 2), &full)) {
    Fail(ErrorCode::kCapacity, "full grammar count overflows 64 bits");
  }
  return full;
}

DescendantCounter BinaryGrammarCounter(int depth) {
  DescendantCounter counter(depth);
  for (int n = 0; n <= depth; ++n) {
    for (int d = n; d <= depth; ++d) {
      counter.set(n, d, BinaryGrammarCount(n, d));
    }
  }
  return counter;
}

DescendantCounter FullGrammarCounter(int depth) {
  DescendantCounter counter(depth);
  for (int n = 0; n <= depth; ++n) {
    for (int d = n; d <= depth; ++d) {
      counter.set(n, d, FullGrammarCount(n, d));
    }
  }
  return counter;
}

SearchGraph BuildBinaryGrammar(int depth) {
  if (depth < 0 || depth > kMaxBinaryGrammarDepth) {
    Fail(ErrorCode::kCapacity,
         "binary grammar depth must be in [0, " +
             std::to_string(kMaxBinaryGrammarDepth) + "], got " +
             std::to_string(depth));
  }
  DenseStringIndex index(depth, /*with_s=*/false);
  SearchGraph::Builder builder(LabelKind::kGrammarString);
  builder.set_depth_limit(depth);
  std::vector<GrammarString> strings;

  const GrammarString empty;
  index[empty] = 0;
  strings.push_back(empty);
  builder.AddNode(0, true, false, empty.Pack());

  std::vector<NodeId> seen_children;
  for (NodeId u = 0; u < strings.size(); ++u) {
    const GrammarString s = strings[u];
    if (s.length >= depth) continue;
    seen_children.clear();
    for (uint32_t bit = 0; bit <= 1; ++bit) {
      for (int pos = 0; pos <= s.length; ++pos) {
        GrammarString t;
        t.letters = InsertLetter(s.letters, pos, bit);
        t.length = s.length + 1;
        int32_t& id = index[t];
        if (id == kUnseen) {
          id = static_cast<int32_t>(strings.size());
          strings.push_back(t);
          builder.AddNode(t.length, true, false, t.Pack());
        }
        const NodeId child = static_cast<NodeId>(id);
        if (std::find(seen_children.begin(), seen_children.end(), child) !=
            seen_children.end()) {
          continue;
        }
        seen_children.push_back(child);
        builder.AddEdge(u, child, static_cast<uint8_t>(bit));
      }
    }
  }
  return std::move(builder).Build();
}

SearchGraph BuildRandomGrammar(const GrammarRules& rules, int depth) {
  if (depth < 0 || depth > kMaxFullGrammarDepth) {
    Fail(ErrorCode::kCapacity,
         "grammar depth must be in [0, " +
             std::to_string(kMaxFullGrammarDepth) + "], got " +
             std::to_string(depth));
  }
  DenseStringIndex index(depth, /*with_s=*/true);
  SearchGraph::Builder builder(LabelKind::kGrammarString);
  builder.set_depth_limit(depth);
  std::vector<GrammarString> strings;

  GrammarString start;
  start.s_pos = 0;
  index[start] = 0;
  strings.push_back(start);
  builder.AddNode(0, false, false, start.Pack());

  std::vector<NodeId> seen_children;
  for (NodeId u = 0; u < strings.size(); ++u) {
    const GrammarString s = strings[u];
    if (!s.has_s()) continue;
    seen_children.clear();
    for (int r = 0; r < kRuleCount; ++r) {
      const Rule rule = static_cast<Rule>(r);
      if (!rules.Contains(rule)) continue;
      if (IsAddingRule(rule) && s.length >= depth) continue;
      const std::optional<GrammarString> t = Apply(rule, s);
      if (!t) continue;
      int32_t& id = index[*t];
      if (id == kUnseen) {
        id = static_cast<int32_t>(strings.size());
        strings.push_back(*t);
        const bool terminal = !t->has_s();
        builder.AddNode(t->length, terminal, terminal, t->Pack());
      }
      const NodeId child = static_cast<NodeId>(id);
      if (std::find(seen_children.begin(), seen_children.end(), child) !=
          seen_children.end()) {
        continue;
      }
      seen_children.push_back(child);
      builder.AddEdge(u, child, static_cast<uint8_t>(r));
    }
  }
  return std::move(builder).Build();
}

SearchGraph BuildFullGrammar(int depth) {
  return BuildRandomGrammar(GrammarRules::All(), depth);
}

GraphFeatures ComputeGraphFeatures(const SearchGraph& graph,
                                   const GrammarRules& rules) {
  GraphFeatures features;
  features.num_rules = rules.size();
  features.max_depth = graph.depth_limit();
  const size_t n = graph.node_count();
  if (n == 0) return features;
  double sum = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    sum += static_cast<double>(graph.out_degree(v));
  }
  const double mean = sum / static_cast<double>(n);
  double squares = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const double diff = static_cast<double>(graph.out_degree(v)) - mean;
    squares += diff * diff;
  }
  features.mean_branching = mean;
  features.std_branching = std::sqrt(squares / static_cast<double>(n));
  return features;
}

}  // namespace searchtime
