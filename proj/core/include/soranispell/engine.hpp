// Copyright 2026 the soranispell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "soranispell/affix.hpp"
#include "soranispell/dictionary.hpp"

namespace sorani {

/// One decomposition of a surface form: at most one prefix rule and one
/// suffix rule around a dictionary base (single stripping). Reapplying the
/// rules to the base reconstructs the surface exactly.
struct Analysis {
  std::string surface;
  const DicEntry* base = nullptr;
  const AffixRule* prefix_rule = nullptr;
  const AffixRule* suffix_rule = nullptr;
  std::optional<char32_t> pos_tag;
  std::optional<std::string> stem;
  std::vector<std::string> morphemes;  // prefix append, base surface, suffix append

  std::string prefix_text() const { return prefix_rule ? prefix_rule->append : std::string{}; }
  std::string suffix_text() const { return suffix_rule ? suffix_rule->append : std::string{}; }
};

struct Suggestion {
  std::string candidate;
  int distance = 0;  // edit distance from the query
  int source = 0;    // 0 = alphabet edit / REP rewrite, 1 = word split

  // (distance, source priority, lexicographic) ranking
  friend bool operator<(const Suggestion& a, const Suggestion& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.source != b.source) return a.source < b.source;
    return a.candidate < b.candidate;
  }
  friend bool operator==(const Suggestion& a, const Suggestion& b) {
    return a.distance == b.distance && a.source == b.source && a.candidate == b.candidate;
  }
};

struct SuggestOptions {
  int max_distance = 2;
  int max_results = 10;
  bool enable_splits = false;  // also offer "a b" when both halves check
};

class UnresolvedFlagError : public std::runtime_error {
 public:
  UnresolvedFlagError(std::string surface, char32_t flag);
  char32_t flag() const { return flag_; }

 private:
  char32_t flag_;
};

/// Affix-stripping checker and analyzer over an immutable dictionary and
/// rule set. All member functions are const and safe to call concurrently.
class Engine {
 public:
  Engine() = default;
  Engine(Dictionary dict, AffixRuleSet rules);

  const Dictionary& dictionary() const { return dict_; }
  const AffixRuleSet& rules() const { return rules_; }

  /// Flags used by entries that resolve to no class and are not inert.
  const std::vector<std::string>& load_diagnostics() const { return load_diagnostics_; }

  /// True iff the normalized word has at least one analysis.
  bool check(std::string_view word) const;

  /// All decompositions, in fixed order: bare entry, suffix-only,
  /// prefix-only, then prefix+suffix (cross-product classes only).
  std::vector<Analysis> analyze(std::string_view word) const;

  /// Stems of the verb-category analyses (present/past stems and
  /// infinitives), duplicate-free, in analysis order. Non-verb analyses
  /// contribute nothing.
  std::vector<std::string> stem(std::string_view word) const;

  /// Closure of the entry surface under its flags' rules, the bare surface
  /// included. Throws UnresolvedFlagError for flags that name no class and
  /// are not declared inert.
  std::set<std::string> generate(const DicEntry& entry) const;

  /// Ranked corrections for a misspelled word; empty when the word checks.
  std::vector<Suggestion> suggest(std::string_view word, const SuggestOptions& opts = {}) const;

 private:
  bool has_analysis(const std::string& normalized) const;
  void collect(const std::string& normalized, bool first_only, std::vector<Analysis>* out) const;

  Dictionary dict_;
  AffixRuleSet rules_;
  std::vector<std::string> load_diagnostics_;
};

}  // namespace sorani
