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

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sorani {

class Dictionary;

enum class AffixKind { prefix, suffix };

/// One atom of a rule condition: a literal codepoint, a bracketed
/// character class (optionally negated), or the any-character dot.
struct ConditionAtom {
  std::u32string chars;  // empty means "any"
  bool negated = false;

  bool matches(char32_t cp) const {
    if (chars.empty()) return true;
    bool found = chars.find(cp) != std::u32string::npos;
    return negated ? !found : found;
  }
  bool operator==(const ConditionAtom&) const = default;
};

/// Single-stripping affix rule. `strip` is removed from (and `append`
/// attached to) the start or end of the word depending on the class kind.
/// The condition constrains the dictionary word with the strip still in
/// place, suffix rules at its end and prefix rules at its start.
struct AffixRule {
  AffixKind kind = AffixKind::suffix;
  char32_t flag = 0;
  bool cross_product = false;
  std::string strip;      // empty serialized as "0"
  std::string append;     // empty serialized as "0"
  std::string condition;  // raw text, "." means unconditional
  std::vector<ConditionAtom> condition_atoms;
  std::vector<std::string> morph_fields;  // po:/is: annotations, verbatim

  bool operator==(const AffixRule& other) const {
    return kind == other.kind && flag == other.flag && cross_product == other.cross_product &&
           strip == other.strip && append == other.append && condition == other.condition &&
           morph_fields == other.morph_fields;
  }
};

struct AffixClass {
  AffixKind kind = AffixKind::suffix;
  char32_t flag = 0;
  bool cross_product = false;
  std::vector<AffixRule> rules;

  bool operator==(const AffixClass&) const = default;
};

/// Parsed .aff resource: directives plus the rule classes keyed by flag.
/// Directives: SET <enc>, TRY <alphabet>, REP <count> + pairs, and
/// INERT <flags> declaring flags that mark entries but carry no rules.
struct AffixRuleSet {
  std::string encoding = "UTF-8";
  std::string try_alphabet;
  std::vector<std::pair<std::string, std::string>> rep_pairs;
  std::u32string inert_flags;  // sorted, unique
  std::map<char32_t, AffixClass> classes;

  const AffixClass* find_class(char32_t flag) const {
    auto it = classes.find(flag);
    return it == classes.end() ? nullptr : &it->second;
  }
  bool flag_known(char32_t flag) const {
    return classes.contains(flag) || inert_flags.find(flag) != std::u32string::npos;
  }

  bool operator==(const AffixRuleSet&) const = default;
};

/// Parses an .aff stream. Throws ParseError (unknown directive, class
/// count mismatch, bad condition, mixed kinds under one flag, ...) with
/// 1-based line numbers.
AffixRuleSet parse_aff(std::istream& in);
AffixRuleSet parse_aff_text(std::string_view text);

/// Deterministic serialization: directives, then classes by flag, each
/// header carrying the actual rule count. parse_aff inverts it.
std::string serialize_aff(const AffixRuleSet& rules);

/// Parses a condition pattern into atoms. Exposed for the format tests.
std::vector<ConditionAtom> parse_condition(std::string_view condition);

/// Load-time cross check: every entry flag must name a class or be
/// declared inert. Returns one message per violation.
std::vector<std::string> unresolved_flag_report(const Dictionary& dict, const AffixRuleSet& rules);

}  // namespace sorani
