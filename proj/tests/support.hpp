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

// Shared fixtures and independent oracles for the test and acceptance
// suites. The oracles reimplement contracts from scratch (full-matrix DP,
// naive splitting, naive rule application) so they stay independent of the
// library code paths they check.

#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "soranispell/affix.hpp"
#include "soranispell/baseline.hpp"
#include "soranispell/dictionary.hpp"
#include "soranispell/engine.hpp"
#include "soranispell/evaluation.hpp"
#include "soranispell/parse_error.hpp"
#include "soranispell/script.hpp"
#include "soranispell/tags.hpp"
#include "soranispell/unicode.hpp"

#ifndef SORANISPELL_DATA_DIR
#define SORANISPELL_DATA_DIR "data"
#endif

namespace testsupport {

inline std::string data_path(const std::string& relative) {
  return std::string(SORANISPELL_DATA_DIR) + "/" + relative;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline const sorani::Dictionary& fixture_dictionary() {
  static const sorani::Dictionary dict = [] {
    std::ifstream in(data_path("sorani.dic"));
    return sorani::parse_dic(in);
  }();
  return dict;
}

inline const sorani::AffixRuleSet& fixture_rules() {
  static const sorani::AffixRuleSet rules = [] {
    std::ifstream in(data_path("sorani.aff"));
    return sorani::parse_aff(in);
  }();
  return rules;
}

inline const sorani::Engine& fixture_engine() {
  static const sorani::Engine engine{fixture_dictionary(), fixture_rules()};
  return engine;
}

inline std::vector<sorani::MorphTestCase> fixture_morph_gold() {
  std::ifstream in(data_path("testsets/morph_gold.tsv"));
  return sorani::parse_morph_testset(in);
}

inline std::vector<sorani::SpellTestCase> fixture_spell_gold() {
  std::ifstream in(data_path("testsets/spell_gold.tsv"));
  return sorani::parse_spell_testset(in);
}

// ---------------------------------------------------------------------------
// oracles

/// Full-matrix Wagner-Fischer distance over normalized codepoints;
/// independent of the two-row production implementation.
inline int oracle_levenshtein(std::string_view a, std::string_view b) {
  std::u32string x = sorani::decode_utf8(sorani::normalize(a));
  std::u32string y = sorani::decode_utf8(sorani::normalize(b));
  std::vector<std::vector<int>> d(x.size() + 1, std::vector<int>(y.size() + 1, 0));
  for (std::size_t i = 0; i <= x.size(); ++i) d[i][0] = static_cast<int>(i);
  for (std::size_t j = 0; j <= y.size(); ++j) d[0][j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      int sub = d[i - 1][j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      int del = d[i - 1][j] + 1;
      int ins = d[i][j - 1] + 1;
      d[i][j] = std::min({sub, del, ins});
    }
  }
  return d[x.size()][y.size()];
}

/// Reference splitter over the separator class table.
inline std::vector<std::string> oracle_tokenize(std::string_view text) {
  std::u32string cps = sorani::decode_utf8(sorani::normalize(text));
  std::vector<std::string> tokens;
  std::u32string current;
  for (char32_t cp : cps) {
    if (sorani::is_separator(cp)) {
      if (!current.empty()) tokens.push_back(sorani::encode_utf8(current));
      current.clear();
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) tokens.push_back(sorani::encode_utf8(current));
  return tokens;
}

/// Union of generate() over all entries: the set of every accepted form.
inline const std::set<std::string>& fixture_closure() {
  static const std::set<std::string> closure = [] {
    std::set<std::string> out;
    const sorani::Engine& engine = fixture_engine();
    for (const sorani::DicEntry& e : engine.dictionary().entries()) {
      std::set<std::string> forms = engine.generate(e);
      out.insert(forms.begin(), forms.end());
    }
    return out;
  }();
  return closure;
}

// ---------------------------------------------------------------------------
// generators

inline const std::vector<char32_t>& arabic_alphabet() {
  static const std::vector<char32_t> alphabet = {
      U'ب', U'ت', U'ج', U'د', U'ر', U'ز', U'س',
      U'ک', U'گ', U'م', U'ن', U'و', U'ی', U'ە',
      U'ا', U'ه',
  };
  return alphabet;
}

inline const std::vector<char32_t>& mixed_alphabet() {
  static const std::vector<char32_t> alphabet = [] {
    std::vector<char32_t> a = arabic_alphabet();
    for (char c = 'a'; c <= 'j'; ++c) a.push_back(static_cast<char32_t>(c));
    a.push_back(U'ك');  // Arabic kaf, normalizes away
    a.push_back(U'ي');  // Arabic yeh, normalizes away
    return a;
  }();
  return alphabet;
}

inline std::string random_word(std::mt19937& rng, const std::vector<char32_t>& alphabet,
                               std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> char_dist(0, alphabet.size() - 1);
  std::u32string word;
  std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) word.push_back(alphabet[char_dist(rng)]);
  return sorani::encode_utf8(word);
}

/// Random Unicode string across several blocks, joiners included.
inline std::string random_unicode_string(std::mt19937& rng, std::size_t max_len = 24) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> block_dist(0, 5);
  std::u32string out;
  std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) {
    switch (block_dist(rng)) {
      case 0: out.push_back(std::uniform_int_distribution<char32_t>(0x20, 0x7E)(rng)); break;
      case 1: out.push_back(std::uniform_int_distribution<char32_t>(0x0600, 0x06FF)(rng)); break;
      case 2: out.push_back(U'‌'); break;
      case 3: out.push_back(std::uniform_int_distribution<char32_t>(0x0640, 0x0655)(rng)); break;
      case 4: out.push_back(std::uniform_int_distribution<char32_t>(0x4E00, 0x4E2F)(rng)); break;
      default: out.push_back(std::uniform_int_distribution<char32_t>(0x1F600, 0x1F64F)(rng)); break;
    }
  }
  return sorani::encode_utf8(out);
}

/// Randomly generated valid resource pair for the round-trip property.
/// Every field is kept inside the fixed point of parse(serialize(.)).
struct RandomResources {
  sorani::Dictionary dict;
  sorani::AffixRuleSet rules;
};

inline RandomResources random_resources(std::mt19937& rng) {
  using namespace sorani;
  const std::vector<char32_t>& alphabet = arabic_alphabet();
  std::uniform_int_distribution<int> coin(0, 1);
  auto chance = [&](int percent) {
    return std::uniform_int_distribution<int>(0, 99)(rng) < percent;
  };

  RandomResources out;
  AffixRuleSet& rules = out.rules;
  rules.try_alphabet = random_word(rng, alphabet, 4, 10);
  if (chance(50)) {
    std::size_t reps = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    for (std::size_t i = 0; i < reps; ++i) {
      rules.rep_pairs.emplace_back(random_word(rng, alphabet, 1, 2),
                                   random_word(rng, alphabet, 1, 2));
    }
  }

  std::u32string flag_pool = U"ABCDEFGH";
  std::shuffle(flag_pool.begin(), flag_pool.end(), rng);
  std::size_t class_count = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
  std::u32string class_flags;
  for (std::size_t c = 0; c < class_count; ++c) {
    AffixClass cls;
    cls.flag = flag_pool[c];
    cls.kind = coin(rng) ? AffixKind::prefix : AffixKind::suffix;
    cls.cross_product = coin(rng) == 1;
    std::size_t rule_count = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    for (std::size_t r = 0; r < rule_count; ++r) {
      AffixRule rule;
      rule.kind = cls.kind;
      rule.flag = cls.flag;
      rule.cross_product = cls.cross_product;
      rule.strip = chance(30) ? random_word(rng, alphabet, 1, 1) : std::string{};
      rule.append = chance(90) ? random_word(rng, alphabet, 1, 3) : std::string{};
      switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: rule.condition = "."; break;
        case 1: rule.condition = random_word(rng, alphabet, 1, 2); break;
        case 2: rule.condition = "[" + random_word(rng, alphabet, 1, 3) + "]"; break;
        default: rule.condition = "[^" + random_word(rng, alphabet, 1, 3) + "]"; break;
      }
      rule.condition_atoms = parse_condition(rule.condition);
      if (chance(30)) rule.morph_fields.push_back("is:generated_" + std::to_string(r));
      cls.rules.push_back(std::move(rule));
    }
    class_flags.push_back(cls.flag);
    rules.classes.emplace(cls.flag, std::move(cls));
  }
  if (chance(40)) {
    rules.inert_flags = flag_pool.substr(class_count, 1);
    std::sort(rules.inert_flags.begin(), rules.inert_flags.end());
  }

  std::u32string usable_flags = class_flags + rules.inert_flags;
  std::vector<DicEntry> entries;
  std::size_t entry_count = std::uniform_int_distribution<std::size_t>(1, 25)(rng);
  static const char32_t kTags[] = {U'N', U'V', U'I', U'T', U'A', U'R', U'E', U'C',
                                   U'D', U'B', U'F', U'G', U'X', U'Z', U'W'};
  for (std::size_t i = 0; i < entry_count; ++i) {
    DicEntry e;
    if (chance(15)) {
      std::string left = random_word(rng, alphabet, 1, 3);
      std::string right = random_word(rng, alphabet, 1, 3);
      e.compound_parts = {left, right};
      e.surface = left + right;
    } else {
      e.surface = random_word(rng, alphabet, 1, 6);
    }
    std::size_t flag_n = std::uniform_int_distribution<std::size_t>(0, usable_flags.size())(rng);
    e.flags = usable_flags.substr(0, flag_n);
    std::sort(e.flags.begin(), e.flags.end());
    e.flags.erase(std::unique(e.flags.begin(), e.flags.end()), e.flags.end());
    if (chance(85)) {
      char32_t tag = kTags[std::uniform_int_distribution<std::size_t>(0, 14)(rng)];
      e.pos_tag = tag;
      // keep (po, is) consistent so the tag letter survives a reparse
      switch (tag) {
        case U'V': if (chance(70)) e.infl_class = "present_stem_active"; break;
        case U'I': e.infl_class = "past_stem_intransitive_active"; break;
        case U'T': e.infl_class = "past_stem_transitive_active"; break;
        case U'X': e.infl_class = "infinitive_active"; break;
        default: break;
      }
      if (TagSchema::is_verb_category(tag)) {
        e.stem = random_word(rng, alphabet, 1, 3);
      }
    }
    if (chance(15)) e.extra_fields.push_back("ph:" + random_word(rng, alphabet, 1, 2));
    if (chance(20)) e.needs_review = true;
    entries.push_back(std::move(e));
  }
  out.dict = Dictionary(std::move(entries));
  return out;
}

}  // namespace testsupport
