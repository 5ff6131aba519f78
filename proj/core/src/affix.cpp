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

#include "soranispell/affix.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "soranispell/dictionary.hpp"
#include "soranispell/parse_error.hpp"
#include "soranispell/script.hpp"
#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

char32_t parse_flag(const std::string& token, std::size_t lineno) {
  std::u32string cps = decode_utf8(token);
  if (cps.size() != 1) {
    throw ParseError(ParseErrorKind::bad_rule, lineno,
                     "flag must be a single character, got '" + token + "'");
  }
  return cps[0];
}

bool equals_ignore_case(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 'a' + 'A');
    if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 'a' + 'A');
    if (x != y) return false;
  }
  return true;
}

struct OpenClass {
  std::size_t header_line = 0;
  std::size_t expected = 0;
};

}  // namespace

std::vector<ConditionAtom> parse_condition(std::string_view condition) {
  std::vector<ConditionAtom> atoms;
  std::u32string cps = decode_utf8(normalize(condition));
  if (cps == U".") return atoms;  // unconditional

  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    if (cp == U'[') {
      ConditionAtom atom;
      ++i;
      if (i < cps.size() && cps[i] == U'^') {
        atom.negated = true;
        ++i;
      }
      std::u32string chars;
      while (i < cps.size() && cps[i] != U']') {
        chars.push_back(cps[i]);
        ++i;
      }
      if (i >= cps.size()) {
        throw ParseError(ParseErrorKind::bad_condition, 0, "unbalanced '[' in condition");
      }
      if (chars.empty()) {
        throw ParseError(ParseErrorKind::bad_condition, 0, "empty [] class in condition");
      }
      ++i;  // skip ']'
      atom.chars = std::move(chars);
      atoms.push_back(std::move(atom));
    } else if (cp == U']') {
      throw ParseError(ParseErrorKind::bad_condition, 0, "']' without matching '['");
    } else if (cp == U'.') {
      atoms.push_back(ConditionAtom{});  // any character
      ++i;
    } else {
      ConditionAtom atom;
      atom.chars.push_back(cp);
      atoms.push_back(std::move(atom));
      ++i;
    }
  }
  return atoms;
}

AffixRuleSet parse_aff(std::istream& in) {
  AffixRuleSet rules;
  std::map<char32_t, OpenClass> open;
  std::size_t rep_expected = 0;
  std::size_t rep_header_line = 0;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "SET") {
      if (tokens.size() != 2) {
        throw ParseError(ParseErrorKind::bad_rule, lineno, "SET takes one argument");
      }
      if (!equals_ignore_case(tokens[1], "UTF-8")) {
        throw ParseError(ParseErrorKind::unsupported_encoding, lineno,
                         "only UTF-8 resources are supported, got '" + tokens[1] + "'");
      }
      rules.encoding = "UTF-8";
      continue;
    }
    if (head == "TRY") {
      if (tokens.size() != 2) {
        throw ParseError(ParseErrorKind::bad_rule, lineno, "TRY takes one argument");
      }
      rules.try_alphabet = normalize(tokens[1]);
      continue;
    }
    if (head == "INERT") {
      if (tokens.size() != 2) {
        throw ParseError(ParseErrorKind::bad_rule, lineno, "INERT takes one argument");
      }
      std::u32string flags = decode_utf8(tokens[1]);
      rules.inert_flags += flags;
      std::sort(rules.inert_flags.begin(), rules.inert_flags.end());
      rules.inert_flags.erase(std::unique(rules.inert_flags.begin(), rules.inert_flags.end()),
                              rules.inert_flags.end());
      continue;
    }
    if (head == "REP") {
      if (rep_expected == 0 && tokens.size() == 2 &&
          tokens[1].find_first_not_of("0123456789") == std::string::npos) {
        rep_expected = std::stoul(tokens[1]);
        rep_header_line = lineno;
        continue;
      }
      if (tokens.size() != 3) {
        throw ParseError(ParseErrorKind::bad_rule, lineno, "REP pair needs two columns");
      }
      if (rep_expected == 0) {
        throw ParseError(ParseErrorKind::class_count_mismatch, lineno,
                         "REP pair outside a declared REP block");
      }
      rules.rep_pairs.emplace_back(normalize(tokens[1]), normalize(tokens[2]));
      --rep_expected;
      continue;
    }
    if (head == "PFX" || head == "SFX") {
      AffixKind kind = head == "PFX" ? AffixKind::prefix : AffixKind::suffix;
      if (tokens.size() < 4) {
        throw ParseError(ParseErrorKind::bad_rule, lineno, "truncated " + head + " line");
      }
      char32_t flag = parse_flag(tokens[1], lineno);
      auto it = rules.classes.find(flag);
      auto open_it = open.find(flag);
      bool in_open_class = open_it != open.end() && open_it->second.expected > 0;

      if (!in_open_class) {
        // class header: KIND FLAG CROSS COUNT
        if (it != rules.classes.end()) {
          if (it->second.kind != kind) {
            throw ParseError(ParseErrorKind::mixed_kind_in_class, lineno,
                             "flag '" + encode_utf8(flag) + "' reopened with a different kind");
          }
          throw ParseError(ParseErrorKind::class_count_mismatch, lineno,
                           "extra rule line after the declared count for flag '" +
                               encode_utf8(flag) + "'");
        }
        if (tokens.size() != 4 || (tokens[2] != "Y" && tokens[2] != "N") ||
            tokens[3].find_first_not_of("0123456789") != std::string::npos) {
          throw ParseError(ParseErrorKind::bad_rule, lineno,
                           "expected header '" + head + " FLAG Y|N COUNT'");
        }
        AffixClass cls;
        cls.kind = kind;
        cls.flag = flag;
        cls.cross_product = tokens[2] == "Y";
        rules.classes.emplace(flag, std::move(cls));
        open[flag] = OpenClass{lineno, std::stoul(tokens[3])};
        continue;
      }

      // rule line: KIND FLAG STRIP APPEND CONDITION [morph fields]
      AffixClass& cls = it->second;
      if (cls.kind != kind) {
        throw ParseError(ParseErrorKind::mixed_kind_in_class, lineno,
                         "rule kind does not match the class header for flag '" +
                             encode_utf8(flag) + "'");
      }
      if (tokens.size() < 5) {
        throw ParseError(ParseErrorKind::bad_rule, lineno, "truncated " + head + " rule line");
      }
      AffixRule rule;
      rule.kind = kind;
      rule.flag = flag;
      rule.cross_product = cls.cross_product;
      rule.strip = tokens[2] == "0" ? std::string{} : normalize(tokens[2]);
      rule.append = tokens[3] == "0" ? std::string{} : normalize(tokens[3]);
      rule.condition = normalize(tokens[4]);
      try {
        rule.condition_atoms = parse_condition(rule.condition);
      } catch (const ParseError& e) {
        throw ParseError(e.kind(), lineno, e.message());
      }
      for (std::size_t t = 5; t < tokens.size(); ++t) rule.morph_fields.push_back(tokens[t]);
      cls.rules.push_back(std::move(rule));
      --open_it->second.expected;
      continue;
    }
    throw ParseError(ParseErrorKind::unknown_directive, lineno,
                     "unrecognized directive '" + head + "'");
  }

  for (const auto& [flag, state] : open) {
    if (state.expected > 0) {
      throw ParseError(ParseErrorKind::class_count_mismatch, state.header_line,
                       "class '" + encode_utf8(flag) + "' declares " +
                           std::to_string(state.expected + rules.classes.at(flag).rules.size()) +
                           " rules, got " + std::to_string(rules.classes.at(flag).rules.size()));
    }
  }
  if (rep_expected > 0) {
    throw ParseError(ParseErrorKind::class_count_mismatch, rep_header_line,
                     "REP block is missing " + std::to_string(rep_expected) + " pairs");
  }
  return rules;
}

AffixRuleSet parse_aff_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_aff(in);
}

std::string serialize_aff(const AffixRuleSet& rules) {
  std::string out;
  out += "SET " + rules.encoding + "\n";
  if (!rules.try_alphabet.empty()) out += "TRY " + rules.try_alphabet + "\n";
  if (!rules.inert_flags.empty()) out += "INERT " + encode_utf8(rules.inert_flags) + "\n";
  if (!rules.rep_pairs.empty()) {
    out += "REP " + std::to_string(rules.rep_pairs.size()) + "\n";
    for (const auto& [from, to] : rules.rep_pairs) {
      out += "REP " + from + " " + to + "\n";
    }
  }
  for (const auto& [flag, cls] : rules.classes) {
    const char* kind = cls.kind == AffixKind::prefix ? "PFX" : "SFX";
    out += '\n';
    out += kind;
    out += ' ';
    out += encode_utf8(flag);
    out += cls.cross_product ? " Y " : " N ";
    out += std::to_string(cls.rules.size());
    out += '\n';
    for (const AffixRule& rule : cls.rules) {
      out += kind;
      out += ' ';
      out += encode_utf8(flag);
      out += ' ';
      out += rule.strip.empty() ? "0" : rule.strip;
      out += ' ';
      out += rule.append.empty() ? "0" : rule.append;
      out += ' ';
      out += rule.condition.empty() ? "." : rule.condition;
      for (const std::string& field : rule.morph_fields) {
        out += ' ';
        out += field;
      }
      out += '\n';
    }
  }
  return out;
}

std::vector<std::string> unresolved_flag_report(const Dictionary& dict, const AffixRuleSet& rules) {
  std::vector<std::string> report;
  for (const DicEntry& entry : dict.entries()) {
    for (char32_t flag : entry.flags) {
      if (!rules.flag_known(flag)) {
        report.push_back("entry '" + entry.surface + "' uses flag '" + encode_utf8(flag) +
                         "' which names no affix class and is not declared inert");
      }
    }
  }
  return report;
}

}  // namespace sorani
