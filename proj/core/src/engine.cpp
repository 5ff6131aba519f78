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

#include "soranispell/engine.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "soranispell/baseline.hpp"
#include "soranispell/script.hpp"
#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Conditions constrain the dictionary word with the strip in place: at its
// end for suffix rules, at its start for prefix rules.
bool condition_matches(const AffixRule& rule, const std::u32string& base) {
  const auto& atoms = rule.condition_atoms;
  if (atoms.empty()) return true;
  if (base.size() < atoms.size()) return false;
  std::size_t offset = rule.kind == AffixKind::suffix ? base.size() - atoms.size() : 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!atoms[i].matches(base[offset + i])) return false;
  }
  return true;
}

bool condition_matches(const AffixRule& rule, std::string_view base_utf8) {
  if (rule.condition_atoms.empty()) return true;
  return condition_matches(rule, decode_utf8(base_utf8));
}

Analysis make_analysis(std::string surface, const DicEntry& base, const AffixRule* prefix,
                       const AffixRule* suffix) {
  Analysis a;
  a.surface = std::move(surface);
  a.base = &base;
  a.prefix_rule = prefix;
  a.suffix_rule = suffix;
  a.pos_tag = base.pos_tag;
  a.stem = base.stem;
  if (prefix) a.morphemes.push_back(prefix->append);
  a.morphemes.push_back(base.surface);
  if (suffix) a.morphemes.push_back(suffix->append);
  return a;
}

}  // namespace

UnresolvedFlagError::UnresolvedFlagError(std::string surface, char32_t flag)
    : std::runtime_error("entry '" + surface + "' carries unresolved flag '" + encode_utf8(flag) +
                         "'"),
      flag_(flag) {}

Engine::Engine(Dictionary dict, AffixRuleSet rules)
    : dict_(std::move(dict)), rules_(std::move(rules)) {
  load_diagnostics_ = unresolved_flag_report(dict_, rules_);
}

void Engine::collect(const std::string& w, bool first_only, std::vector<Analysis>* out) const {
  // bare entries
  for (std::uint32_t idx : dict_.find(w)) {
    out->push_back(make_analysis(w, dict_.entries()[idx], nullptr, nullptr));
    if (first_only) return;
  }

  // suffix-only
  for (const auto& [flag, cls] : rules_.classes) {
    if (cls.kind != AffixKind::suffix) continue;
    for (const AffixRule& rule : cls.rules) {
      if (!ends_with(w, rule.append)) continue;
      std::string base = w.substr(0, w.size() - rule.append.size()) + rule.strip;
      if (base.empty() || !condition_matches(rule, base)) continue;
      for (std::uint32_t idx : dict_.find(base)) {
        const DicEntry& entry = dict_.entries()[idx];
        if (entry.flags.find(flag) == std::u32string::npos) continue;
        out->push_back(make_analysis(w, entry, nullptr, &rule));
        if (first_only) return;
      }
    }
  }

  // prefix-only
  for (const auto& [flag, cls] : rules_.classes) {
    if (cls.kind != AffixKind::prefix) continue;
    for (const AffixRule& rule : cls.rules) {
      if (!starts_with(w, rule.append)) continue;
      std::string base = rule.strip + w.substr(rule.append.size());
      if (base.empty() || !condition_matches(rule, base)) continue;
      for (std::uint32_t idx : dict_.find(base)) {
        const DicEntry& entry = dict_.entries()[idx];
        if (entry.flags.find(flag) == std::u32string::npos) continue;
        out->push_back(make_analysis(w, entry, &rule, nullptr));
        if (first_only) return;
      }
    }
  }

  // prefix + suffix, both classes cross-product
  for (const auto& [pflag, pcls] : rules_.classes) {
    if (pcls.kind != AffixKind::prefix || !pcls.cross_product) continue;
    for (const AffixRule& prule : pcls.rules) {
      if (!starts_with(w, prule.append)) continue;
      for (const auto& [sflag, scls] : rules_.classes) {
        if (scls.kind != AffixKind::suffix || !scls.cross_product) continue;
        for (const AffixRule& srule : scls.rules) {
          if (prule.append.size() + srule.append.size() > w.size()) continue;
          if (!ends_with(w, srule.append)) continue;
          std::string base =
              prule.strip +
              w.substr(prule.append.size(), w.size() - prule.append.size() - srule.append.size()) +
              srule.strip;
          if (base.empty()) continue;
          if (!condition_matches(prule, base) || !condition_matches(srule, base)) continue;
          for (std::uint32_t idx : dict_.find(base)) {
            const DicEntry& entry = dict_.entries()[idx];
            if (entry.flags.find(pflag) == std::u32string::npos ||
                entry.flags.find(sflag) == std::u32string::npos) {
              continue;
            }
            out->push_back(make_analysis(w, entry, &prule, &srule));
            if (first_only) return;
          }
        }
      }
    }
  }
}

bool Engine::has_analysis(const std::string& normalized) const {
  std::vector<Analysis> out;
  collect(normalized, /*first_only=*/true, &out);
  return !out.empty();
}

bool Engine::check(std::string_view word) const {
  return has_analysis(normalize(word));
}

std::vector<Analysis> Engine::analyze(std::string_view word) const {
  std::vector<Analysis> out;
  collect(normalize(word), /*first_only=*/false, &out);
  return out;
}

std::vector<std::string> Engine::stem(std::string_view word) const {
  std::vector<std::string> stems;
  for (const Analysis& a : analyze(word)) {
    if (!a.pos_tag || !a.stem) continue;
    char32_t tag = *a.pos_tag;
    if (tag != U'V' && tag != U'I' && tag != U'T' && tag != U'X') continue;
    if (std::find(stems.begin(), stems.end(), *a.stem) == stems.end()) {
      stems.push_back(*a.stem);
    }
  }
  return stems;
}

std::set<std::string> Engine::generate(const DicEntry& entry) const {
  for (char32_t flag : entry.flags) {
    if (!rules_.flag_known(flag)) throw UnresolvedFlagError(entry.surface, flag);
  }

  const std::string& surface = entry.surface;
  std::vector<const AffixRule*> prefixes;
  std::vector<const AffixRule*> suffixes;
  for (char32_t flag : entry.flags) {
    const AffixClass* cls = rules_.find_class(flag);
    if (!cls) continue;
    for (const AffixRule& rule : cls->rules) {
      if (cls->kind == AffixKind::suffix) {
        if (ends_with(surface, rule.strip) && condition_matches(rule, surface)) {
          suffixes.push_back(&rule);
        }
      } else {
        if (starts_with(surface, rule.strip) && condition_matches(rule, surface)) {
          prefixes.push_back(&rule);
        }
      }
    }
  }

  std::set<std::string> forms;
  forms.insert(surface);
  for (const AffixRule* s : suffixes) {
    std::string form = surface.substr(0, surface.size() - s->strip.size()) + s->append;
    if (!form.empty()) forms.insert(std::move(form));
  }
  for (const AffixRule* p : prefixes) {
    std::string form = p->append + surface.substr(p->strip.size());
    if (!form.empty()) forms.insert(std::move(form));
  }
  for (const AffixRule* p : prefixes) {
    if (!p->cross_product) continue;
    for (const AffixRule* s : suffixes) {
      if (!s->cross_product) continue;
      if (p->strip.size() + s->strip.size() > surface.size()) continue;
      std::string mid =
          surface.substr(p->strip.size(), surface.size() - p->strip.size() - s->strip.size());
      std::string form = p->append + mid + s->append;
      if (!form.empty()) forms.insert(std::move(form));
    }
  }
  return forms;
}

std::vector<Suggestion> Engine::suggest(std::string_view word, const SuggestOptions& opts) const {
  std::string query = normalize(word);
  if (has_analysis(query)) return {};

  const std::u32string query32 = decode_utf8(query);
  const std::u32string alphabet = decode_utf8(rules_.try_alphabet);

  std::map<std::string, Suggestion> found;
  auto offer = [&](const std::string& candidate, int source) {
    if (candidate == query) return;
    Suggestion s{candidate, levenshtein(query, candidate), source};
    auto [it, inserted] = found.try_emplace(candidate, s);
    if (!inserted && s < it->second) it->second = s;
  };

  // single-character edits over the TRY alphabet, breadth-first to the
  // distance cap
  std::unordered_set<std::u32string> visited{query32};
  std::vector<std::u32string> frontier{query32};
  for (int depth = 0; depth < opts.max_distance; ++depth) {
    std::vector<std::u32string> next;
    for (const std::u32string& s : frontier) {
      auto consider = [&](std::u32string&& edited) {
        if (!visited.insert(edited).second) return;
        std::string utf8 = encode_utf8(edited);
        if (has_analysis(utf8)) offer(utf8, 0);
        next.push_back(std::move(edited));
      };
      for (std::size_t i = 0; i < s.size(); ++i) {  // deletions
        std::u32string e = s;
        e.erase(i, 1);
        consider(std::move(e));
      }
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {  // transpositions
        if (s[i] == s[i + 1]) continue;
        std::u32string e = s;
        std::swap(e[i], e[i + 1]);
        consider(std::move(e));
      }
      for (std::size_t i = 0; i < s.size(); ++i) {  // substitutions
        for (char32_t c : alphabet) {
          if (s[i] == c) continue;
          std::u32string e = s;
          e[i] = c;
          consider(std::move(e));
        }
      }
      for (std::size_t i = 0; i <= s.size(); ++i) {  // insertions
        for (char32_t c : alphabet) {
          std::u32string e = s;
          e.insert(e.begin() + static_cast<std::ptrdiff_t>(i), c);
          consider(std::move(e));
        }
      }
    }
    frontier = std::move(next);
  }

  // REP pair rewrites, one occurrence at a time
  for (const auto& [from, to] : rules_.rep_pairs) {
    if (from.empty()) continue;
    std::size_t pos = 0;
    while ((pos = query.find(from, pos)) != std::string::npos) {
      std::string candidate = query.substr(0, pos) + to + query.substr(pos + from.size());
      if (has_analysis(candidate)) offer(candidate, 0);
      ++pos;
    }
  }

  // split candidates: "a b" with both halves passing check
  if (opts.enable_splits) {
    for (std::size_t i = 1; i < query32.size(); ++i) {
      std::string left = encode_utf8(query32.substr(0, i));
      std::string right = encode_utf8(query32.substr(i));
      if (has_analysis(left) && has_analysis(right)) {
        offer(left + " " + right, 1);
      }
    }
  }

  std::vector<Suggestion> out;
  out.reserve(found.size());
  for (auto& [_, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  if (opts.max_results >= 0 && out.size() > static_cast<std::size_t>(opts.max_results)) {
    out.resize(static_cast<std::size_t>(opts.max_results));
  }
  return out;
}

}  // namespace sorani
