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

#include "soranispell/script.hpp"

#include <algorithm>
#include <istream>
#include <unordered_map>

#include "soranispell/parse_error.hpp"
#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

constexpr char32_t kZwnj = U'‌';
constexpr char32_t kTatweel = U'ـ';
constexpr char32_t kHeh = U'ه';
constexpr char32_t kAe = U'ە';  // Kurdish ae vowel

// Canonical composition of the hamza/madda combining marks that occur in
// Arabic-script Kurdish text.
struct ComposePair {
  char32_t base;
  char32_t mark;
  char32_t composed;
};
constexpr ComposePair kComposeTable[] = {
    {U'ا', U'ٓ', U'آ'},  // alef + madda
    {U'ا', U'ٔ', U'أ'},  // alef + hamza above
    {U'ا', U'ٕ', U'إ'},  // alef + hamza below
    {U'و', U'ٔ', U'ؤ'},  // waw + hamza above
    {U'ي', U'ٔ', U'ئ'},  // Arabic yeh + hamza above
    {U'ى', U'ٔ', U'ئ'},  // alef maksura + hamza above
    {U'ی', U'ٔ', U'ئ'},  // Farsi yeh + hamza above
};

// Letter-variant substitutions. Entries mapping to U+0000 are removed.
struct CharMap {
  char32_t from;
  char32_t to;
};
constexpr CharMap kPolicyTable[] = {
    {U'ك', U'ک'},  // Arabic kaf -> Kurdish kaf
    {U'ي', U'ی'},  // Arabic yeh -> Farsi yeh
    {U'ى', U'ی'},  // alef maksura -> Farsi yeh
    {kTatweel, U'\0'},       // tatweel is presentational only
};

char32_t compose(char32_t base, char32_t mark) {
  for (const auto& p : kComposeTable) {
    if (p.base == base && p.mark == mark) return p.composed;
  }
  return 0;
}

char32_t policy_substitute(char32_t cp) {
  for (const auto& m : kPolicyTable) {
    if (m.from == cp) return m.to;
  }
  return cp;
}

}  // namespace

std::string normalize(std::string_view text) {
  std::u32string cps = decode_utf8(text);

  std::u32string composed;
  composed.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i + 1 < cps.size()) {
      if (char32_t c = compose(cps[i], cps[i + 1]); c != 0) {
        composed.push_back(c);
        ++i;
        continue;
      }
    }
    composed.push_back(cps[i]);
  }

  std::u32string out;
  out.reserve(composed.size());
  for (std::size_t i = 0; i < composed.size(); ++i) {
    char32_t cp = composed[i];
    if (cp == kHeh && i + 1 < composed.size() && composed[i + 1] == kZwnj) {
      // heh written with a non-joiner denotes the ae vowel
      out.push_back(kAe);
      ++i;
      continue;
    }
    if (cp == kZwnj) continue;  // joining control, not orthographic here
    cp = policy_substitute(cp);
    if (cp != 0) out.push_back(cp);
  }
  return encode_utf8(out);
}

bool is_normalized(std::string_view text) {
  return normalize(text) == text;
}

const TransliterationTable& TransliterationTable::standard() {
  static const TransliterationTable table{{
      // digraphs and secondary spellings first so reverse lookups are stable
      {"û", "وو"},            // û <-> waw waw
      {"ş", "ش"},                  // ş <-> sheen
      {"sh", "ش"},
      {"ç", "چ"},                  // ç <-> tcheh
      {"ch", "چ"},
      {"ê", "ێ"},                  // ê <-> yeh with small v
      {"î", "ی"},                  // î <-> Farsi yeh
      {"y", "ی"},
      {"ł", "ڵ"},                  // ł <-> lam with small v
      {"ř", "ڕ"},                  // ř <-> reh with small v
      {"ẍ", "غ"},                  // ẍ <-> ghain
      {"ḧ", "ح"},                  // ḧ <-> hah
      {"e", "ە"},
      {"a", "ا"},
      {"o", "ۆ"},
      {"w", "و"},
      {"u", "و"},
      {"b", "ب"},
      {"p", "پ"},
      {"t", "ت"},
      {"c", "ج"},
      {"x", "خ"},
      {"d", "د"},
      {"r", "ر"},
      {"z", "ز"},
      {"j", "ژ"},
      {"s", "س"},
      {"f", "ف"},
      {"v", "ڤ"},
      {"q", "ق"},
      {"k", "ک"},
      {"g", "گ"},
      {"l", "ل"},
      {"m", "م"},
      {"n", "ن"},
      {"h", "ه"},
      {"'", "ئ"},                       // hamza carrier
      {"i", ""},                             // short vowel, unwritten
  }};
  return table;
}

TransliterationTable parse_translit_table(std::istream& in) {
  TransliterationTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(ParseErrorKind::bad_entry, lineno,
                       "expected two tab-separated columns");
    }
    std::string latin = line.substr(0, tab);
    std::string arabic = line.substr(tab + 1);
    if (latin.empty()) {
      throw ParseError(ParseErrorKind::bad_entry, lineno, "empty pattern");
    }
    table.pairs.emplace_back(std::move(latin), normalize(arabic));
  }
  return table;
}

std::string transliterate(std::string_view text, Direction direction,
                          const TransliterationTable& table) {
  std::string input;
  if (direction == Direction::arabic_to_latin) {
    input = normalize(text);
  } else {
    input.assign(text);
  }
  std::u32string cps = decode_utf8(input);

  // (pattern, replacement) in match priority order: longer patterns first,
  // table order on ties.
  std::vector<std::pair<std::u32string, std::string>> rules;
  rules.reserve(table.pairs.size());
  for (const auto& [latin, arabic] : table.pairs) {
    if (direction == Direction::latin_to_arabic) {
      rules.emplace_back(decode_utf8(latin), arabic);
    } else {
      if (arabic.empty()) continue;
      rules.emplace_back(decode_utf8(arabic), latin);
    }
  }
  std::stable_sort(rules.begin(), rules.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

  std::string out;
  std::size_t i = 0;
  while (i < cps.size()) {
    bool matched = false;
    for (const auto& [pattern, replacement] : rules) {
      if (pattern.size() <= cps.size() - i &&
          std::equal(pattern.begin(), pattern.end(), cps.begin() + static_cast<std::ptrdiff_t>(i))) {
        out += replacement;
        i += pattern.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      append_utf8(out, cps[i]);
      ++i;
    }
  }
  return out;
}

bool is_separator(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case U'':
    case U' ':
    case U' ':
    case U' ':
    case U' ':
    case U' ':
    case U' ':
    case U'　':
      return true;
    default:
      break;
  }
  if (cp >= U' ' && cp <= U' ') return true;  // typographic spaces
  // ASCII punctuation
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    if ((c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
        (c >= '{' && c <= '~')) {
      return true;
    }
    return false;
  }
  switch (cp) {
    case U'«':  // «
    case U'»':  // »
    case U'،':  // arabic comma
    case U'؛':  // arabic semicolon
    case U'؟':  // arabic question mark
    case U'٪':  // arabic percent
    case U'٫':
    case U'٬':
    case U'٭':
    case U'۔':  // arabic full stop
      return true;
    default:
      break;
  }
  if (cp >= U'‐' && cp <= U'‧') return true;  // dashes, quotes, ellipsis
  return false;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::u32string cps = decode_utf8(normalize(text));
  std::vector<std::string> tokens;
  std::u32string current;
  for (char32_t cp : cps) {
    if (is_separator(cp)) {
      if (!current.empty()) {
        tokens.push_back(encode_utf8(current));
        current.clear();
      }
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) tokens.push_back(encode_utf8(current));
  return tokens;
}

}  // namespace sorani
