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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sorani {

// Arabic-script text policy used across the engine. All dictionary surfaces,
// rule strings and corpus tokens are stored in the form produced by
// normalize(): canonical composed hamza/madda sequences, the Kurdish letter
// variants (U+06A9 kaf, U+06CC yeh), U+06D5 for the ae vowel written as
// heh + zero-width non-joiner, and no tatweel or stray non-joiners.

/// Applies the character policy. Total and idempotent.
std::string normalize(std::string_view text);

bool is_normalized(std::string_view text);

enum class Direction {
  latin_to_arabic,
  arabic_to_latin,
};

/// Ordered rewrite table between the Latin-script and Arabic-script
/// spellings of Kurdish. Applied longest-match-first; on equal length the
/// earlier rule wins, which makes the reverse direction deterministic when
/// several Latin patterns share one Arabic image.
struct TransliterationTable {
  std::vector<std::pair<std::string, std::string>> pairs;  // (latin, arabic)

  /// Built-in Latin (Hawar-style) <-> Sorani Arabic correspondence.
  /// The short vowel i is unwritten in the Arabic script and maps to the
  /// empty string, so it survives only latin->arabic.
  static const TransliterationTable& standard();
};

/// Loads a table from a two-column tab-separated stream: latin TAB arabic,
/// one rule per line, '#' comments. Throws ParseError on malformed lines.
TransliterationTable parse_translit_table(std::istream& in);

std::string transliterate(std::string_view text, Direction direction,
                          const TransliterationTable& table = TransliterationTable::standard());

/// Token separator class: Unicode whitespace plus Latin and Arabic
/// punctuation. The zero-width non-joiner is not a separator.
bool is_separator(char32_t cp);

/// Splits normalized text on the separator class; never returns empty
/// tokens. Tokens come back normalized.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace sorani
