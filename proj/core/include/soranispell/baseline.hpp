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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "soranispell/engine.hpp"

namespace sorani {

/// Corpus word counts with an inclusion threshold. A word is admitted to
/// the checking list when its count reaches min_freq (default 10).
struct FrequencyList {
  std::map<std::string, std::uint64_t> counts;  // normalized token -> count
  std::uint64_t min_freq = 10;

  bool is_admitted(std::string_view normalized_word) const {
    auto it = counts.find(std::string(normalized_word));
    return it != counts.end() && it->second >= min_freq;
  }
  std::size_t admitted_size() const;
  std::vector<std::string> admitted() const;

  bool operator==(const FrequencyList&) const = default;
};

FrequencyList build_frequency_list(std::istream& corpus, std::uint64_t min_freq = 10);
FrequencyList build_frequency_list(const std::vector<std::string>& tokens,
                                   std::uint64_t min_freq = 10);

/// Levenshtein distance (insertions, deletions, substitutions) over the
/// Unicode scalar values of the normalized strings.
int levenshtein(std::string_view a, std::string_view b);

/// True iff the normalized word is in the admitted set.
bool baseline_check(const FrequencyList& fl, std::string_view word);

/// The k admitted words closest to the query, sorted by distance, then by
/// higher corpus count, then lexicographically. Empty when the word is
/// admitted. The whole admitted set comes back when k exceeds it.
std::vector<Suggestion> baseline_suggest(const FrequencyList& fl, std::string_view word,
                                         std::size_t k);

/// Two-column persistence: word TAB count, sorted by word.
void save_frequency_list(const FrequencyList& fl, std::ostream& out);
FrequencyList load_frequency_list(std::istream& in, std::uint64_t min_freq = 10);

}  // namespace sorani
