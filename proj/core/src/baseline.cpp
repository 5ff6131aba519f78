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

#include "soranispell/baseline.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

#include "soranispell/parse_error.hpp"
#include "soranispell/script.hpp"
#include "soranispell/unicode.hpp"

namespace sorani {

std::size_t FrequencyList::admitted_size() const {
  std::size_t n = 0;
  for (const auto& [_, count] : counts) {
    if (count >= min_freq) ++n;
  }
  return n;
}

std::vector<std::string> FrequencyList::admitted() const {
  std::vector<std::string> words;
  for (const auto& [word, count] : counts) {
    if (count >= min_freq) words.push_back(word);
  }
  return words;
}

FrequencyList build_frequency_list(std::istream& corpus, std::uint64_t min_freq) {
  FrequencyList fl;
  fl.min_freq = min_freq;
  std::string line;
  while (std::getline(corpus, line)) {
    for (std::string& token : tokenize(line)) {
      ++fl.counts[std::move(token)];
    }
  }
  return fl;
}

FrequencyList build_frequency_list(const std::vector<std::string>& tokens,
                                   std::uint64_t min_freq) {
  FrequencyList fl;
  fl.min_freq = min_freq;
  for (const std::string& token : tokens) {
    for (std::string& t : tokenize(token)) {
      ++fl.counts[std::move(t)];
    }
  }
  return fl;
}

int levenshtein(std::string_view a, std::string_view b) {
  std::u32string x = decode_utf8(normalize(a));
  std::u32string y = decode_utf8(normalize(b));
  if (x.empty()) return static_cast<int>(y.size());
  if (y.empty()) return static_cast<int>(x.size());

  std::vector<int> row(y.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    int corner = row[0];
    row[0] = static_cast<int>(i) + 1;
    for (std::size_t j = 0; j < y.size(); ++j) {
      int up = row[j + 1];
      int cost = x[i] == y[j] ? corner : 1 + std::min({corner, up, row[j]});
      corner = up;
      row[j + 1] = cost;
    }
  }
  return row[y.size()];
}

bool baseline_check(const FrequencyList& fl, std::string_view word) {
  return fl.is_admitted(normalize(word));
}

std::vector<Suggestion> baseline_suggest(const FrequencyList& fl, std::string_view word,
                                         std::size_t k) {
  std::string query = normalize(word);
  if (fl.is_admitted(query)) return {};

  struct Ranked {
    int distance;
    std::uint64_t count;
    const std::string* word;
  };
  std::vector<Ranked> ranked;
  for (const auto& [candidate, count] : fl.counts) {
    if (count < fl.min_freq) continue;
    ranked.push_back({levenshtein(query, candidate), count, &candidate});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.count != b.count) return a.count > b.count;
    return *a.word < *b.word;
  });
  if (ranked.size() > k) ranked.resize(k);

  std::vector<Suggestion> out;
  out.reserve(ranked.size());
  for (const Ranked& r : ranked) out.push_back({*r.word, r.distance, 0});
  return out;
}

void save_frequency_list(const FrequencyList& fl, std::ostream& out) {
  for (const auto& [word, count] : fl.counts) {
    out << word << '\t' << count << '\n';
  }
}

FrequencyList load_frequency_list(std::istream& in, std::uint64_t min_freq) {
  FrequencyList fl;
  fl.min_freq = min_freq;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 ||
        line.find_first_not_of("0123456789", tab + 1) != std::string::npos ||
        tab + 1 == line.size()) {
      throw ParseError(ParseErrorKind::bad_entry, lineno,
                       "expected 'word TAB count', got '" + line + "'");
    }
    fl.counts[normalize(line.substr(0, tab))] += std::stoull(line.substr(tab + 1));
  }
  return fl;
}

}  // namespace sorani
