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
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sorani {

class Engine;

// ---------------------------------------------------------------------------
// spell-checking evaluation

enum class GoldLabel { correct, incorrect, incorrect_spaced };

/// One test-set row. Merged-word errors carry gold corrections containing a
/// space and the incorrect_spaced label.
struct SpellTestCase {
  std::string input;
  GoldLabel label = GoldLabel::correct;
  std::vector<std::string> corrections;  // normalized; empty for correct rows

  bool gold_correct() const { return label == GoldLabel::correct; }
};

/// Tab-separated rows: input TAB label TAB corrections ('|'-separated,
/// omitted for correct rows); '#' comments. Throws ParseError.
std::vector<SpellTestCase> parse_spell_testset(std::istream& in);

enum class Bucket { tp, fp, tn, fn };

/// Bucket mapping: an accepted gold-correct word is a true positive, a
/// rejected gold-correct word a false positive, a rejected gold-incorrect
/// word a true negative and an accepted gold-incorrect word a false
/// negative.
Bucket classify_case(const SpellTestCase& c, bool accepted);

struct ConfusionCounts {
  std::uint64_t tp = 0, fp = 0, tn = 0, fn = 0;
  std::uint64_t total() const { return tp + fp + tn + fn; }
  bool operator==(const ConfusionCounts&) const = default;
};

/// Accuracy, precision tp/(tp+fp), recall tp/(tp+fn) and F1. A metric with
/// a zero denominator is undefined rather than zero, and a row with no
/// gold-correct cases (tp+fp = 0) has the whole precision/recall/F1 block
/// undefined.
struct Metrics {
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  bool operator==(const Metrics&) const = default;
};

Metrics compute_metrics(const ConfusionCounts& c);

class NoIncorrectCasesError : public std::runtime_error {
 public:
  NoIncorrectCasesError() : std::runtime_error("test set has no gold-incorrect cases") {}
};

class EmptyTestSetError : public std::runtime_error {
 public:
  EmptyTestSetError() : std::runtime_error("test set is empty") {}
};

/// Suggestion-rank hits over the gold-incorrect cases: a case is a hit at
/// rank k when any gold correction appears in the first k suggestions, and
/// a hit overall when it appears anywhere in the returned list.
struct SuggestionHits {
  std::uint64_t hits_at_1 = 0;
  std::uint64_t hits_at_3 = 0;
  std::uint64_t hits_anywhere = 0;
  std::uint64_t denominator = 0;

  double sugg1() const { return static_cast<double>(hits_at_1) / static_cast<double>(denominator); }
  double sugg3() const { return static_cast<double>(hits_at_3) / static_cast<double>(denominator); }
  double sugg_all() const {
    return static_cast<double>(hits_anywhere) / static_cast<double>(denominator);
  }
  bool operator==(const SuggestionHits&) const = default;
};

using Checker = std::function<bool(const std::string&)>;
using Suggester = std::function<std::vector<std::string>(const std::string&)>;

/// Throws NoIncorrectCasesError when every case is gold-correct.
SuggestionHits suggestion_hits(const std::vector<SpellTestCase>& cases,
                               const Suggester& suggester);

struct SpellReport {
  std::string system_name;
  std::string testset_name;
  ConfusionCounts counts;
  std::optional<SuggestionHits> hits;  // absent when no gold-incorrect cases

  Metrics metrics() const { return compute_metrics(counts); }
  bool operator==(const SpellReport&) const = default;
};

/// Runs the checker over every case (dropping incorrect_spaced rows when
/// asked), accumulates the confusion counts and the suggestion hits.
/// Multi-token inputs are accepted when every token checks.
SpellReport evaluate_spell(const std::vector<SpellTestCase>& cases, const Checker& checker,
                           const Suggester& suggester, std::string system_name,
                           std::string testset_name, bool drop_spaced = false);

// ---------------------------------------------------------------------------
// morphological evaluation

struct MorphTestCase {
  std::string word;
  std::string lemma;
  std::u32string pos_tags;  // gold tag letters
  std::optional<std::string> stem;
  std::string base;
  std::vector<std::string> prefixes;
  std::vector<std::string> suffixes;
  std::string note;
};

/// Tab-separated rows: word, lemma, pos letters, stem, base, prefixes and
/// suffixes '+'-joined (empty column for none), optional note. The
/// concatenation prefixes+base+suffixes must reconstruct the word.
std::vector<MorphTestCase> parse_morph_testset(std::istream& in);

enum class MorphAspect { segmentation, pos, stem };

struct MorphScore {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  double accuracy() const { return static_cast<double>(correct) / static_cast<double>(total); }
};

/// segmentation: some analysis reproduces (prefixes, base, suffixes),
/// compared by concatenated prefix/suffix text. pos: the analysis tag set
/// intersects the gold tags. stem: the gold stem is among the returned
/// stems (verb-category rows only). Throws EmptyTestSetError.
MorphScore evaluate_morph(const std::vector<MorphTestCase>& cases, const Engine& engine,
                          MorphAspect aspect);

struct CoverageScore {
  std::uint64_t analyzed = 0;
  std::uint64_t total = 0;
  double ratio() const { return static_cast<double>(analyzed) / static_cast<double>(total); }
};

/// Fraction of distinct normalized words with at least one analysis,
/// correct or not. Throws EmptyTestSetError.
CoverageScore coverage(const std::vector<std::string>& words, const Engine& engine);

// ---------------------------------------------------------------------------
// rendering

enum class ReportFormat { text_table, tab_separated, structured };

/// Deterministic rendering; undefined metrics print as an em dash and
/// percentages use two decimals. The structured form is JSON and
/// spell_report_from_json inverts it.
std::string render_report(const SpellReport& report, ReportFormat format);
std::string render_report(const MorphScore& score, MorphAspect aspect, std::string_view testset,
                          ReportFormat format);
std::string render_report(const CoverageScore& score, std::string_view testset,
                          ReportFormat format);

SpellReport spell_report_from_json(std::string_view json_text);

const char* to_string(MorphAspect aspect);
const char* to_string(GoldLabel label);

}  // namespace sorani
