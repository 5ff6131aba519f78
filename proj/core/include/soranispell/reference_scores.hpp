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
#include <optional>

#include "soranispell/evaluation.hpp"

// Score sheet reported for the full-scale Sorani resources (a 23,223-entry
// tagged lexicon with 4,293 affix rules, evaluated against two external
// test sets). The repository ships a small sample lexicon, so these numbers
// document the full-scale runs; they are reference constants for the
// metric arithmetic and the report layout, not targets the sample fixture
// can reach.

namespace sorani::reference {

struct ReportedRow {
  const char* system;
  const char* testset;
  ConfusionCounts counts;
  // printed two-decimal values; absent where the source row is undefined
  std::optional<double> accuracy_percent;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  double sugg1_percent;
  double sugg3_percent;
  double sugg_all_percent;
};

inline constexpr const char* kBaseline = "baseline";
inline constexpr const char* kAffixEngine = "affix-engine";

// T1: 385 cases, none spelled correctly. T2: 1,400 cases, about 60.6%
// correct. "T2-nospace" drops the merged-word rows from T2.
inline const ReportedRow kReportedRows[] = {
    {kBaseline, "T1", {0, 0, 178, 206}, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
     26.82, 37.76, 46.35},
    {kBaseline, "T2", {597, 251, 105, 441}, 50.36, 0.70, 0.58, 0.63, 10.87, 15.76, 19.02},
    {kBaseline, "T2-nospace", {597, 251, 105, 210}, 60.36, 0.70, 0.74, 0.72, 18.69, 27.10, 32.71},
    {kAffixEngine, "T1", {0, 0, 208, 176}, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
     22.92, 39.84, 47.66},
    {kAffixEngine, "T2", {367, 481, 182, 364}, 39.38, 0.43, 0.50, 0.46, 18.30, 26.99, 31.52},
    {kAffixEngine, "T2-nospace", {367, 481, 93, 222}, 39.55, 0.43, 0.62, 0.51, 16.51, 24.30,
     27.73},
};

// full-scale lexicon and rule-set statistics
inline constexpr std::uint64_t kLexiconEntries = 23'223;
inline constexpr std::uint64_t kRuleCount = 4'293;
inline constexpr std::uint64_t kPrefixRuleCount = 1'812;
inline constexpr std::uint64_t kSuffixRuleCount = 2'481;
inline constexpr std::uint64_t kNounSuffixRuleCount = 913;

// full-scale corpus word list
inline constexpr std::uint64_t kCorpusUniqueForms = 2'376'405;
inline constexpr std::uint64_t kAdmittedWords = 265'216;

// full-scale morphological analysis scores (percent)
inline constexpr double kSegmentationAccuracy = 80.14;
inline constexpr double kPosAccuracy = 86.02;
inline constexpr double kVerbStemAccuracy = 63.75;
inline constexpr double kAnalysisCoverage = 27.16;
inline constexpr std::uint64_t kCoverageWordForms = 235'210;

// morphological gold set size at full scale
inline constexpr std::uint64_t kMorphGoldCases = 140;

}  // namespace sorani::reference
