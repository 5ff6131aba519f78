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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "soranispell/engine.hpp"
#include "soranispell/evaluation.hpp"
#include "soranispell/reference_scores.hpp"
#include "soranispell/script.hpp"
#include "support.hpp"

using namespace sorani;

namespace {

SpellTestCase make_case(std::string input, GoldLabel label,
                        std::vector<std::string> corrections = {}) {
  SpellTestCase c;
  c.input = std::move(input);
  c.label = label;
  c.corrections = std::move(corrections);
  return c;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("classify_case bucket mapping") {
  SpellTestCase correct = make_case("a", GoldLabel::correct);
  SpellTestCase incorrect = make_case("b", GoldLabel::incorrect, {"c"});
  CHECK(classify_case(correct, true) == Bucket::tp);
  CHECK(classify_case(correct, false) == Bucket::fp);
  CHECK(classify_case(incorrect, true) == Bucket::fn);
  CHECK(classify_case(incorrect, false) == Bucket::tn);
}

TEST_CASE("compute_metrics reproduces the reported score rows") {
  for (const auto& row : reference::kReportedRows) {
    CAPTURE(row.system);
    CAPTURE(row.testset);
    Metrics m = compute_metrics(row.counts);
    if (row.accuracy_percent) {
      REQUIRE(m.accuracy);
      CHECK(close(*m.accuracy * 100.0, *row.accuracy_percent, 0.005));
    }
    if (row.precision) {
      REQUIRE(m.precision);
      CHECK(close(*m.precision, *row.precision, 0.005));
    } else {
      CHECK(!m.precision);
    }
    if (row.recall) {
      REQUIRE(m.recall);
      CHECK(close(*m.recall, *row.recall, 0.005));
    } else {
      CHECK(!m.recall);
    }
    if (row.f1) {
      REQUIRE(m.f1);
      CHECK(close(*m.f1, *row.f1, 0.005));
    } else {
      CHECK(!m.f1);
    }
  }
}

TEST_CASE("rows without gold-correct cases have the whole P/R/F1 block undefined") {
  Metrics m = compute_metrics({0, 0, 178, 206});
  CHECK(!m.precision);
  CHECK(!m.recall);
  CHECK(!m.f1);
  REQUIRE(m.accuracy);
  CHECK(*m.accuracy == doctest::Approx(178.0 / 384.0));

  Metrics empty = compute_metrics({0, 0, 0, 0});
  CHECK(!empty.accuracy);
}

TEST_CASE("suggestion_hits on the three-case hand example") {
  std::vector<SpellTestCase> cases = {
      make_case("aa", GoldLabel::incorrect, {"ab"}),
      make_case("bb", GoldLabel::incorrect, {"bc"}),
      make_case("cc", GoldLabel::incorrect, {"cd"}),
  };
  Suggester suggester = [](const std::string& w) -> std::vector<std::string> {
    if (w == "aa") return {"ab", "x", "y"};       // hit at rank 1
    if (w == "bb") return {"x", "y", "bc", "z"};  // hit at rank 3
    return {"x", "y", "z"};                       // no hit
  };
  SuggestionHits hits = suggestion_hits(cases, suggester);
  CHECK(hits.denominator == 3);
  CHECK(hits.hits_at_1 == 1);
  CHECK(hits.hits_at_3 == 2);
  CHECK(hits.hits_anywhere == 2);
  CHECK(hits.sugg1() == doctest::Approx(1.0 / 3.0));
  CHECK(hits.sugg3() == doctest::Approx(2.0 / 3.0));
  CHECK(hits.sugg_all() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("suggestion_hits needs at least one incorrect case") {
  std::vector<SpellTestCase> cases = {make_case("a", GoldLabel::correct)};
  Suggester none = [](const std::string&) { return std::vector<std::string>{}; };
  CHECK_THROWS_AS(suggestion_hits(cases, none), NoIncorrectCasesError);
}

TEST_CASE("suggestion ranks are cumulative under fuzzing") {
  std::mt19937 rng(4096);
  std::uniform_int_distribution<int> count_dist(1, 12);
  std::uniform_int_distribution<int> len_dist(0, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int run = 0; run < 500; ++run) {
    std::vector<SpellTestCase> cases;
    int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
      std::string word = "w" + std::to_string(i);
      if (coin(rng)) {
        cases.push_back(make_case(word, GoldLabel::correct));
      } else {
        cases.push_back(make_case(word, GoldLabel::incorrect, {"g" + std::to_string(i)}));
      }
    }
    std::uint32_t salt = rng();
    Suggester suggester = [&, salt](const std::string& w) {
      std::mt19937 local(salt ^ std::hash<std::string>{}(w));
      std::vector<std::string> out;
      int len = std::uniform_int_distribution<int>(0, 8)(local);
      for (int k = 0; k < len; ++k) {
        if (std::uniform_int_distribution<int>(0, 3)(local) == 0 && w[0] == 'w') {
          out.push_back("g" + w.substr(1));
        } else {
          out.push_back("junk" + std::to_string(k));
        }
      }
      return out;
    };
    bool any_incorrect =
        std::any_of(cases.begin(), cases.end(), [](const auto& c) { return !c.gold_correct(); });
    if (!any_incorrect) {
      CHECK_THROWS_AS(suggestion_hits(cases, suggester), NoIncorrectCasesError);
      continue;
    }
    SuggestionHits hits = suggestion_hits(cases, suggester);
    CHECK(hits.hits_at_1 <= hits.hits_at_3);
    CHECK(hits.hits_at_3 <= hits.hits_anywhere);
    CHECK(hits.hits_anywhere <= hits.denominator);
    CHECK(hits.sugg1() <= hits.sugg3());
    CHECK(hits.sugg3() <= hits.sugg_all());
  }
  (void)len_dist;
}

TEST_CASE("evaluate_spell composes counts, metrics and hits") {
  std::vector<SpellTestCase> cases = {
      make_case("good", GoldLabel::correct),
      make_case("fine", GoldLabel::correct),
      make_case("bad", GoldLabel::incorrect, {"bade"}),
      make_case("worse", GoldLabel::incorrect, {"worst"}),
  };
  // checker accepts "good" and "bad"; suggester nails only "bad"
  Checker checker = [](const std::string& w) { return w == "good" || w == "bad"; };
  Suggester suggester = [](const std::string& w) -> std::vector<std::string> {
    if (w == "bad") return {"bade"};
    return {"nope"};
  };
  SpellReport report = evaluate_spell(cases, checker, suggester, "toy", "hand");
  CHECK(report.counts == ConfusionCounts{1, 1, 1, 1});
  Metrics m = report.metrics();
  CHECK(*m.accuracy == doctest::Approx(0.5));
  CHECK(*m.precision == doctest::Approx(0.5));
  CHECK(*m.recall == doctest::Approx(0.5));
  CHECK(*m.f1 == doctest::Approx(0.5));
  REQUIRE(report.hits);
  CHECK(report.hits->denominator == 2);
  CHECK(report.hits->hits_at_1 == 1);

  // invariant: the buckets partition the set
  CHECK(report.counts.total() == cases.size());
  CHECK(report.counts.tp + report.counts.fp == 2);
  CHECK(report.counts.tn + report.counts.fn == 2);
}

TEST_CASE("evaluate_spell drops exactly the spaced cases when asked") {
  std::vector<SpellTestCase> cases = {
      make_case("a", GoldLabel::correct),
      make_case("bc", GoldLabel::incorrect_spaced, {"b c"}),
      make_case("d", GoldLabel::incorrect, {"e"}),
  };
  Checker nope = [](const std::string&) { return false; };
  Suggester none = [](const std::string&) { return std::vector<std::string>{}; };
  SpellReport all = evaluate_spell(cases, nope, none, "s", "t", false);
  CHECK(all.counts.total() == 3);
  CHECK(all.hits->denominator == 2);
  SpellReport dropped = evaluate_spell(cases, nope, none, "s", "t", true);
  CHECK(dropped.counts.total() == 2);
  CHECK(dropped.hits->denominator == 1);
}

TEST_CASE("evaluate_spell accepts a spaced input only when every token checks") {
  std::vector<SpellTestCase> cases = {make_case("به هار", GoldLabel::correct)};
  Checker by_list = [](const std::string& w) {
    return w == normalize("به") || w == normalize("هار");
  };
  Suggester none = [](const std::string&) { return std::vector<std::string>{}; };
  SpellReport report = evaluate_spell(cases, by_list, none, "s", "t");
  CHECK(report.counts.tp == 1);  // the split goes undetected

  Checker half = [](const std::string& w) { return w == normalize("به"); };
  SpellReport rejected = evaluate_spell(cases, half, none, "s", "t");
  CHECK(rejected.counts.fp == 1);
}

TEST_CASE("evaluate_spell is deterministic") {
  auto cases = testsupport::fixture_spell_gold();
  const Engine& engine = testsupport::fixture_engine();
  Checker checker = [&](const std::string& w) { return engine.check(w); };
  Suggester suggester = [&](const std::string& w) {
    std::vector<std::string> out;
    for (const Suggestion& s : engine.suggest(w)) out.push_back(s.candidate);
    return out;
  };
  SpellReport a = evaluate_spell(cases, checker, suggester, "engine", "gold");
  SpellReport b = evaluate_spell(cases, checker, suggester, "engine", "gold");
  CHECK(a == b);
  CHECK(render_report(a, ReportFormat::tab_separated) ==
        render_report(b, ReportFormat::tab_separated));
}

TEST_CASE("evaluate_morph scores the glossed examples at one") {
  // the prefix of the first row is the ae vowel (U+06D5), written with
  // heh + ZWNJ in the source text
  std::istringstream gold(
      "ده‌که‌ون\tکەوتن\tV\tکەو\tکه‌و\tدە\tن\n"
      "که‌وتن\tکەوتن\tI\tکەوت\tکه‌وت\t\tن\n"
      "گرتیانن\tگرتن\tT\tگرت\tگرت\t\tیانن\n");
  std::vector<MorphTestCase> cases = parse_morph_testset(gold);
  REQUIRE(cases.size() == 3);
  const Engine& engine = testsupport::fixture_engine();
  CHECK(evaluate_morph(cases, engine, MorphAspect::segmentation).accuracy() == 1.0);
  CHECK(evaluate_morph(cases, engine, MorphAspect::pos).accuracy() == 1.0);
  CHECK(evaluate_morph(cases, engine, MorphAspect::stem).accuracy() == 1.0);
}

TEST_CASE("evaluate_morph with empty resources scores zero") {
  Engine empty;
  auto cases = testsupport::fixture_morph_gold();
  CHECK(evaluate_morph(cases, empty, MorphAspect::segmentation).accuracy() == 0.0);
  CHECK(evaluate_morph(cases, empty, MorphAspect::pos).accuracy() == 0.0);
  CHECK_THROWS_AS(evaluate_morph({}, empty, MorphAspect::segmentation), EmptyTestSetError);
}

TEST_CASE("morph test set rows must reconstruct their word") {
  std::istringstream bad("وشەکە\tوشە\tN\t\tوشە\t\tیە\n");
  CHECK_THROWS_AS(parse_morph_testset(bad), ParseError);
}

TEST_CASE("coverage counts distinct analyzable words") {
  const Engine& engine = testsupport::fixture_engine();
  std::vector<std::string> words = {"گرت", "گرت", "ژژژژ"};  // duplicate collapses
  CoverageScore score = coverage(words, engine);
  CHECK(score.total == 2);
  CHECK(score.analyzed == 1);

  Engine empty;
  CoverageScore zero = coverage({"گرت"}, empty);
  CHECK(zero.ratio() == 0.0);
  CHECK_THROWS_AS(coverage({}, engine), EmptyTestSetError);
}

TEST_CASE("render_report prints an em dash for undefined metrics") {
  SpellReport report;
  report.system_name = "baseline";
  report.testset_name = "T1";
  report.counts = {0, 0, 178, 206};
  std::string text = render_report(report, ReportFormat::tab_separated);
  // p, r, f1 and the three suggestion columns are all undefined here
  std::size_t dashes = 0;
  for (std::size_t pos = text.find("—"); pos != std::string::npos;
       pos = text.find("—", pos + 1)) {
    ++dashes;
  }
  CHECK(dashes == 6);
  CHECK(text.find("46.35") != std::string::npos);  // accuracy stays defined
  std::string table = render_report(report, ReportFormat::text_table);
  CHECK(table.find("—") != std::string::npos);
}

TEST_CASE("tab-separated rows follow the score-sheet column order") {
  SpellReport report;
  report.system_name = "baseline";
  report.testset_name = "T2";
  report.counts = {597, 251, 105, 441};
  report.hits = SuggestionHits{1, 2, 3, 10};
  std::string text = render_report(report, ReportFormat::tab_separated);
  std::istringstream lines(text);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "system\ttestset\ttp\tfp\ttn\tfn\tacc\tp\tr\tf1\tsugg1\tsugg3\tsugg_all");
  CHECK(row == "baseline\tT2\t597\t251\t105\t441\t50.36\t0.70\t0.58\t0.63\t10.00\t20.00\t30.00");
}

TEST_CASE("structured reports re-parse to the same report") {
  SpellReport report;
  report.system_name = "engine";
  report.testset_name = "gold";
  report.counts = {4, 1, 5, 0};
  report.hits = SuggestionHits{3, 3, 3, 5};
  std::string json_text = render_report(report, ReportFormat::structured);
  CHECK(spell_report_from_json(json_text) == report);

  report.hits = std::nullopt;
  CHECK(spell_report_from_json(render_report(report, ReportFormat::structured)) == report);
}

}  // TEST_SUITE
