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

#include "soranispell/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "soranispell/engine.hpp"
#include "soranispell/parse_error.hpp"
#include "soranispell/script.hpp"
#include "soranispell/tags.hpp"
#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

using nlohmann::json;

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(sep, pos);
    out.emplace_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string format_percent(double fraction_times_100) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", fraction_times_100);
  return buf;
}

std::string format_ratio(std::optional<double> value) {
  if (!value) return "—";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *value);
  return buf;
}

// column widths for the text table are computed over codepoints so the
// Arabic columns line up
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::string>& row, ReportFormat format) {
  if (format == ReportFormat::tab_separated) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out += '\t';
      out += header[i];
    }
    out += '\n';
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += row[i];
    }
    out += '\n';
    return out;
  }
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    widths[i] = std::max(codepoint_count(header[i]), codepoint_count(row[i]));
  }
  std::string out;
  for (const auto* cols : {&header, &row}) {
    for (std::size_t i = 0; i < cols->size(); ++i) {
      if (i) out += "  ";
      out += (*cols)[i];
      if (i + 1 < cols->size()) {
        out.append(widths[i] - codepoint_count((*cols)[i]), ' ');
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace

const char* to_string(MorphAspect aspect) {
  switch (aspect) {
    case MorphAspect::segmentation: return "segmentation";
    case MorphAspect::pos: return "pos";
    case MorphAspect::stem: return "stem";
  }
  return "?";
}

const char* to_string(GoldLabel label) {
  switch (label) {
    case GoldLabel::correct: return "correct";
    case GoldLabel::incorrect: return "incorrect";
    case GoldLabel::incorrect_spaced: return "incorrect_spaced";
  }
  return "?";
}

std::vector<SpellTestCase> parse_spell_testset(std::istream& in) {
  std::vector<SpellTestCase> cases;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() < 2) {
      throw ParseError(ParseErrorKind::bad_entry, lineno, "expected input TAB label");
    }
    SpellTestCase c;
    c.input = normalize(cols[0]);
    if (cols[1] == "correct") {
      c.label = GoldLabel::correct;
    } else if (cols[1] == "incorrect") {
      c.label = GoldLabel::incorrect;
    } else if (cols[1] == "incorrect_spaced") {
      c.label = GoldLabel::incorrect_spaced;
    } else {
      throw ParseError(ParseErrorKind::bad_field, lineno, "unknown label '" + cols[1] + "'");
    }
    if (cols.size() >= 3 && !cols[2].empty()) {
      for (const std::string& corr : split_on(cols[2], '|')) {
        if (!corr.empty()) c.corrections.push_back(normalize(corr));
      }
    }
    if (c.gold_correct() && !c.corrections.empty()) {
      throw ParseError(ParseErrorKind::bad_entry, lineno, "correct row carries corrections");
    }
    if (!c.gold_correct() && c.corrections.empty()) {
      throw ParseError(ParseErrorKind::bad_entry, lineno, "incorrect row without corrections");
    }
    if (c.label == GoldLabel::incorrect_spaced &&
        std::none_of(c.corrections.begin(), c.corrections.end(),
                     [](const std::string& s) { return s.find(' ') != std::string::npos; })) {
      throw ParseError(ParseErrorKind::bad_entry, lineno,
                       "incorrect_spaced row needs a spaced correction");
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

Bucket classify_case(const SpellTestCase& c, bool accepted) {
  if (c.gold_correct()) return accepted ? Bucket::tp : Bucket::fp;
  return accepted ? Bucket::fn : Bucket::tn;
}

Metrics compute_metrics(const ConfusionCounts& c) {
  Metrics m;
  if (c.total() > 0) {
    m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
  }
  // with no gold-correct cases the precision/recall/F1 block is undefined
  if (c.tp + c.fp > 0) {
    m.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
    if (c.tp + c.fn > 0) {
      m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    }
    if (m.precision && m.recall && (*m.precision + *m.recall) > 0) {
      m.f1 = 2 * *m.precision * *m.recall / (*m.precision + *m.recall);
    }
  }
  return m;
}

SuggestionHits suggestion_hits(const std::vector<SpellTestCase>& cases,
                               const Suggester& suggester) {
  SuggestionHits hits;
  for (const SpellTestCase& c : cases) {
    if (c.gold_correct()) continue;
    ++hits.denominator;
    std::vector<std::string> suggestions = suggester(c.input);
    std::size_t rank = 0;
    bool hit1 = false, hit3 = false, hit_any = false;
    for (const std::string& s : suggestions) {
      ++rank;
      std::string norm = normalize(s);
      if (std::find(c.corrections.begin(), c.corrections.end(), norm) == c.corrections.end()) {
        continue;
      }
      hit_any = true;
      if (rank <= 3) hit3 = true;
      if (rank == 1) hit1 = true;
      break;
    }
    hits.hits_at_1 += hit1 ? 1 : 0;
    hits.hits_at_3 += hit3 ? 1 : 0;
    hits.hits_anywhere += hit_any ? 1 : 0;
  }
  if (hits.denominator == 0) throw NoIncorrectCasesError();
  return hits;
}

SpellReport evaluate_spell(const std::vector<SpellTestCase>& cases, const Checker& checker,
                           const Suggester& suggester, std::string system_name,
                           std::string testset_name, bool drop_spaced) {
  std::vector<SpellTestCase> kept;
  kept.reserve(cases.size());
  for (const SpellTestCase& c : cases) {
    if (drop_spaced && c.label == GoldLabel::incorrect_spaced) continue;
    kept.push_back(c);
  }

  SpellReport report;
  report.system_name = std::move(system_name);
  report.testset_name = std::move(testset_name);
  for (const SpellTestCase& c : kept) {
    // a multi-token input is accepted when every token checks; a spaced
    // input with valid halves therefore goes undetected, like the checker
    // it models
    std::vector<std::string> tokens = tokenize(c.input);
    bool accepted = !tokens.empty();
    for (const std::string& t : tokens) {
      if (!checker(t)) {
        accepted = false;
        break;
      }
    }
    switch (classify_case(c, accepted)) {
      case Bucket::tp: ++report.counts.tp; break;
      case Bucket::fp: ++report.counts.fp; break;
      case Bucket::tn: ++report.counts.tn; break;
      case Bucket::fn: ++report.counts.fn; break;
    }
  }
  try {
    report.hits = suggestion_hits(kept, suggester);
  } catch (const NoIncorrectCasesError&) {
    report.hits = std::nullopt;
  }
  return report;
}

std::vector<MorphTestCase> parse_morph_testset(std::istream& in) {
  std::vector<MorphTestCase> cases;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_on(line, '\t');
    if (cols.size() < 7) {
      throw ParseError(ParseErrorKind::bad_entry, lineno,
                       "expected word/lemma/pos/stem/base/prefixes/suffixes columns");
    }
    MorphTestCase c;
    c.word = normalize(cols[0]);
    c.lemma = normalize(cols[1]);
    c.pos_tags = decode_utf8(cols[2]);
    if (!cols[3].empty()) c.stem = normalize(cols[3]);
    c.base = normalize(cols[4]);
    std::string reconstructed;
    if (!cols[5].empty()) {
      for (const std::string& p : split_on(cols[5], '+')) {
        c.prefixes.push_back(normalize(p));
        reconstructed += c.prefixes.back();
      }
    }
    reconstructed += c.base;
    if (!cols[6].empty()) {
      for (const std::string& s : split_on(cols[6], '+')) {
        c.suffixes.push_back(normalize(s));
        reconstructed += c.suffixes.back();
      }
    }
    if (cols.size() >= 8) c.note = cols[7];
    if (reconstructed != c.word) {
      throw ParseError(ParseErrorKind::bad_entry, lineno,
                       "segmentation does not reconstruct the word");
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

MorphScore evaluate_morph(const std::vector<MorphTestCase>& cases, const Engine& engine,
                          MorphAspect aspect) {
  std::vector<const MorphTestCase*> kept;
  for (const MorphTestCase& c : cases) {
    if (aspect == MorphAspect::stem) {
      bool verb = std::any_of(c.pos_tags.begin(), c.pos_tags.end(),
                              [](char32_t t) { return TagSchema::is_verb_category(t); });
      if (!verb) continue;
    }
    kept.push_back(&c);
  }
  if (kept.empty()) throw EmptyTestSetError();

  MorphScore score;
  score.total = kept.size();
  for (const MorphTestCase* c : kept) {
    bool correct = false;
    switch (aspect) {
      case MorphAspect::segmentation: {
        std::string gold_prefix;
        for (const std::string& p : c->prefixes) gold_prefix += p;
        std::string gold_suffix;
        for (const std::string& s : c->suffixes) gold_suffix += s;
        for (const Analysis& a : engine.analyze(c->word)) {
          if (a.base->surface == c->base && a.prefix_text() == gold_prefix &&
              a.suffix_text() == gold_suffix) {
            correct = true;
            break;
          }
        }
        break;
      }
      case MorphAspect::pos: {
        for (const Analysis& a : engine.analyze(c->word)) {
          if (a.pos_tag && c->pos_tags.find(*a.pos_tag) != std::u32string::npos) {
            correct = true;
            break;
          }
        }
        break;
      }
      case MorphAspect::stem: {
        if (c->stem) {
          std::vector<std::string> stems = engine.stem(c->word);
          correct = std::find(stems.begin(), stems.end(), *c->stem) != stems.end();
        }
        break;
      }
    }
    if (correct) ++score.correct;
  }
  return score;
}

CoverageScore coverage(const std::vector<std::string>& words, const Engine& engine) {
  std::set<std::string> distinct;
  for (const std::string& w : words) {
    std::string n = normalize(w);
    if (!n.empty()) distinct.insert(std::move(n));
  }
  if (distinct.empty()) throw EmptyTestSetError();
  CoverageScore score;
  score.total = distinct.size();
  for (const std::string& w : distinct) {
    if (engine.check(w)) ++score.analyzed;
  }
  return score;
}

std::string render_report(const SpellReport& report, ReportFormat format) {
  Metrics m = report.metrics();
  std::vector<std::string> header = {"system",  "testset", "tp",    "fp",    "tn",
                                     "fn",      "acc",     "p",     "r",     "f1",
                                     "sugg1",   "sugg3",   "sugg_all"};
  std::vector<std::string> row = {
      report.system_name,
      report.testset_name,
      std::to_string(report.counts.tp),
      std::to_string(report.counts.fp),
      std::to_string(report.counts.tn),
      std::to_string(report.counts.fn),
      m.accuracy ? format_percent(*m.accuracy * 100.0) : "—",
      format_ratio(m.precision),
      format_ratio(m.recall),
      format_ratio(m.f1),
      report.hits ? format_percent(report.hits->sugg1() * 100.0) : "—",
      report.hits ? format_percent(report.hits->sugg3() * 100.0) : "—",
      report.hits ? format_percent(report.hits->sugg_all() * 100.0) : "—",
  };

  if (format == ReportFormat::structured) {
    json j;
    j["system"] = report.system_name;
    j["testset"] = report.testset_name;
    j["counts"] = {{"tp", report.counts.tp},
                   {"fp", report.counts.fp},
                   {"tn", report.counts.tn},
                   {"fn", report.counts.fn}};
    json metrics = json::object();
    metrics["accuracy"] = m.accuracy ? json(*m.accuracy) : json(nullptr);
    metrics["precision"] = m.precision ? json(*m.precision) : json(nullptr);
    metrics["recall"] = m.recall ? json(*m.recall) : json(nullptr);
    metrics["f1"] = m.f1 ? json(*m.f1) : json(nullptr);
    j["metrics"] = metrics;
    if (report.hits) {
      j["suggestions"] = {{"hits_at_1", report.hits->hits_at_1},
                          {"hits_at_3", report.hits->hits_at_3},
                          {"hits_anywhere", report.hits->hits_anywhere},
                          {"denominator", report.hits->denominator}};
    } else {
      j["suggestions"] = nullptr;
    }
    return j.dump(2) + "\n";
  }
  return render_table(header, row, format);
}

std::string render_report(const MorphScore& score, MorphAspect aspect, std::string_view testset,
                          ReportFormat format) {
  if (format == ReportFormat::structured) {
    json j;
    j["testset"] = std::string(testset);
    j["aspect"] = to_string(aspect);
    j["correct"] = score.correct;
    j["total"] = score.total;
    j["accuracy_percent"] = score.accuracy() * 100.0;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = {"testset", "aspect", "correct", "total", "accuracy"};
  std::vector<std::string> row = {std::string(testset), to_string(aspect),
                                  std::to_string(score.correct), std::to_string(score.total),
                                  format_percent(score.accuracy() * 100.0)};
  return render_table(header, row, format);
}

std::string render_report(const CoverageScore& score, std::string_view testset,
                          ReportFormat format) {
  if (format == ReportFormat::structured) {
    json j;
    j["testset"] = std::string(testset);
    j["analyzed"] = score.analyzed;
    j["total"] = score.total;
    j["coverage_percent"] = score.ratio() * 100.0;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = {"testset", "analyzed", "total", "coverage"};
  std::vector<std::string> row = {std::string(testset), std::to_string(score.analyzed),
                                  std::to_string(score.total),
                                  format_percent(score.ratio() * 100.0)};
  return render_table(header, row, format);
}

SpellReport spell_report_from_json(std::string_view json_text) {
  json j = json::parse(json_text);
  SpellReport report;
  report.system_name = j.at("system").get<std::string>();
  report.testset_name = j.at("testset").get<std::string>();
  const json& c = j.at("counts");
  report.counts.tp = c.at("tp").get<std::uint64_t>();
  report.counts.fp = c.at("fp").get<std::uint64_t>();
  report.counts.tn = c.at("tn").get<std::uint64_t>();
  report.counts.fn = c.at("fn").get<std::uint64_t>();
  if (j.contains("suggestions") && !j.at("suggestions").is_null()) {
    const json& s = j.at("suggestions");
    SuggestionHits hits;
    hits.hits_at_1 = s.at("hits_at_1").get<std::uint64_t>();
    hits.hits_at_3 = s.at("hits_at_3").get<std::uint64_t>();
    hits.hits_anywhere = s.at("hits_anywhere").get<std::uint64_t>();
    hits.denominator = s.at("denominator").get<std::uint64_t>();
    report.hits = hits;
  }
  return report;
}

}  // namespace sorani
