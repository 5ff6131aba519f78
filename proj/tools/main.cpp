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

// soranispell: Sorani Kurdish spell checking, morphological analysis and
// evaluation from the command line.
//
// Exit codes: 0 success (all words correct), 1 spelling errors or
// diagnostics found, 2 usage error, 3 resource or I/O error, 4 network
// error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soranispell/baseline.hpp"
#include "soranispell/engine.hpp"
#include "soranispell/evaluation.hpp"
#include "soranispell/lexbuild.hpp"
#include "soranispell/parse_error.hpp"
#include "soranispell/script.hpp"
#include "soranispell/tags.hpp"
#include "soranispell/unicode.hpp"

namespace {

using namespace sorani;

constexpr int kExitOk = 0;
constexpr int kExitSpellingErrors = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitNetwork = 4;

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string dict_path;
  std::string aff_path;
  std::string baseline_path;
  std::string translit_path;
  int max_distance = 2;
  int max_results = 10;
  bool enable_splits = false;
  std::string format = "text";

  ReportFormat report_format() const {
    if (format == "tsv") return ReportFormat::tab_separated;
    if (format == "json") return ReportFormat::structured;
    return ReportFormat::text_table;
  }
  SuggestOptions suggest_options() const {
    return SuggestOptions{max_distance, max_results, enable_splits};
  }
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot open '" + path + "'");
  return in;
}

Engine load_engine(const CliConfig& cfg) {
  if (cfg.dict_path.empty() || cfg.aff_path.empty()) {
    throw UsageError("this command needs --dict and --aff");
  }
  std::ifstream dic = open_or_throw(cfg.dict_path);
  std::ifstream aff = open_or_throw(cfg.aff_path);
  Dictionary dict;
  AffixRuleSet rules;
  try {
    dict = parse_dic(dic);
  } catch (const ParseError& e) {
    throw ResourceError(cfg.dict_path + ": " + e.what());
  }
  try {
    rules = parse_aff(aff);
  } catch (const ParseError& e) {
    throw ResourceError(cfg.aff_path + ": " + e.what());
  }
  Engine engine(std::move(dict), std::move(rules));
  for (const std::string& diagnostic : engine.load_diagnostics()) {
    std::cerr << "warning: " << diagnostic << "\n";
  }
  return engine;
}

FrequencyList load_baseline(const CliConfig& cfg, std::uint64_t min_freq) {
  if (cfg.baseline_path.empty()) {
    throw UsageError("this command needs --baseline FILE");
  }
  std::ifstream in = open_or_throw(cfg.baseline_path);
  try {
    return load_frequency_list(in, min_freq);
  } catch (const ParseError& e) {
    throw ResourceError(cfg.baseline_path + ": " + e.what());
  }
}

TransliterationTable load_table(const CliConfig& cfg) {
  if (cfg.translit_path.empty()) return TransliterationTable::standard();
  std::ifstream in = open_or_throw(cfg.translit_path);
  try {
    return parse_translit_table(in);
  } catch (const ParseError& e) {
    throw ResourceError(cfg.translit_path + ": " + e.what());
  }
}

std::vector<std::string> read_word_list(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    for (std::string& token : tokenize(line)) words.push_back(std::move(token));
  }
  return words;
}

std::string file_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

int run_check(const CliConfig& cfg, const std::vector<std::string>& words) {
  Engine engine = load_engine(cfg);
  bool all_correct = true;
  for (const std::string& word : words) {
    bool ok = engine.check(word);
    all_correct = all_correct && ok;
    std::cout << word << '\t' << (ok ? "correct" : "incorrect") << '\n';
  }
  return all_correct ? kExitOk : kExitSpellingErrors;
}

int run_suggest(const CliConfig& cfg, const std::string& word) {
  Engine engine = load_engine(cfg);
  for (const Suggestion& s : engine.suggest(word, cfg.suggest_options())) {
    std::cout << s.candidate << '\t' << s.distance << '\n';
  }
  return kExitOk;
}

int run_analyze(const CliConfig& cfg, const std::string& word) {
  Engine engine = load_engine(cfg);
  std::vector<Analysis> analyses = engine.analyze(word);
  for (const Analysis& a : analyses) {
    std::string morphemes;
    for (std::size_t i = 0; i < a.morphemes.size(); ++i) {
      if (i) morphemes += '+';
      morphemes += a.morphemes[i];
    }
    std::cout << morphemes << '\t' << (a.pos_tag ? encode_utf8(*a.pos_tag) : "-") << '\t'
              << (a.stem ? *a.stem : "-") << '\n';
  }
  return analyses.empty() ? kExitSpellingErrors : kExitOk;
}

int run_stem(const CliConfig& cfg, const std::string& word) {
  Engine engine = load_engine(cfg);
  for (const std::string& stem : engine.stem(word)) std::cout << stem << '\n';
  return kExitOk;
}

int run_generate(const CliConfig& cfg, const std::string& lemma) {
  Engine engine = load_engine(cfg);
  std::string surface = normalize(lemma);
  auto indices = engine.dictionary().find(surface);
  if (indices.empty()) {
    std::cerr << "error: '" << lemma << "' is not in the lexicon\n";
    return kExitSpellingErrors;
  }
  std::set<std::string> forms;
  try {
    for (std::uint32_t idx : indices) {
      std::set<std::string> f = engine.generate(engine.dictionary().entries()[idx]);
      forms.insert(f.begin(), f.end());
    }
  } catch (const UnresolvedFlagError& e) {
    throw ResourceError(e.what());
  }
  for (const std::string& form : forms) std::cout << form << '\n';
  return kExitOk;
}

int run_transliterate(const CliConfig& cfg, const std::string& direction,
                      const std::vector<std::string>& texts) {
  Direction dir;
  if (direction == "latin-arabic") {
    dir = Direction::latin_to_arabic;
  } else if (direction == "arabic-latin") {
    dir = Direction::arabic_to_latin;
  } else {
    throw UsageError("--direction must be latin-arabic or arabic-latin");
  }
  TransliterationTable table = load_table(cfg);
  if (!texts.empty()) {
    for (const std::string& text : texts) {
      std::cout << transliterate(text, dir, table) << '\n';
    }
  } else {
    std::string line;
    while (std::getline(std::cin, line)) {
      std::cout << transliterate(line, dir, table) << '\n';
    }
  }
  return kExitOk;
}

int run_baseline_build(const std::vector<std::string>& corpora, const std::string& out_path,
                       std::uint64_t min_freq) {
  FrequencyList merged;
  merged.min_freq = min_freq;
  for (const std::string& path : corpora) {
    std::ifstream in = open_or_throw(path);
    FrequencyList fl = build_frequency_list(in, min_freq);
    for (const auto& [word, count] : fl.counts) merged.counts[word] += count;
  }
  std::ofstream out(out_path);
  if (!out) throw ResourceError("cannot write '" + out_path + "'");
  save_frequency_list(merged, out);
  std::cerr << merged.counts.size() << " unique words, " << merged.admitted_size()
            << " admitted at min_freq=" << min_freq << "\n";
  return kExitOk;
}

int run_baseline_check(const CliConfig& cfg, std::uint64_t min_freq,
                       const std::vector<std::string>& words) {
  FrequencyList fl = load_baseline(cfg, min_freq);
  bool all_correct = true;
  for (const std::string& word : words) {
    bool ok = baseline_check(fl, word);
    all_correct = all_correct && ok;
    std::cout << word << '\t' << (ok ? "correct" : "incorrect") << '\n';
  }
  return all_correct ? kExitOk : kExitSpellingErrors;
}

int run_baseline_suggest(const CliConfig& cfg, std::uint64_t min_freq, const std::string& word,
                         std::size_t k) {
  FrequencyList fl = load_baseline(cfg, min_freq);
  for (const Suggestion& s : baseline_suggest(fl, word, k)) {
    std::cout << s.candidate << '\t' << s.distance << '\n';
  }
  return kExitOk;
}

int run_eval_spell(const CliConfig& cfg, const std::string& testset_path,
                   const std::string& system, bool drop_spaced, std::string name,
                   std::uint64_t min_freq) {
  std::ifstream ts = open_or_throw(testset_path);
  std::vector<SpellTestCase> cases;
  try {
    cases = parse_spell_testset(ts);
  } catch (const ParseError& e) {
    throw ResourceError(testset_path + ": " + e.what());
  }
  if (name.empty()) name = file_stem(testset_path);

  SpellReport report;
  if (system == "engine") {
    Engine engine = load_engine(cfg);
    SuggestOptions opts = cfg.suggest_options();
    Checker checker = [&engine](const std::string& w) { return engine.check(w); };
    Suggester suggester = [&engine, opts](const std::string& w) {
      std::vector<std::string> out;
      for (const Suggestion& s : engine.suggest(w, opts)) out.push_back(s.candidate);
      return out;
    };
    report = evaluate_spell(cases, checker, suggester, "engine", name, drop_spaced);
  } else if (system == "baseline") {
    FrequencyList fl = load_baseline(cfg, min_freq);
    std::size_t k = cfg.max_results < 0 ? 10 : static_cast<std::size_t>(cfg.max_results);
    Checker checker = [&fl](const std::string& w) { return baseline_check(fl, w); };
    Suggester suggester = [&fl, k](const std::string& w) {
      std::vector<std::string> out;
      for (const Suggestion& s : baseline_suggest(fl, w, k)) out.push_back(s.candidate);
      return out;
    };
    report = evaluate_spell(cases, checker, suggester, "baseline", name, drop_spaced);
  } else {
    throw UsageError("--system must be engine or baseline");
  }
  std::cout << render_report(report, cfg.report_format());
  return kExitOk;
}

int run_eval_morph(const CliConfig& cfg, const std::string& testset_path,
                   const std::string& aspect_name) {
  MorphAspect aspect;
  if (aspect_name == "segmentation") {
    aspect = MorphAspect::segmentation;
  } else if (aspect_name == "pos") {
    aspect = MorphAspect::pos;
  } else if (aspect_name == "stem") {
    aspect = MorphAspect::stem;
  } else {
    throw UsageError("--aspect must be segmentation, pos or stem");
  }
  std::ifstream ts = open_or_throw(testset_path);
  std::vector<MorphTestCase> cases;
  try {
    cases = parse_morph_testset(ts);
  } catch (const ParseError& e) {
    throw ResourceError(testset_path + ": " + e.what());
  }
  Engine engine = load_engine(cfg);
  MorphScore score;
  try {
    score = evaluate_morph(cases, engine, aspect);
  } catch (const EmptyTestSetError& e) {
    throw ResourceError(e.what());
  }
  std::cout << render_report(score, aspect, file_stem(testset_path), cfg.report_format());
  return kExitOk;
}

int run_eval_coverage(const CliConfig& cfg, const std::string& wordlist_path) {
  std::vector<std::string> words = read_word_list(wordlist_path);
  Engine engine = load_engine(cfg);
  CoverageScore score;
  try {
    score = coverage(words, engine);
  } catch (const EmptyTestSetError& e) {
    throw ResourceError(e.what());
  }
  std::cout << render_report(score, file_stem(wordlist_path), cfg.report_format());
  return kExitOk;
}

int run_lexicon_validate(const CliConfig& cfg) {
  if (cfg.dict_path.empty()) throw UsageError("lexicon validate needs --dict");
  std::ifstream dic = open_or_throw(cfg.dict_path);
  Dictionary dict;
  try {
    dict = parse_dic(dic);
  } catch (const ParseError& e) {
    throw ResourceError(cfg.dict_path + ": " + e.what());
  }
  std::size_t problems = 0;
  for (const DicEntry& entry : dict.entries()) {
    for (const Diagnostic& d : validate_entry(entry)) {
      std::cout << d.surface << '\t' << to_string(d.kind) << '\t' << d.message << '\n';
      ++problems;
    }
  }
  if (!cfg.aff_path.empty()) {
    std::ifstream aff = open_or_throw(cfg.aff_path);
    AffixRuleSet rules;
    try {
      rules = parse_aff(aff);
    } catch (const ParseError& e) {
      throw ResourceError(cfg.aff_path + ": " + e.what());
    }
    for (const std::string& message : unresolved_flag_report(dict, rules)) {
      std::cout << "-\tunresolved flag\t" << message << '\n';
      ++problems;
    }
  }
  std::cerr << dict.size() << " entries, " << problems << " diagnostics\n";
  return problems == 0 ? kExitOk : kExitSpellingErrors;
}

int run_lexicon_merge(const CliConfig& cfg, const std::vector<std::string>& latin_files,
                      const std::vector<std::string>& arabic_files, const std::string& flags,
                      const std::string& po, const std::string& is, bool mark_review,
                      const std::string& out_path) {
  if (latin_files.empty() && arabic_files.empty()) {
    throw UsageError("lexicon merge needs at least one --latin or --arabic word list");
  }
  std::u32string default_flags = decode_utf8(flags);
  std::vector<WordSource> sources;
  auto add_sources = [&](const std::vector<std::string>& files, SourceScript script) {
    for (const std::string& path : files) {
      WordSource source;
      source.words = read_word_list(path);
      source.script = script;
      source.default_flags = default_flags;
      if (!po.empty()) source.default_po = po;
      if (!is.empty()) source.default_is = is;
      source.mark_needs_review = mark_review;
      sources.push_back(std::move(source));
    }
  };
  add_sources(latin_files, SourceScript::latin);
  add_sources(arabic_files, SourceScript::arabic);

  Dictionary merged = merge_sources(sources, load_table(cfg));
  std::ofstream out(out_path);
  if (!out) throw ResourceError("cannot write '" + out_path + "'");
  out << serialize_dic(merged);
  std::cerr << merged.size() << " entries written to " << out_path << "\n";
  return kExitOk;
}

int run_wikidata_query(const std::string& concept_id, int limit, bool fetch,
                       std::string endpoint) {
  std::string query;
  try {
    query = build_sparql_query(concept_id, limit);
  } catch (const BadConceptIdError& e) {
    throw UsageError(e.what());
  }
  if (!fetch) {
    std::cout << query;
    return kExitOk;
  }
  if (endpoint.empty()) {
    if (const char* env = std::getenv("SORANISPELL_SPARQL_ENDPOINT")) endpoint = env;
  }
  if (endpoint.empty()) {
    throw UsageError("--fetch needs --endpoint or SORANISPELL_SPARQL_ENDPOINT");
  }
  std::unique_ptr<SparqlTransport> transport = make_http_transport();
  for (const std::string& label : fetch_labels(*transport, endpoint, query)) {
    std::cout << label << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sorani Kurdish spell checker and morphological analyzer"};
  app.set_version_flag("--version", "soranispell 0.1.0");
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("-d,--dict", cfg.dict_path, "dictionary (.dic) path");
  app.add_option("-a,--aff", cfg.aff_path, "affix table (.aff) path");
  app.add_option("--baseline", cfg.baseline_path, "frequency list path");
  app.add_option("--translit", cfg.translit_path, "transliteration table path");
  app.add_option("--max-distance", cfg.max_distance, "suggestion edit-distance cap")
      ->check(CLI::Range(0, 4));
  app.add_option("--max-results", cfg.max_results, "suggestion list cap");
  app.add_flag("--enable-splits", cfg.enable_splits, "also suggest two-word splits");
  app.add_option("-f,--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}));

  std::function<int()> action;

  // check WORD...
  std::vector<std::string> check_words;
  CLI::App* check = app.add_subcommand("check", "check words against the lexicon");
  check->add_option("words", check_words, "words to check")->required();
  check->callback([&] { action = [&] { return run_check(cfg, check_words); }; });

  // suggest WORD
  std::string suggest_word;
  CLI::App* suggest = app.add_subcommand("suggest", "rank corrections for a word");
  suggest->add_option("word", suggest_word, "word to correct")->required();
  suggest->callback([&] { action = [&] { return run_suggest(cfg, suggest_word); }; });

  // analyze WORD
  std::string analyze_word;
  CLI::App* analyze = app.add_subcommand("analyze", "morphological analyses of a word");
  analyze->add_option("word", analyze_word, "word to analyze")->required();
  analyze->callback([&] { action = [&] { return run_analyze(cfg, analyze_word); }; });

  // stem WORD
  std::string stem_word;
  CLI::App* stem = app.add_subcommand("stem", "verb stems of a word");
  stem->add_option("word", stem_word, "word to stem")->required();
  stem->callback([&] { action = [&] { return run_stem(cfg, stem_word); }; });

  // generate LEMMA
  std::string generate_lemma;
  CLI::App* generate = app.add_subcommand("generate", "all surface forms of a lexicon entry");
  generate->add_option("lemma", generate_lemma, "lexicon surface")->required();
  generate->callback([&] { action = [&] { return run_generate(cfg, generate_lemma); }; });

  // transliterate
  std::string direction;
  std::vector<std::string> translit_texts;
  CLI::App* translit = app.add_subcommand("transliterate", "convert between scripts");
  translit->add_option("--direction", direction, "latin-arabic or arabic-latin")->required();
  translit->add_option("text", translit_texts, "text (stdin when omitted)");
  translit->callback(
      [&] { action = [&] { return run_transliterate(cfg, direction, translit_texts); }; });

  // baseline build|check|suggest
  CLI::App* baseline = app.add_subcommand("baseline", "frequency-list spell checker");
  baseline->require_subcommand(1);
  std::vector<std::string> corpus_paths;
  std::string freq_out;
  std::uint64_t min_freq = 10;
  CLI::App* bbuild = baseline->add_subcommand("build", "count a corpus into a frequency list");
  bbuild->add_option("corpus", corpus_paths, "corpus text files")->required();
  bbuild->add_option("-o,--output", freq_out, "frequency list output path")->required();
  bbuild->add_option("--min-freq", min_freq, "inclusion threshold");
  bbuild->callback(
      [&] { action = [&] { return run_baseline_build(corpus_paths, freq_out, min_freq); }; });

  std::vector<std::string> bcheck_words;
  CLI::App* bcheck = baseline->add_subcommand("check", "check words against the list");
  bcheck->add_option("words", bcheck_words, "words to check")->required();
  bcheck->add_option("--min-freq", min_freq, "inclusion threshold");
  bcheck->callback([&] { action = [&] { return run_baseline_check(cfg, min_freq, bcheck_words); }; });

  std::string bsuggest_word;
  std::size_t bsuggest_k = 10;
  CLI::App* bsuggest = baseline->add_subcommand("suggest", "closest admitted words");
  bsuggest->add_option("word", bsuggest_word, "word to correct")->required();
  bsuggest->add_option("-k,--results", bsuggest_k, "number of suggestions");
  bsuggest->add_option("--min-freq", min_freq, "inclusion threshold");
  bsuggest->callback(
      [&] { action = [&] { return run_baseline_suggest(cfg, min_freq, bsuggest_word, bsuggest_k); }; });

  // eval spell|morph|coverage
  CLI::App* eval = app.add_subcommand("eval", "run a test set");
  eval->require_subcommand(1);
  std::string testset_path, eval_system = "engine", eval_name;
  bool drop_spaced = false;
  CLI::App* espell = eval->add_subcommand("spell", "confusion counts and suggestion ranks");
  espell->add_option("testset", testset_path, "spell test set (tsv)")->required();
  espell->add_option("--system", eval_system, "engine or baseline");
  espell->add_option("--name", eval_name, "test-set name for the report");
  espell->add_flag("--drop-spaced", drop_spaced, "drop merged-word (incorrect_spaced) cases");
  espell->add_option("--min-freq", min_freq, "baseline inclusion threshold");
  espell->callback([&] {
    action = [&] {
      return run_eval_spell(cfg, testset_path, eval_system, drop_spaced, eval_name, min_freq);
    };
  });

  std::string morph_path, aspect = "segmentation";
  CLI::App* emorph = eval->add_subcommand("morph", "morphological analysis accuracy");
  emorph->add_option("testset", morph_path, "morph test set (tsv)")->required();
  emorph->add_option("--aspect", aspect, "segmentation, pos or stem");
  emorph->callback([&] { action = [&] { return run_eval_morph(cfg, morph_path, aspect); }; });

  std::string wordlist_path;
  CLI::App* ecov = eval->add_subcommand("coverage", "fraction of words with an analysis");
  ecov->add_option("wordlist", wordlist_path, "word list file")->required();
  ecov->callback([&] { action = [&] { return run_eval_coverage(cfg, wordlist_path); }; });

  // lexicon validate|merge|wikidata-query
  CLI::App* lexicon = app.add_subcommand("lexicon", "lexicon construction tools");
  lexicon->require_subcommand(1);
  CLI::App* lvalidate = lexicon->add_subcommand("validate", "entry diagnostics");
  lvalidate->callback([&] { action = [&] { return run_lexicon_validate(cfg); }; });

  std::vector<std::string> latin_files, arabic_files;
  std::string merge_flags, merge_po, merge_is, merge_out;
  bool no_review = false;
  CLI::App* lmerge = lexicon->add_subcommand("merge", "merge word lists into a .dic draft");
  lmerge->add_option("--latin", latin_files, "Latin-script word list");
  lmerge->add_option("--arabic", arabic_files, "Arabic-script word list");
  lmerge->add_option("--flags", merge_flags, "default flags for merged entries");
  lmerge->add_option("--po", merge_po, "default po: tag, e.g. proper_name");
  lmerge->add_option("--is", merge_is, "default is: subclass");
  lmerge->add_flag("--no-review", no_review, "do not mark entries needs_review");
  lmerge->add_option("-o,--output", merge_out, "output .dic path")->required();
  lmerge->callback([&] {
    action = [&] {
      return run_lexicon_merge(cfg, latin_files, arabic_files, merge_flags, merge_po, merge_is,
                               !no_review, merge_out);
    };
  });

  std::string concept_id, endpoint;
  int limit = 100;
  bool fetch = false;
  CLI::App* lquery = lexicon->add_subcommand("wikidata-query", "label-extraction query");
  lquery->add_option("concept", concept_id, "concept id, e.g. Q515")->required();
  lquery->add_option("--limit", limit, "LIMIT clause value");
  lquery->add_flag("--fetch", fetch, "execute the query and print the labels");
  lquery->add_option("--endpoint", endpoint, "query endpoint URL");
  lquery->callback(
      [&] { action = [&] { return run_wikidata_query(concept_id, limit, fetch, endpoint); }; });

  // global options may follow the subcommand name
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EndpointUnreachableError& e) {
    std::cerr << "network error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const MalformedResponseError& e) {
    std::cerr << "network error: " << e.what() << "\n";
    return kExitNetwork;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}
