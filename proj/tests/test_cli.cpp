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

// Drives the installed command-line binary end to end over the shipped
// fixtures: subcommands, exit codes, output formats and determinism.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "soranispell/evaluation.hpp"
#include "soranispell/script.hpp"
#include "support.hpp"

#ifndef SORANISPELL_CLI_PATH
#define SORANISPELL_CLI_PATH "soranispell"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

CommandResult run(const std::string& args) {
  std::string command = std::string(SORANISPELL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string resources() {
  return "-d " + testsupport::data_path("sorani.dic") + " -a " +
         testsupport::data_path("sorani.aff");
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check verdicts and exit codes") {
  CommandResult ok = run("check گرتیمینەوە " + resources());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output == "گرتیمینەوە\tcorrect\n");

  CommandResult bad = run("check گرتیمینەوە مرج " + resources());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("مرج\tincorrect") != std::string::npos);
}

TEST_CASE("missing resources map to the usage and resource exit codes") {
  CHECK(run("check مرج").exit_code == 2);                                   // no --dict/--aff
  CHECK(run("check مرج -d /nonexistent.dic -a /nonexistent.aff").exit_code == 3);
  CHECK(run("definitely-not-a-subcommand").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("suggest, analyze, stem and generate outputs") {
  CommandResult suggest = run("suggest مرج " + resources());
  CHECK(suggest.exit_code == 0);
  CHECK(suggest.output.substr(0, suggest.output.find('\n')) == "مهرج\t1");

  CommandResult analyze = run("analyze ده‌که‌ون " + resources());
  CHECK(analyze.exit_code == 0);
  CHECK(analyze.output == "دە+کەو+ن\tV\tکەو\n");
  CHECK(run("analyze ژژژژ " + resources()).exit_code == 1);

  CommandResult stem = run("stem گرتیمینەوە " + resources());
  CHECK(stem.output == "گرت\n");

  CommandResult generate = run("generate گرت " + resources());
  CHECK(generate.exit_code == 0);
  CHECK(generate.output.find("دایشیمنەدەگرتینەوە\n") != std::string::npos);
  CHECK(run("generate قڵپ " + resources()).exit_code == 1);
}

TEST_CASE("transliterate both directions") {
  CommandResult to_arabic = run("transliterate --direction latin-arabic girtin kewtin");
  CHECK(to_arabic.exit_code == 0);
  CHECK(to_arabic.output == "گرتن\n" + sorani::normalize("که‌وتن") + "\n");

  CommandResult back = run("transliterate --direction arabic-latin شار");
  CHECK(back.output == "şar\n");
}

TEST_CASE("baseline pipeline: build, check, suggest, eval") {
  std::string freq = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/soranispell_cli_freq.tsv";
  CommandResult build = run("baseline build " + testsupport::data_path("corpus/toy.txt") +
                            " -o " + freq);
  REQUIRE(build.exit_code == 0);

  CommandResult check = run("baseline check مهرج قف --baseline " + freq);
  CHECK(check.exit_code == 1);
  CHECK(check.output == "مهرج\tcorrect\nقف\tincorrect\n");

  CommandResult suggest = run("baseline suggest مرج -k 1 --baseline " + freq);
  CHECK(suggest.output == "مهرج\t1\n");

  CommandResult eval = run("eval spell " + testsupport::data_path("testsets/spell_gold.tsv") +
                           " --system baseline --baseline " + freq + " -f tsv");
  CHECK(eval.exit_code == 0);
  CHECK(eval.output.find("baseline\tspell_gold\t") != std::string::npos);
  std::remove(freq.c_str());
}

TEST_CASE("eval spell output is machine-parseable and deterministic") {
  std::string args = "eval spell " + testsupport::data_path("testsets/spell_gold.tsv") +
                     " --system engine -f tsv " + resources();
  CommandResult first = run(args);
  CommandResult second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  // tab-separated mode carries exactly the report, no diagnostics
  std::istringstream lines(first.output);
  std::string header, row, extra;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  CHECK(!std::getline(lines, extra));
  CHECK(header.find("system\ttestset") == 0);

  CommandResult json = run("eval spell " + testsupport::data_path("testsets/spell_gold.tsv") +
                           " --system engine -f json " + resources());
  sorani::SpellReport report = sorani::spell_report_from_json(json.output);
  CHECK(report.system_name == "engine");
  CHECK(report.counts.total() == 10);
}

TEST_CASE("eval spell on a synthetic four-case set matches hand computation") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/soranispell_cli_synthetic.tsv";
  {
    std::ofstream out(path);
    out << "تهنیا\tcorrect\n";
    out << "وێنە\tcorrect\n";
    out << "مرج\tincorrect\tمهرج\n";
    out << "ژژژژ\tincorrect\tگرت\n";
  }
  CommandResult result =
      run("eval spell " + path + " --system engine --name synthetic -f tsv " + resources());
  CHECK(result.exit_code == 0);
  // hand-computed: TP=2 FP=0 TN=2 FN=0, the مرج correction hits at rank 1,
  // گرت is unreachable from ژژژژ within the distance cap
  std::istringstream lines(result.output);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(row == "engine\tsynthetic\t2\t0\t2\t0\t100.00\t1.00\t1.00\t1.00\t50.00\t50.00\t50.00");
  std::remove(path.c_str());
}

TEST_CASE("eval spell --drop-spaced removes the merged-word rows") {
  std::string base = "eval spell " + testsupport::data_path("testsets/spell_gold.tsv") +
                     " --system engine -f json " + resources();
  sorani::SpellReport all = sorani::spell_report_from_json(run(base).output);
  sorani::SpellReport dropped = sorani::spell_report_from_json(run(base + " --drop-spaced").output);
  CHECK(all.counts.total() == dropped.counts.total() + 2);
}

TEST_CASE("eval morph and coverage") {
  CommandResult morph = run("eval morph " + testsupport::data_path("testsets/morph_gold.tsv") +
                            " --aspect segmentation -f tsv " + resources());
  CHECK(morph.exit_code == 0);
  CHECK(morph.output.find("100.00") != std::string::npos);

  CommandResult cov = run("eval coverage " + testsupport::data_path("wordlists/coverage_words.txt") +
                          " -f tsv " + resources());
  CHECK(cov.exit_code == 0);
  CHECK(cov.output.find("9\t10\t90.00") != std::string::npos);
}

TEST_CASE("lexicon validate is quiet on the fixture") {
  CommandResult result = run("lexicon validate " + resources());
  CHECK(result.exit_code == 0);
  CHECK(result.output.empty());
}

TEST_CASE("lexicon merge writes a parseable draft") {
  std::string out = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                    "/soranispell_cli_merged.dic";
  CommandResult merge = run("lexicon merge --latin " +
                            testsupport::data_path("wordlists/wiktionary_latin.txt") +
                            " --arabic " + testsupport::data_path("wordlists/arabic_words.txt") +
                            " --flags N --po proper_name -o " + out);
  REQUIRE(merge.exit_code == 0);
  std::string text = testsupport::slurp(out);
  CHECK(text.find("گرتن") != std::string::npos);  // girtin, transliterated
  CHECK(text.find("# needs_review") != std::string::npos);
  (void)sorani::parse_dic_text(text);
  std::remove(out.c_str());
}

TEST_CASE("wikidata-query prints the query and validates the id") {
  CommandResult query = run("lexicon wikidata-query Q515 --limit 3");
  CHECK(query.exit_code == 0);
  CHECK(query.output.find("wdt:P31 wd:Q515 .") != std::string::npos);
  CHECK(query.output.find("LIMIT 3") != std::string::npos);
  CHECK(run("lexicon wikidata-query 515").exit_code == 2);
  CHECK(run("lexicon wikidata-query Q5 --fetch").exit_code == 2);  // no endpoint anywhere

  // an unreachable endpoint is a network error
  CHECK(run("lexicon wikidata-query Q5 --fetch --endpoint http://127.0.0.1:1/sparql").exit_code ==
        4);
}

}  // TEST_SUITE
