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

#include "soranispell/tags.hpp"

#include "soranispell/unicode.hpp"

namespace sorani {

const TagSchema& TagSchema::standard() {
  static const TagSchema schema = [] {
    TagSchema s;
    s.names_ = {
        {U'N', "noun"},
        {U'V', "verb"},  // present stem
        {U'I', "verb"},  // past stem, intransitive
        {U'T', "verb"},  // past stem, transitive
        {U'A', "adjective"},
        {U'R', "adverb"},
        {U'E', "numeral"},
        {U'C', "conjunction"},
        {U'D', "interjection"},
        {U'B', "pronoun"},
        {U'F', "adposition"},
        {U'G', "particle"},
        {U'X', "verb"},  // infinitive
        {U'Z', "proper_name"},
        {U'W', "exceptional"},
    };
    return s;
  }();
  return schema;
}

std::string_view TagSchema::name(char32_t letter) const {
  auto it = names_.find(letter);
  return it == names_.end() ? std::string_view{} : std::string_view{it->second};
}

std::optional<char32_t> TagSchema::letter_for(std::string_view po_value,
                                              std::string_view infl_class) const {
  if (po_value.empty()) return std::nullopt;

  // bare tag letter form, e.g. po:N
  std::u32string cps = decode_utf8(po_value);
  if (cps.size() == 1 && knows(cps[0])) return cps[0];

  if (po_value == "noun") return U'N';
  if (po_value == "adjective") return U'A';
  if (po_value == "adverb") return U'R';
  if (po_value == "numeral") return U'E';
  if (po_value == "conjunction") return U'C';
  if (po_value == "interjection") return U'D';
  if (po_value == "pronoun") return U'B';
  if (po_value == "adposition") return U'F';
  if (po_value == "particle") return U'G';
  if (po_value == "proper_name") return U'Z';
  if (po_value == "exceptional") return U'W';
  if (po_value == "verb") {
    if (infl_class.starts_with("present_stem")) return U'V';
    if (infl_class.starts_with("past_stem_transitive")) return U'T';
    if (infl_class.starts_with("past_stem")) return U'I';
    if (infl_class.starts_with("infinitive")) return U'X';
    if (infl_class.starts_with("imperative")) return U'W';
    return U'V';  // unqualified verbs read as present stems
  }
  return std::nullopt;
}

std::string TagSchema::po_value(char32_t letter) const {
  auto it = names_.find(letter);
  return it == names_.end() ? std::string{} : it->second;
}

}  // namespace sorani
