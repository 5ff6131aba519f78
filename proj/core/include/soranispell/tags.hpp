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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace sorani {

// Part-of-speech letters carried by lexicon entries. Verb stems are split
// by tense and transitivity because the engine stems only verb categories.
//
//   N noun                 V present verb stem     I past stem, intransitive
//   T past stem, transitive  A adjective           R adverb
//   E numeral              C conjunction           D interjection
//   B pronoun              F adposition            G particle
//   X infinitive           Z proper name           W exceptional form
class TagSchema {
 public:
  static const TagSchema& standard();

  bool knows(char32_t letter) const { return names_.contains(letter); }
  std::string_view name(char32_t letter) const;

  /// Maps a `po:` field value (a full name such as "noun", or a bare tag
  /// letter) plus the optional `is:` subclass onto a tag letter. For
  /// po:verb the subclass decides between V/I/T/X/W; without one the entry
  /// is treated as a present stem.
  std::optional<char32_t> letter_for(std::string_view po_value,
                                     std::string_view infl_class) const;

  /// Canonical `po:` value written back by the serializer.
  std::string po_value(char32_t letter) const;

  const std::map<char32_t, std::string>& tags() const { return names_; }

  static bool is_verb_category(char32_t letter) {
    return letter == U'V' || letter == U'I' || letter == U'T' || letter == U'X';
  }

 private:
  std::map<char32_t, std::string> names_;
};

}  // namespace sorani
