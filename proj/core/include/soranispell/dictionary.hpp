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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sorani {

/// One lexicon entry. Entry lines look like
///
///   surface[/FLAGS] [po:TAG] [is:CLASS] [st:STEM] [other:fields...]
///
/// Surfaces are normalized on parse; a hyphenated surface marks a compound
/// and is stored joined, with the parts kept separately.
struct DicEntry {
  std::string surface;
  std::u32string flags;  // sorted, unique
  std::optional<char32_t> pos_tag;
  std::optional<std::string> infl_class;  // is: value, verbatim
  std::optional<std::string> stem;        // st: value, normalized
  std::vector<std::string> compound_parts;
  std::vector<std::string> extra_fields;  // unrecognized key:value tokens
  bool needs_review = false;              // '# needs_review' comment marker

  bool operator==(const DicEntry&) const = default;
};

/// Parsed .dic resource: a surface -> entry multimap (homographs allowed)
/// plus the declared header count.
class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::vector<DicEntry> entries);

  const std::vector<DicEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t declared_count() const { return declared_count_; }

  /// Entry indices whose surface equals `surface` (exact, normalized form).
  std::span<const std::uint32_t> find(std::string_view surface) const;
  bool contains(std::string_view surface) const { return !find(surface).empty(); }

  void add(DicEntry entry);
  void rebuild_index();
  void set_declared_count(std::uint64_t n) { declared_count_ = n; }

  bool operator==(const Dictionary& other) const { return entries_ == other.entries_; }

 private:
  std::vector<DicEntry> entries_;
  std::uint64_t declared_count_ = 0;
  std::unordered_map<std::string, std::vector<std::uint32_t>> index_;
};

/// Parses a .dic stream. Throws ParseError (malformed header, count
/// mismatch, annotation tokens without a key) with 1-based line numbers.
Dictionary parse_dic(std::istream& in);
Dictionary parse_dic_text(std::string_view text);

/// Deterministic serialization: header count, then entries sorted by
/// surface codepoints, then flags, then remaining fields. Re-parsing the
/// output reproduces the dictionary up to entry order.
std::string serialize_dic(const Dictionary& dict);

/// Multiset comparison used by the round-trip checks.
bool structurally_equal(const Dictionary& a, const Dictionary& b);

}  // namespace sorani
