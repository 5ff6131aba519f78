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

#include "soranispell/dictionary.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <tuple>

#include "soranispell/parse_error.hpp"
#include "soranispell/script.hpp"
#include "soranispell/tags.hpp"
#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

constexpr std::string_view kNeedsReviewComment = "# needs_review";

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::u32string sorted_unique_flags(std::string_view raw) {
  std::u32string flags = decode_utf8(raw);
  std::sort(flags.begin(), flags.end());
  flags.erase(std::unique(flags.begin(), flags.end()), flags.end());
  return flags;
}

DicEntry parse_entry_line(const std::vector<std::string>& tokens, std::size_t lineno) {
  DicEntry entry;

  std::string_view head = tokens.front();
  std::string_view surface_part = head;
  if (auto slash = head.find('/'); slash != std::string_view::npos) {
    surface_part = head.substr(0, slash);
    entry.flags = sorted_unique_flags(head.substr(slash + 1));
  }
  if (surface_part.empty()) {
    throw ParseError(ParseErrorKind::bad_entry, lineno, "entry has no surface");
  }

  if (surface_part.find('-') != std::string_view::npos) {
    std::string joined;
    std::size_t pos = 0;
    while (true) {
      std::size_t dash = surface_part.find('-', pos);
      std::string part = normalize(surface_part.substr(pos, dash - pos));
      entry.compound_parts.push_back(part);
      joined += part;
      if (dash == std::string_view::npos) break;
      pos = dash + 1;
    }
    entry.surface = joined;
  } else {
    entry.surface = normalize(surface_part);
  }
  if (entry.surface.empty()) {
    throw ParseError(ParseErrorKind::bad_entry, lineno, "entry surface is empty");
  }

  std::string po_value;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    const std::string& tok = tokens[t];
    auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0) {
      throw ParseError(ParseErrorKind::bad_field, lineno,
                       "annotation '" + tok + "' is not key:value");
    }
    std::string key = tok.substr(0, colon);
    std::string value = tok.substr(colon + 1);
    if (key == "po" && po_value.empty()) {
      po_value = value;
    } else if (key == "is" && !entry.infl_class) {
      entry.infl_class = value;
    } else if (key == "st" && !entry.stem) {
      entry.stem = normalize(value);
    } else {
      // unknown keys (and duplicates) are kept verbatim
      entry.extra_fields.push_back(tok);
    }
  }
  if (!po_value.empty()) {
    entry.pos_tag = TagSchema::standard().letter_for(po_value, entry.infl_class.value_or(""));
    if (!entry.pos_tag) {
      // unrecognized tag: preserved opaquely, diagnosed by validation
      entry.extra_fields.push_back("po:" + po_value);
    }
  }
  return entry;
}

std::string serialize_entry(const DicEntry& entry) {
  std::string line;
  if (!entry.compound_parts.empty()) {
    for (std::size_t i = 0; i < entry.compound_parts.size(); ++i) {
      if (i > 0) line += '-';
      line += entry.compound_parts[i];
    }
  } else {
    line += entry.surface;
  }
  if (!entry.flags.empty()) {
    line += '/';
    line += encode_utf8(entry.flags);
  }
  if (entry.pos_tag) {
    const TagSchema& schema = TagSchema::standard();
    std::string name = schema.po_value(*entry.pos_tag);
    // verb letters other than V need the is: subclass to survive a
    // reparse; fall back to the bare letter form when it is missing
    if (name == "verb" &&
        schema.letter_for(name, entry.infl_class.value_or("")) != entry.pos_tag) {
      name = encode_utf8(*entry.pos_tag);
    }
    line += " po:" + name;
  }
  if (entry.infl_class) line += " is:" + *entry.infl_class;
  if (entry.stem) line += " st:" + *entry.stem;
  for (const std::string& extra : entry.extra_fields) {
    line += ' ';
    line += extra;
  }
  return line;
}

std::tuple<const std::string&, const std::u32string&, std::string> sort_key(const DicEntry& e) {
  return {e.surface, e.flags, serialize_entry(e)};
}

}  // namespace

Dictionary::Dictionary(std::vector<DicEntry> entries) : entries_(std::move(entries)) {
  declared_count_ = entries_.size();
  rebuild_index();
}

std::span<const std::uint32_t> Dictionary::find(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  if (it == index_.end()) return {};
  return it->second;
}

void Dictionary::add(DicEntry entry) {
  index_[entry.surface].push_back(static_cast<std::uint32_t>(entries_.size()));
  entries_.push_back(std::move(entry));
}

void Dictionary::rebuild_index() {
  index_.clear();
  for (std::uint32_t i = 0; i < entries_.size(); ++i) {
    index_[entries_[i].surface].push_back(i);
  }
}

Dictionary parse_dic(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) {
    throw ParseError(ParseErrorKind::malformed_header, 1, "empty input");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::uint64_t declared = 0;
  {
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) trimmed.pop_back();
    if (trimmed.empty() || trimmed.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(ParseErrorKind::malformed_header, 1,
                       "expected a decimal entry count, got '" + line + "'");
    }
    declared = std::stoull(trimmed);
  }

  Dictionary dict;
  bool next_needs_review = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == kNeedsReviewComment) next_needs_review = true;
      continue;
    }
    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty()) continue;
    DicEntry entry = parse_entry_line(tokens, lineno);
    entry.needs_review = next_needs_review;
    next_needs_review = false;
    dict.add(std::move(entry));
  }

  if (declared != dict.size()) {
    throw ParseError(ParseErrorKind::count_mismatch, 1,
                     "header declares " + std::to_string(declared) + " entries, parsed " +
                         std::to_string(dict.size()));
  }
  dict.set_declared_count(declared);
  return dict;
}

Dictionary parse_dic_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dic(in);
}

std::string serialize_dic(const Dictionary& dict) {
  std::vector<const DicEntry*> order;
  order.reserve(dict.size());
  for (const DicEntry& e : dict.entries()) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const DicEntry* a, const DicEntry* b) { return sort_key(*a) < sort_key(*b); });

  std::string out = std::to_string(dict.size());
  out += '\n';
  for (const DicEntry* e : order) {
    if (e->needs_review) {
      out += kNeedsReviewComment;
      out += '\n';
    }
    out += serialize_entry(*e);
    out += '\n';
  }
  return out;
}

bool structurally_equal(const Dictionary& a, const Dictionary& b) {
  if (a.size() != b.size()) return false;
  auto sorted = [](const Dictionary& d) {
    std::vector<DicEntry> v = d.entries();
    std::sort(v.begin(), v.end(),
              [](const DicEntry& x, const DicEntry& y) { return sort_key(x) < sort_key(y); });
    return v;
  };
  return sorted(a) == sorted(b);
}

}  // namespace sorani
