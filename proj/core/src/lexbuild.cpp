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

#include "soranispell/lexbuild.hpp"

#include <algorithm>
#include <tuple>

#include <httplib.h>
#include <json.hpp>

#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

using nlohmann::json;

std::string percent_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size() * 3);
  for (unsigned char c : text) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
        c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

class HttpSparqlTransport final : public SparqlTransport {
 public:
  std::string get(const std::string& endpoint, const std::string& query) override {
    std::string_view url = endpoint;
    if (url.starts_with("https://")) {
      throw EndpointUnreachableError("TLS endpoints are not supported by this build: " + endpoint);
    }
    if (!url.starts_with("http://")) {
      throw EndpointUnreachableError("unsupported endpoint URL: " + endpoint);
    }
    url.remove_prefix(7);
    std::size_t slash = url.find('/');
    std::string host(url.substr(0, slash));
    std::string path = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));

    httplib::Client client(("http://" + host).c_str());
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(30, 0);
    std::string target = path + "?query=" + percent_encode(query) + "&format=json";
    httplib::Result result = client.Get(target.c_str(),
                                        {{"Accept", "application/sparql-results+json"}});
    if (!result) {
      throw EndpointUnreachableError(httplib::to_string(result.error()) + " (" + endpoint + ")");
    }
    if (result->status != 200) {
      throw EndpointUnreachableError("HTTP status " + std::to_string(result->status) + " from " +
                                     endpoint);
    }
    return result->body;
  }
};

class ReplayTransport final : public SparqlTransport {
 public:
  explicit ReplayTransport(std::string body) : body_(std::move(body)) {}
  std::string get(const std::string&, const std::string&) override { return body_; }

 private:
  std::string body_;
};

}  // namespace

const char* to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::unknown_tag: return "unknown tag";
    case DiagnosticKind::missing_pos: return "missing pos";
    case DiagnosticKind::missing_stem: return "missing stem";
    case DiagnosticKind::malformed_compound: return "malformed compound";
    case DiagnosticKind::unnormalized_surface: return "unnormalized surface";
  }
  return "?";
}

std::vector<Diagnostic> validate_entry(const DicEntry& entry, const TagSchema& schema) {
  std::vector<Diagnostic> out;
  auto add = [&](DiagnosticKind kind, std::string message) {
    out.push_back({kind, entry.surface, std::move(message)});
  };

  if (!is_normalized(entry.surface)) {
    add(DiagnosticKind::unnormalized_surface, "surface is not in normalized form");
  }
  if (entry.pos_tag) {
    if (!schema.knows(*entry.pos_tag)) {
      add(DiagnosticKind::unknown_tag,
          "tag '" + encode_utf8(*entry.pos_tag) + "' is not in the schema");
    } else if (TagSchema::is_verb_category(*entry.pos_tag) && !entry.stem) {
      add(DiagnosticKind::missing_stem, "verb-category entry has no st: field");
    }
  } else {
    bool has_raw_po = std::any_of(entry.extra_fields.begin(), entry.extra_fields.end(),
                                  [](const std::string& f) { return f.starts_with("po:"); });
    if (has_raw_po) {
      add(DiagnosticKind::unknown_tag, "po: value is not in the schema");
    } else {
      add(DiagnosticKind::missing_pos, "entry has no po: field");
    }
  }
  if (!entry.compound_parts.empty()) {
    if (entry.compound_parts.size() < 2 ||
        std::any_of(entry.compound_parts.begin(), entry.compound_parts.end(),
                    [](const std::string& p) { return p.empty(); })) {
      add(DiagnosticKind::malformed_compound, "empty compound part around a hyphen");
    }
  }
  return out;
}

std::string build_sparql_query(std::string_view concept_id, int limit) {
  if (concept_id.size() < 2 || concept_id[0] != 'Q' ||
      concept_id.find_first_not_of("0123456789", 1) != std::string_view::npos) {
    throw BadConceptIdError(std::string(concept_id));
  }
  std::string id(concept_id);
  std::string query;
  query += "SELECT ?itemLabel\n";
  query += "{\n";
  query += "  ?item wdt:P31 wd:" + id + " .\n";
  query += "  ?article schema:about ?item .\n";
  query += "  ?article schema:isPartOf <https://ckb.wikipedia.org/> .\n";
  query += "  SERVICE wikibase:label { bd:serviceParam wikibase:language \"ckb\" . }\n";
  query += "  FILTER(EXISTS {\n";
  query += "    ?item rdfs:label ?lang_label.\n";
  query += "    FILTER(LANG(?lang_label) = \"ckb\")\n";
  query += "  })\n";
  query += "} LIMIT " + std::to_string(limit) + "\n";
  return query;
}

std::unique_ptr<SparqlTransport> make_http_transport() {
  return std::make_unique<HttpSparqlTransport>();
}

std::unique_ptr<SparqlTransport> make_replay_transport(std::string body) {
  return std::make_unique<ReplayTransport>(std::move(body));
}

std::vector<std::string> parse_sparql_labels(std::string_view json_body) {
  json j;
  try {
    j = json::parse(json_body);
  } catch (const json::parse_error& e) {
    throw MalformedResponseError(e.what());
  }
  if (!j.is_object() || !j.contains("results") || !j["results"].is_object() ||
      !j["results"].contains("bindings") || !j["results"]["bindings"].is_array()) {
    throw MalformedResponseError("missing results.bindings array");
  }
  std::vector<std::string> labels;
  for (const json& binding : j["results"]["bindings"]) {
    if (!binding.is_object() || binding.empty()) {
      throw MalformedResponseError("binding is not an object");
    }
    const json& cell = binding.begin().value();
    if (!cell.is_object() || !cell.contains("value") || !cell["value"].is_string()) {
      throw MalformedResponseError("binding cell has no string value");
    }
    labels.push_back(normalize(cell["value"].get<std::string>()));
  }
  return labels;
}

std::vector<std::string> fetch_labels(SparqlTransport& transport, const std::string& endpoint,
                                      const std::string& query) {
  return parse_sparql_labels(transport.get(endpoint, query));
}

Dictionary merge_sources(const std::vector<WordSource>& sources,
                         const TransliterationTable& table) {
  std::vector<DicEntry> entries;
  for (const WordSource& source : sources) {
    for (const std::string& word : source.words) {
      std::string surface = source.script == SourceScript::latin
                                ? transliterate(word, Direction::latin_to_arabic, table)
                                : std::string(word);
      surface = normalize(surface);
      if (surface.empty()) continue;
      DicEntry entry;
      entry.surface = std::move(surface);
      entry.flags = source.default_flags;
      std::sort(entry.flags.begin(), entry.flags.end());
      entry.flags.erase(std::unique(entry.flags.begin(), entry.flags.end()), entry.flags.end());
      if (source.default_po) {
        entry.pos_tag =
            TagSchema::standard().letter_for(*source.default_po, source.default_is.value_or(""));
      }
      if (source.default_is) entry.infl_class = source.default_is;
      entry.needs_review = source.mark_needs_review;
      entries.push_back(std::move(entry));
    }
  }

  std::sort(entries.begin(), entries.end(), [](const DicEntry& a, const DicEntry& b) {
    return std::tie(a.surface, a.flags, a.pos_tag, a.infl_class, a.stem) <
           std::tie(b.surface, b.flags, b.pos_tag, b.infl_class, b.stem);
  });
  // collapse exact duplicates; differing annotations stay as homographs
  std::vector<DicEntry> merged;
  for (DicEntry& entry : entries) {
    if (!merged.empty()) {
      DicEntry& last = merged.back();
      if (std::tie(last.surface, last.flags, last.pos_tag, last.infl_class, last.stem) ==
          std::tie(entry.surface, entry.flags, entry.pos_tag, entry.infl_class, entry.stem)) {
        last.needs_review = last.needs_review || entry.needs_review;
        continue;
      }
    }
    merged.push_back(std::move(entry));
  }
  return Dictionary(std::move(merged));
}

}  // namespace sorani
