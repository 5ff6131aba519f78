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

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "soranispell/dictionary.hpp"
#include "soranispell/script.hpp"
#include "soranispell/tags.hpp"

namespace sorani {

enum class DiagnosticKind {
  unknown_tag,
  missing_pos,
  missing_stem,
  malformed_compound,
  unnormalized_surface,
};

struct Diagnostic {
  DiagnosticKind kind;
  std::string surface;
  std::string message;
};

const char* to_string(DiagnosticKind kind);

/// Non-failing entry checks: unknown or missing part-of-speech tag, a
/// verb-category entry without a stem, malformed compound hyphens, an
/// unnormalized surface. Empty result means the entry is clean.
std::vector<Diagnostic> validate_entry(const DicEntry& entry,
                                       const TagSchema& schema = TagSchema::standard());

class BadConceptIdError : public std::runtime_error {
 public:
  explicit BadConceptIdError(const std::string& id)
      : std::runtime_error("concept id must be 'Q' followed by digits, got '" + id + "'") {}
};

/// Label-extraction query for one knowledge-base concept (Q5 humans,
/// Q515 cities, Q6256 countries, ...), restricted to the Sorani language
/// code and the Sorani encyclopedia site. Byte-identical for identical
/// inputs. Throws BadConceptIdError.
std::string build_sparql_query(std::string_view concept_id, int limit = 100);

class EndpointUnreachableError : public std::runtime_error {
 public:
  explicit EndpointUnreachableError(const std::string& why)
      : std::runtime_error("endpoint unreachable: " + why) {}
};

class MalformedResponseError : public std::runtime_error {
 public:
  explicit MalformedResponseError(const std::string& why)
      : std::runtime_error("malformed query response: " + why) {}
};

/// Transport used by fetch_labels; tests replay recorded responses through
/// it so the suite runs offline.
class SparqlTransport {
 public:
  virtual ~SparqlTransport() = default;
  /// Returns the raw response body for `query` executed against
  /// `endpoint` with JSON results requested. Throws
  /// EndpointUnreachableError on connection failures.
  virtual std::string get(const std::string& endpoint, const std::string& query) = 0;
};

/// HTTP transport (plain http; TLS endpoints need a terminating proxy).
std::unique_ptr<SparqlTransport> make_http_transport();

/// Replay transport serving one canned body.
std::unique_ptr<SparqlTransport> make_replay_transport(std::string body);

/// Extracts the first-variable labels from a SPARQL JSON result body and
/// normalizes them. Throws MalformedResponseError.
std::vector<std::string> parse_sparql_labels(std::string_view json_body);

std::vector<std::string> fetch_labels(SparqlTransport& transport, const std::string& endpoint,
                                      const std::string& query);

enum class SourceScript { arabic, latin };

/// One word-list source for dictionary construction. Latin-script sources
/// are transliterated on ingest. Entries take the caller-supplied default
/// flags and tags and are marked for human review.
struct WordSource {
  std::vector<std::string> words;
  SourceScript script = SourceScript::arabic;
  std::u32string default_flags;
  std::optional<std::string> default_po;  // po: value, e.g. "proper_name"
  std::optional<std::string> default_is;
  bool mark_needs_review = true;
};

/// Merges sources into a dictionary draft: transliterate, normalize,
/// collapse exact duplicates, keep differing annotations as homographs,
/// sort deterministically. Idempotent.
Dictionary merge_sources(const std::vector<WordSource>& sources,
                         const TransliterationTable& table = TransliterationTable::standard());

}  // namespace sorani
