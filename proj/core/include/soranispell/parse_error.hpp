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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sorani {

enum class ParseErrorKind {
  malformed_header,      // .dic first line is not a decimal count
  count_mismatch,        // declared entry count != parsed entries
  bad_field,             // entry annotation token is not key:value
  bad_entry,             // structurally broken entry or table line
  unknown_directive,     // unrecognized .aff directive
  unsupported_encoding,  // SET names an encoding we cannot decode
  class_count_mismatch,  // declared rule count != rules seen
  bad_condition,         // unbalanced or empty [] class in a condition
  mixed_kind_in_class,   // PFX and SFX lines under one flag
  bad_rule,              // malformed PFX/SFX line
};

inline const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::count_mismatch: return "count mismatch";
    case ParseErrorKind::bad_field: return "bad field";
    case ParseErrorKind::bad_entry: return "bad entry";
    case ParseErrorKind::unknown_directive: return "unknown directive";
    case ParseErrorKind::unsupported_encoding: return "unsupported encoding";
    case ParseErrorKind::class_count_mismatch: return "class count mismatch";
    case ParseErrorKind::bad_condition: return "bad condition";
    case ParseErrorKind::mixed_kind_in_class: return "mixed kind in class";
    case ParseErrorKind::bad_rule: return "bad rule";
  }
  return "parse error";
}

/// Resource-format error. `line()` is 1-based and points at the offending
/// line of the input stream.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + message),
        kind_(kind),
        line_(line),
        message_(message) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::string message_;
};

}  // namespace sorani
