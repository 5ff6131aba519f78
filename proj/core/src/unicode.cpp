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

#include "soranispell/unicode.hpp"

namespace sorani {

namespace {

// Returns the number of continuation bytes expected after a lead byte,
// or -1 for bytes that cannot start a sequence.
int sequence_length(unsigned char lead) {
  if (lead < 0x80) return 0;
  if ((lead & 0xE0) == 0xC0) return 1;
  if ((lead & 0xF0) == 0xE0) return 2;
  if ((lead & 0xF8) == 0xF0) return 3;
  return -1;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    int cont = sequence_length(lead);
    if (cont < 0) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    if (cont == 0) {
      out.push_back(lead);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(cont) >= text.size()) {
      // truncated sequence at end of input
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    char32_t cp = lead & (0x3F >> cont);
    bool ok = true;
    for (int k = 1; k <= cont; ++k) {
      unsigned char c = static_cast<unsigned char>(text[i + k]);
      if ((c & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (c & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    // reject overlong forms, surrogates and out-of-range values
    static constexpr char32_t kMinByLen[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinByLen[cont] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacementChar);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(cont) + 1;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacementChar;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 2);
  for (char32_t cp : codepoints) append_utf8(out, cp);
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  append_utf8(out, cp);
  return out;
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    int cont = sequence_length(static_cast<unsigned char>(text[i]));
    if (cont <= 0) {
      ++i;
    } else {
      std::size_t j = i + 1;
      while (j < text.size() && j <= i + static_cast<std::size_t>(cont) &&
             (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) {
        ++j;
      }
      i = j;
    }
    ++n;
  }
  return n;
}

}  // namespace sorani
