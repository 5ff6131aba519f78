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

#include "soranispell/paradigm.hpp"

#include <algorithm>

#include "soranispell/engine.hpp"

namespace sorani {

std::set<std::string> generated_closure(const Engine& engine) {
  std::set<std::string> closure;
  for (const DicEntry& entry : engine.dictionary().entries()) {
    std::set<std::string> forms = engine.generate(entry);
    closure.insert(forms.begin(), forms.end());
  }
  return closure;
}

std::vector<std::string> expand_paradigm_negatives(const std::vector<MorphTestCase>& cases,
                                                   const Engine& engine,
                                                   std::size_t max_per_case) {
  const std::set<std::string> closure = generated_closure(engine);

  std::vector<std::string> negatives;
  std::set<std::string> seen;
  for (const MorphTestCase& c : cases) {
    std::vector<std::string> morphemes = c.prefixes;
    morphemes.push_back(c.base);
    morphemes.insert(morphemes.end(), c.suffixes.begin(), c.suffixes.end());
    if (morphemes.size() < 2) continue;

    const std::vector<std::string> original = morphemes;
    std::sort(morphemes.begin(), morphemes.end());
    std::size_t emitted = 0;
    do {
      if (morphemes == original) continue;
      std::string candidate;
      for (const std::string& m : morphemes) candidate += m;
      if (candidate == c.word) continue;  // permutation collapses to the original
      if (closure.contains(candidate)) continue;
      if (!seen.insert(candidate).second) continue;
      negatives.push_back(candidate);
      ++emitted;
    } while (emitted < max_per_case && std::next_permutation(morphemes.begin(), morphemes.end()));
  }
  return negatives;
}

}  // namespace sorani
