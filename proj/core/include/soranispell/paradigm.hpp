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

#include <set>
#include <string>
#include <vector>

#include "soranispell/evaluation.hpp"

namespace sorani {

class Engine;

/// Every surface form the engine accepts: the union of generate() over all
/// dictionary entries.
std::set<std::string> generated_closure(const Engine& engine);

/// Adversarial words built by permuting the morpheme order of gold
/// segmentations. Every returned word is verified to lie outside the
/// generated closure, so the checker must reject it; the original forms are
/// never emitted. Deterministic; at most max_per_case words per gold row.
std::vector<std::string> expand_paradigm_negatives(const std::vector<MorphTestCase>& cases,
                                                   const Engine& engine,
                                                   std::size_t max_per_case = 12);

}  // namespace sorani
