// Copyright 2026 The Bimatrix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIMATRIX_EXACT_SUPPORT_ENUMERATION_H_
#define BIMATRIX_EXACT_SUPPORT_ENUMERATION_H_

#include <optional>
#include <vector>

#include "bimatrix/deadline.h"
#include "bimatrix/game.h"

namespace bimatrix::exact {

struct SupportEnumerationResult {
  std::vector<MixedProfile> equilibria;
  // Support pairs whose indifference system had no unique solution.
  int singular_systems = 0;
  bool timed_out = false;
};

// All equilibria with equal-size supports, visited by increasing support
// size and then lexicographically. Degenerate supports are skipped and
// counted in singular_systems.
SupportEnumerationResult SupportEnumeration(const BimatrixGame& game,
                                            std::optional<int> max_support = {},
                                            const Deadline& deadline = {});

}  // namespace bimatrix::exact

#endif  // BIMATRIX_EXACT_SUPPORT_ENUMERATION_H_
