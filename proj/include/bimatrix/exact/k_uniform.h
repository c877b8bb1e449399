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

#ifndef BIMATRIX_EXACT_K_UNIFORM_H_
#define BIMATRIX_EXACT_K_UNIFORM_H_

#include <cstdint>
#include <optional>

#include "bimatrix/deadline.h"
#include "bimatrix/game.h"

namespace bimatrix::exact {

enum class SearchTarget { kEpsilon, kWsEpsilon };

struct KUniformOptions {
  SearchTarget target = SearchTarget::kEpsilon;
  // Maximum number of (row multiset, column multiset) pairs evaluated.
  int64_t budget = 1000000;
  // Stop at the first pair whose metric is <= stop_at.
  std::optional<double> stop_at;
  double support_threshold = kDefaultSupportThreshold;
  Deadline deadline;
};

struct KUniformResult {
  MixedProfile best;
  double metric = 1.0;
  int64_t evaluated = 0;
  bool exhausted = false;
  bool budget_hit = false;
  bool stopped_early = false;
  bool timed_out = false;
};

// Scans k-uniform profiles, rows outer and columns inner, each side as
// nondecreasing index vectors in lexicographic order. Keeps the first pair
// attaining the smallest metric. Throws BudgetZero if budget <= 0.
KUniformResult KUniformSearch(const BimatrixGame& game, int k,
                              const KUniformOptions& options = {});

// ceil(2 delta^-2 ln(1/delta)).
int Kappa(double delta);
// ceil(12 ln n / eps^2), uniform profiles that contain an eps-NE.
int KForApproxNe(double epsilon, int n);
// ceil(2 ln(2n) / eps^2), uniform profiles that contain an eps-WSNE.
int KForWsne(double epsilon, int n);

}  // namespace bimatrix::exact

#endif  // BIMATRIX_EXACT_K_UNIFORM_H_
