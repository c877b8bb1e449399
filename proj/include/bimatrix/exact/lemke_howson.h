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

#ifndef BIMATRIX_EXACT_LEMKE_HOWSON_H_
#define BIMATRIX_EXACT_LEMKE_HOWSON_H_

#include <functional>
#include <vector>

#include "bimatrix/game.h"

namespace bimatrix::exact {

// Labels are 1-based: 1..m are the row player's pure strategies and
// m+1..m+n the column player's.
//
// Row polytope  P = {x >= 0 : C+' x <= 1}: label i if x_i = 0, label m+j if
//                   column j is tight.
// Column polytope Q = {y >= 0 : R+ y <= 1}: label i if row i is tight,
//                   label m+j if y_j = 0.
// R+ and C+ are the payoffs shifted by (1 - min entry). A label is held when
// its variable is nonbasic in the owning tableau.
struct TableauState {
  std::vector<int> row_basis;  // basic labels of the P tableau
  std::vector<int> col_basis;  // basic labels of the Q tableau
  int pivots = 0;
  int dropped_label = 1;
};

struct LemkeHowsonOptions {
  int initial_label = 1;
  // 0 selects 10 * (m + n) * max(m, n).
  int pivot_cap = 0;
  // Pivot with exact rationals instead of guarded doubles.
  bool exact_arithmetic = false;
  double magnitude_guard = 1e12;
  std::function<void(const TableauState&)> on_pivot;
};

struct LemkeHowsonResult {
  MixedProfile profile;
  int pivots = 0;
  int initial_label = 1;
};

// Complementary pivoting with the lexicographic minimum-ratio rule, so
// degenerate games terminate. Throws PivotCapExceeded or NumericalFailure.
LemkeHowsonResult LemkeHowson(const BimatrixGame& game,
                              const LemkeHowsonOptions& options = {});

}  // namespace bimatrix::exact

#endif  // BIMATRIX_EXACT_LEMKE_HOWSON_H_
