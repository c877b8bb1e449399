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

#ifndef BIMATRIX_LP_ZERO_SUM_H_
#define BIMATRIX_LP_ZERO_SUM_H_

#include "bimatrix/game.h"
#include "bimatrix/lp/lp.h"

namespace bimatrix::lp {

// Optimal strategies of the zero-sum game (R, -R). value is the row player's
// minimax payoff; row_security = min_j (x'R)_j and col_security =
// max_i (Ry)_i, both equal to value up to solver tolerance.
struct ZeroSumSolution {
  double value = 0.0;
  Vector x;
  Vector y;
  double row_security = 0.0;
  double col_security = 0.0;
  int lp_iterations = 0;
};

// maximize t s.t. R'x >= t 1, 1'x = 1, x >= 0. y is read off the duals of
// the column constraints.
ZeroSumSolution SolveZeroSum(const Matrix& payoff,
                             const SimplexOptions& options = {});

}  // namespace bimatrix::lp

#endif  // BIMATRIX_LP_ZERO_SUM_H_
