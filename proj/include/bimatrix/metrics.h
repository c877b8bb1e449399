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

#ifndef BIMATRIX_METRICS_H_
#define BIMATRIX_METRICS_H_

#include "bimatrix/game.h"

namespace bimatrix {

// How far a profile is from equilibrium.
//   regret_row = max(Ry) - x'Ry, regret_col = max(C'x) - x'Cy
//   epsilon = max of the two, exploitability = their sum
//   ws_epsilon = max over players of (best pure payoff - worst supported
//   pure payoff), where supported means probability > support_threshold.
struct ApproxReport {
  double regret_row = 0.0;
  double regret_col = 0.0;
  double epsilon = 0.0;
  double ws_epsilon = 0.0;
  double exploitability = 0.0;
  double support_threshold = kDefaultSupportThreshold;
};

ApproxReport EpsilonOf(const BimatrixGame& game, const MixedProfile& profile,
                       double support_threshold = kDefaultSupportThreshold);

double WsEpsilonOf(const BimatrixGame& game, const MixedProfile& profile,
                   double support_threshold = kDefaultSupportThreshold);

// Lowest index attaining the maximal expected payoff against `against`, which
// is the opponent's strategy.
int BestResponse(const BimatrixGame& game, const Vector& against, Player player);

// Lowest index of the maximum entry.
int ArgMax(const Vector& v);

// Unchecked kernels shared by the algorithms; payoffs are the expected payoff
// vectors Ry (row) and C'x (column).
double RowRegret(const Vector& row_payoffs, const Vector& x);
double ColRegret(const Vector& col_payoffs, const Vector& y);
double RowWsRegret(const Vector& row_payoffs, const Vector& x, double threshold);
double ColWsRegret(const Vector& col_payoffs, const Vector& y, double threshold);

}  // namespace bimatrix

#endif  // BIMATRIX_METRICS_H_
