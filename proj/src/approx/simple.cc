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

#include "bimatrix/approx/simple.h"

#include <cmath>
#include <string>
#include <vector>

#include "bimatrix/errors.h"
#include "bimatrix/lp/zero_sum.h"
#include "bimatrix/metrics.h"
#include "bimatrix/piecewise_linear.h"

namespace bimatrix::approx {
namespace {

// Lowest row-major index of the maximum entry.
void MatrixArgMax(const Matrix& a, int* row, int* col) {
  *row = 0;
  *col = 0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) > a(*row, *col)) {
        *row = i;
        *col = j;
      }
    }
  }
}

Vector Midpoint(int size, int a, int b) {
  return 0.5 * (UnitVector(size, a) + UnitVector(size, b));
}

// Both zero-sum solves of the search phase: (R, -R) for the row player and
// (-C, C) for the column player, the latter solved as C' from the column
// player's side.
struct ZeroSumPair {
  lp::ZeroSumSolution row;  // x*, y*, v_r
  lp::ZeroSumSolution col;  // x = y_hat, y = x_hat, v_c
};

SearchMixResult Cdffjs038Oriented(const BimatrixGame& game, const ZeroSumPair& zs) {
  SearchMixResult result;
  const Vector& x_star = zs.row.x;
  const Vector& y_star = zs.row.y;
  const Vector& x_hat = zs.col.y;
  const double v_r = zs.row.value;
  result.pre_mix = {x_hat, y_star};
  if (v_r <= kCdffjs038Bound) {
    result.final = result.pre_mix;
  } else {
    const int j = BestResponse(game, x_star, Player::kCol);
    const int r = BestResponse(game, UnitVector(game.cols(), j), Player::kRow);
    const double p = 1.0 / (2.0 - v_r);
    result.final = {CleanStrategy(p * x_star + (1.0 - p) * UnitVector(game.rows(), r)),
                    UnitVector(game.cols(), j)};
  }
  AddCandidate(game, result.final, v_r <= kCdffjs038Bound ? "zero_sum" : "mixture", &result);
  return result;
}

SearchMixResult BbmOriented(const BimatrixGame& game, const Vector& x_star,
                            const Vector& y_star, double g1) {
  SearchMixResult result;
  result.pre_mix = {x_star, y_star};
  AddCandidate(game, result.pre_mix, "zero_sum", &result);
  if (g1 <= kBbmNoMixThreshold) {
    result.final = result.pre_mix;
    return result;
  }
  const int m = game.rows();
  const int n = game.cols();
  const Matrix& R = game.R();
  const int r = BestResponse(game, y_star, Player::kRow);
  const Vector c_star = game.C().transpose() * x_star;
  const Vector c_r = game.C().row(r).transpose();
  const Vector r_star = R * y_star;
  const Vector rt_star = R.transpose() * x_star;
  const double xry = x_star.dot(r_star);
  const double xcy = c_star.dot(y_star);
  const double c_r_y = c_r.dot(y_star);

  // For each delta1 the column player best-responds with b, and delta2 is
  // optimized exactly over y = (1 - delta2) y* + delta2 e^b. Every regret is
  // a line in delta2 built from the precomputed products above.
  struct Choice {
    double delta1 = 0.0;
    double delta2 = 0.0;
    int b = 0;
    double epsilon = 2.0;
  };
  std::vector<Line> lines(m + 1);
  auto evaluate = [&](double delta1) {
    Choice c;
    c.delta1 = delta1;
    const Vector payoff = delta1 * c_r + (1.0 - delta1) * c_star;
    c.b = ArgMax(payoff);
    const double c_max = payoff[c.b];
    const double xhat_c_ystar = delta1 * c_r_y + (1.0 - delta1) * xcy;
    // Column regret vanishes at delta2 = 1, where y = e^b.
    lines[0] = {c_max - xhat_c_ystar, xhat_c_ystar - c_max};
    const double xhat_r_ystar = delta1 * r_star[r] + (1.0 - delta1) * xry;
    const double xhat_r_b = delta1 * R(r, c.b) + (1.0 - delta1) * rt_star[c.b];
    for (int i = 0; i < m; ++i) {
      const double at0 = r_star[i] - xhat_r_ystar;
      lines[i + 1] = {at0, (R(i, c.b) - xhat_r_b) - at0};
    }
    const EnvelopeMinimum best = MinimizeMaxOfLines(lines);
    c.delta2 = best.t;
    c.epsilon = best.value;
    return c;
  };

  constexpr int kGrid = 10000;
  Choice best = evaluate(0.0);
  auto consider = [&](double delta1) {
    const Choice c = evaluate(delta1);
    if (c.epsilon < best.epsilon) best = c;
  };
  for (int k = 1; k <= kGrid; ++k) consider(static_cast<double>(k) / kGrid);
  consider((1.0 - g1) / (2.0 - g1));
  // Refine around the best grid point.
  const double lo = std::max(0.0, best.delta1 - 1.0 / kGrid);
  const double hi = std::min(1.0, best.delta1 + 1.0 / kGrid);
  for (int k = 0; k <= 100; ++k) consider(lo + (hi - lo) * k / 100.0);

  const Vector x_hat = CleanStrategy(best.delta1 * UnitVector(m, r) + (1.0 - best.delta1) * x_star);
  const Vector y_hat =
      CleanStrategy(best.delta2 * UnitVector(n, best.b) + (1.0 - best.delta2) * y_star);
  AddCandidate(game, {x_hat, y_hat}, "mixture", &result);
  SelectArgmin(&result);
  return result;
}

}  // namespace

SearchMixResult Kps06(const BimatrixGame& game) {
  int i1, j1, i2, j2;
  MatrixArgMax(game.R(), &i1, &j1);
  MatrixArgMax(game.C(), &i2, &j2);
  SearchMixResult result;
  result.algorithm = "kps06";
  result.final = {Midpoint(game.rows(), i1, i2), Midpoint(game.cols(), j1, j2)};
  result.pre_mix = result.final;
  AddCandidate(game, result.final, "midpoint", &result);
  return result;
}

SearchMixResult Dmp06(const BimatrixGame& game, int start_row) {
  if (start_row < 1 || start_row > game.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "start_row must lie in [1, m]");
  }
  const int i = start_row - 1;
  const int j = BestResponse(game, UnitVector(game.rows(), i), Player::kCol);
  const int i2 = BestResponse(game, UnitVector(game.cols(), j), Player::kRow);
  SearchMixResult result;
  result.algorithm = "dmp06";
  result.final = {Midpoint(game.rows(), i, i2), UnitVector(game.cols(), j)};
  result.pre_mix = result.final;
  AddCandidate(game, result.final, "midpoint", &result);
  return result;
}

SearchMixResult Cdffjs15_038(const BimatrixGame& game) {
  ZeroSumPair zs{lp::SolveZeroSum(game.R()), lp::SolveZeroSum(game.C().transpose())};
  SearchMixResult result;
  if (zs.row.value >= zs.col.value) {
    result = Cdffjs038Oriented(game, zs);
  } else {
    result = Cdffjs038Oriented(game.Transposed(), ZeroSumPair{zs.col, zs.row});
    SwapRoles(&result);
  }
  result.algorithm = "cdffjs15_038";
  result.lp_calls = 2;
  return result;
}

SearchMixResult Bbm07(const BimatrixGame& game) {
  const lp::ZeroSumSolution zs = lp::SolveZeroSum(game.R() - game.C());
  const ApproxReport report = EpsilonOf(game, {zs.x, zs.y});
  SearchMixResult result;
  if (report.regret_row >= report.regret_col) {
    result = BbmOriented(game, zs.x, zs.y, report.regret_row);
  } else {
    result = BbmOriented(game.Transposed(), zs.y, zs.x, report.regret_col);
    SwapRoles(&result);
  }
  result.algorithm = "bbm07";
  result.lp_calls = 1;
  return result;
}

}  // namespace bimatrix::approx
