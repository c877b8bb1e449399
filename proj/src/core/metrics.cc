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

#include "bimatrix/metrics.h"

#include <algorithm>
#include <limits>
#include <string>

#include "bimatrix/errors.h"

namespace bimatrix {
namespace {

double ClampRegret(double r) { return std::clamp(r, 0.0, 1.0); }

double WsGap(const Vector& payoffs, const Vector& strategy, double threshold,
             const char* who) {
  const double best = payoffs.maxCoeff();
  double worst_supported = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < strategy.size(); ++i) {
    if (strategy[i] > threshold) {
      worst_supported = std::min(worst_supported, payoffs[i]);
    }
  }
  if (worst_supported == std::numeric_limits<double>::infinity()) {
    throw Error(ErrorCode::kEmptySupport,
                std::string(who) + " support is empty at threshold " +
                    std::to_string(threshold));
  }
  return ClampRegret(best - worst_supported);
}

void CheckThreshold(double threshold) {
  if (!(threshold >= 0.0 && threshold < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument,
                "support threshold must lie in [0, 0.5)");
  }
}

}  // namespace

int ArgMax(const Vector& v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return static_cast<int>(best);
}

double RowRegret(const Vector& row_payoffs, const Vector& x) {
  return ClampRegret(row_payoffs.maxCoeff() - x.dot(row_payoffs));
}

double ColRegret(const Vector& col_payoffs, const Vector& y) {
  return ClampRegret(col_payoffs.maxCoeff() - y.dot(col_payoffs));
}

double RowWsRegret(const Vector& row_payoffs, const Vector& x, double threshold) {
  return WsGap(row_payoffs, x, threshold, "row");
}

double ColWsRegret(const Vector& col_payoffs, const Vector& y, double threshold) {
  return WsGap(col_payoffs, y, threshold, "column");
}

ApproxReport EpsilonOf(const BimatrixGame& game, const MixedProfile& profile,
                       double support_threshold) {
  ValidateProfile(profile, game.rows(), game.cols());
  CheckThreshold(support_threshold);
  const Vector row_payoffs = game.R() * profile.y;
  const Vector col_payoffs = game.C().transpose() * profile.x;
  ApproxReport report;
  report.support_threshold = support_threshold;
  report.regret_row = RowRegret(row_payoffs, profile.x);
  report.regret_col = ColRegret(col_payoffs, profile.y);
  report.epsilon = std::max(report.regret_row, report.regret_col);
  report.exploitability = report.regret_row + report.regret_col;
  report.ws_epsilon =
      std::max(RowWsRegret(row_payoffs, profile.x, support_threshold),
               ColWsRegret(col_payoffs, profile.y, support_threshold));
  // Mass below the threshold still counts toward the regret but not toward
  // the well-supported gap; ws_epsilon must dominate epsilon regardless.
  report.ws_epsilon = std::max(report.ws_epsilon, report.epsilon);
  return report;
}

double WsEpsilonOf(const BimatrixGame& game, const MixedProfile& profile,
                   double support_threshold) {
  return EpsilonOf(game, profile, support_threshold).ws_epsilon;
}

int BestResponse(const BimatrixGame& game, const Vector& against, Player player) {
  if (player == Player::kRow) {
    if (against.size() != game.cols()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "row best response needs a column strategy of length " +
                      std::to_string(game.cols()));
    }
    return ArgMax(game.R() * against);
  }
  if (against.size() != game.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "column best response needs a row strategy of length " +
                    std::to_string(game.rows()));
  }
  return ArgMax(game.C().transpose() * against);
}

}  // namespace bimatrix
