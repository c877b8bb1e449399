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

#include "bimatrix/wsne/wsne.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "bimatrix/errors.h"
#include "bimatrix/exact/k_uniform.h"
#include "bimatrix/lp/lp.h"
#include "bimatrix/lp/zero_sum.h"
#include "bimatrix/metrics.h"
#include "bimatrix/piecewise_linear.h"

namespace bimatrix::wsne {

const char* TacticName(Tactic tactic) {
  switch (tactic) {
    case Tactic::kPure: return "pure";
    case Tactic::kZeroSum: return "zero_sum";
    case Tactic::kShifted: return "shifted";
    case Tactic::kSubgame2x2: return "subgame_2x2";
    case Tactic::kKUniform: return "k_uniform";
    case Tactic::kLowPayoff: return "low_payoff";
    case Tactic::kLowHigh: return "low_high";
    case Tactic::kHighPayoff: return "high_payoff";
  }
  return "unknown";
}

const char* WsneStatusName(WsneStatus status) {
  switch (status) {
    case WsneStatus::kOk: return "ok";
    case WsneStatus::kTimeout: return "timeout";
    case WsneStatus::kPrecisionError: return "precision_error";
  }
  return "unknown";
}

namespace {

struct Scored {
  MixedProfile profile;
  double ws = 1.0;
  Tactic tactic = Tactic::kPure;
};

Scored Score(const BimatrixGame& game, const MixedProfile& profile, Tactic tactic) {
  return {profile, WsEpsilonOf(game, profile), tactic};
}

WsneResult Finish(const BimatrixGame& game, const char* name, const Scored& s,
                  WsneStatus status, int lp_calls) {
  WsneResult r;
  r.algorithm = name;
  r.profile = s.profile;
  const ApproxReport report = EpsilonOf(game, s.profile);
  r.ws_epsilon = report.ws_epsilon;
  r.epsilon = report.epsilon;
  r.tactic = s.tactic;
  r.status = status;
  r.lp_calls = lp_calls;
  return r;
}

// Maps a result computed on game.Transposed() back to the original roles.
WsneResult Untranspose(WsneResult r) {
  r.profile = r.profile.Swapped();
  return r;
}

std::vector<int> Support(const Vector& v) {
  std::vector<int> s;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] > kDefaultSupportThreshold) s.push_back(i);
  }
  return s;
}

// Distribution over `support` (indices into the rows of own_payoff) that
// minimizes the opponent's best-response payoff max_j (x'P)_j, where P holds
// the opponent's payoffs with our actions as rows. Returns the value in *u.
Vector MinimizeOpponentBest(const Matrix& opp_payoff, const std::vector<int>& support,
                            double* u) {
  const int k = static_cast<int>(support.size());
  const int cols = static_cast<int>(opp_payoff.cols());
  lp::LpProblem problem(k + 1, lp::Sense::kMinimize);
  problem.SetObjectiveCoefficient(k, 1.0);
  problem.SetBounds(k, -lp::kInfinity, lp::kInfinity);
  Vector row(k + 1);
  for (int j = 0; j < cols; ++j) {
    for (int a = 0; a < k; ++a) row[a] = opp_payoff(support[a], j);
    row[k] = -1.0;
    problem.AddConstraint(row, lp::Relation::kLessEqual, 0.0);
  }
  row.head(k).setOnes();
  row[k] = 0.0;
  problem.AddConstraint(row, lp::Relation::kEqual, 1.0);
  const lp::LpSolution s = lp::SolveLp(problem);
  if (s.status != lp::LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure, "support-restricted LP not optimal");
  }
  Vector x = Vector::Zero(opp_payoff.rows());
  for (int a = 0; a < k; ++a) x[support[a]] = std::max(0.0, s.primal[a]);
  *u = s.primal[k];
  return CleanStrategy(x);
}

// Opponent strategy on opp_support minimizing our ws regret when we play
// every action of own_support: min u - l with (P y)_i <= u for all i and
// (P y)_i >= l for i in own_support. P has our actions as rows.
Vector MinimizeWsRegret(const Matrix& own_payoff, const std::vector<int>& own_support,
                        const std::vector<int>& opp_support) {
  const int k = static_cast<int>(opp_support.size());
  lp::LpProblem problem(k + 2, lp::Sense::kMinimize);
  problem.SetObjectiveCoefficient(k, 1.0);
  problem.SetObjectiveCoefficient(k + 1, -1.0);
  problem.SetBounds(k, -lp::kInfinity, lp::kInfinity);
  problem.SetBounds(k + 1, -lp::kInfinity, lp::kInfinity);
  Vector row = Vector::Zero(k + 2);
  for (int i = 0; i < own_payoff.rows(); ++i) {
    for (int b = 0; b < k; ++b) row[b] = own_payoff(i, opp_support[b]);
    row[k] = -1.0;
    row[k + 1] = 0.0;
    problem.AddConstraint(row, lp::Relation::kLessEqual, 0.0);
  }
  for (int i : own_support) {
    for (int b = 0; b < k; ++b) row[b] = own_payoff(i, opp_support[b]);
    row[k] = 0.0;
    row[k + 1] = -1.0;
    problem.AddConstraint(row, lp::Relation::kGreaterEqual, 0.0);
  }
  row.setZero();
  row.head(k).setOnes();
  problem.AddConstraint(row, lp::Relation::kEqual, 1.0);
  const lp::LpSolution s = lp::SolveLp(problem);
  if (s.status != lp::LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure, "well-support LP not optimal");
  }
  Vector y = Vector::Zero(own_payoff.cols());
  for (int b = 0; b < k; ++b) y[opp_support[b]] = std::max(0.0, s.primal[b]);
  return CleanStrategy(y);
}

// Smallest ws regret of a player who plays both own rows a0, a1 of P
// against opponent mixtures (1-t) e^b0 + t e^b1. Returns the best t.
EnvelopeMinimum BestPairMix(const Matrix& P, int a0, int a1, int b0, int b1,
                            std::vector<Line>* lines) {
  lines->clear();
  for (int i = 0; i < P.rows(); ++i) {
    for (int a : {a0, a1}) {
      const double at0 = P(i, b0) - P(a, b0);
      const double at1 = P(i, b1) - P(a, b1);
      lines->push_back({at0, at1 - at0});
    }
  }
  return MinimizeMaxOfLines(*lines);
}

Vector PairMix(int size, int a, int b, double t) {
  Vector v = Vector::Zero(size);
  v[a] += 1.0 - t;
  v[b] += t;
  return v;
}

// (x*, y*, v_r) solves (R, -R); (x_hat, y_hat, v_c) solves (-C, C), where
// v_c is the payoff y_hat secures for the column player.
struct ZeroSumPair {
  Vector x_star, y_star, x_hat, y_hat;
  double v_r = 0.0;
  double v_c = 0.0;
};

ZeroSumPair SolvePair(const BimatrixGame& game) {
  const lp::ZeroSumSolution row = lp::SolveZeroSum(game.R());
  const lp::ZeroSumSolution col = lp::SolveZeroSum(game.C().transpose());
  return {row.x, row.y, col.y, col.x, row.value, col.value};
}

WsneResult Ks07Impl(const BimatrixGame& game, const Ks07Options& options) {
  const Scored pure = Score(game, BestPureWsProfile(game), Tactic::kPure);
  std::optional<Scored> zero_sum;
  try {
    const Matrix d = 0.5 * (game.R() - game.C());
    const lp::ZeroSumSolution s = lp::SolveZeroSum(d);
    zero_sum = Score(game, {s.x, s.y}, Tactic::kZeroSum);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalFailure) throw;
    return Finish(game, "ks07", pure, WsneStatus::kPrecisionError, 1);
  }
  const Scored& first = options.pure_first ? pure : *zero_sum;
  const Scored& second = options.pure_first ? *zero_sum : pure;
  return Finish(game, "ks07", second.ws < first.ws ? second : first, WsneStatus::kOk, 1);
}

}  // namespace

MixedProfile BestPureWsProfile(const BimatrixGame& game) {
  const Matrix& R = game.R();
  const Matrix& C = game.C();
  const Vector col_best = R.colwise().maxCoeff().transpose();
  const Vector row_best = C.rowwise().maxCoeff();
  int bi = 0, bj = 0;
  double best = 2.0;
  for (int i = 0; i < game.rows(); ++i) {
    for (int j = 0; j < game.cols(); ++j) {
      const double ws = std::max(col_best[j] - R(i, j), row_best[i] - C(i, j));
      if (ws < best) {
        best = ws;
        bi = i;
        bj = j;
      }
    }
  }
  return MixedProfile::Pure(game.rows(), game.cols(), bi, bj);
}

WsneResult Ks07(const BimatrixGame& game, const Ks07Options& options) {
  return Ks07Impl(game, options);
}

WsneResult Fgss12(const BimatrixGame& game, const Fgss12Options& options) {
  const int m = game.rows();
  const int n = game.cols();
  int lp_calls = 0;
  Scored best = Score(game, BestPureWsProfile(game), Tactic::kPure);
  if (best.ws <= 0.0) return Finish(game, "fgss12", best, WsneStatus::kOk, lp_calls);
  auto consider = [&](const Scored& s) {
    if (s.ws < best.ws) best = s;
  };

  try {
    const lp::ZeroSumSolution d = lp::SolveZeroSum(0.5 * (game.R() - game.C()));
    ++lp_calls;
    consider(Score(game, {d.x, d.y}, Tactic::kZeroSum));
    const std::vector<int> sx = Support(d.x);
    const std::vector<int> sy = Support(d.y);
    const Vector y = MinimizeWsRegret(game.R(), sx, sy);
    const Vector x = MinimizeWsRegret(game.C().transpose(), sy, sx);
    lp_calls += 2;
    consider(Score(game, {x, y}, Tactic::kShifted));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalFailure) throw;
    return Finish(game, "fgss12", best, WsneStatus::kPrecisionError, lp_calls);
  }

  if (std::max(m, n) > options.size_cap_2x2) {
    return Finish(game, "fgss12", best, WsneStatus::kTimeout, lp_calls);
  }
  const Matrix ct = game.C().transpose();
  std::vector<Line> lines;
  double best_pair = best.ws;
  std::optional<MixedProfile> pair_profile;
  for (int i0 = 0; i0 < m; ++i0) {
    for (int i1 = i0 + 1; i1 < m; ++i1) {
      if (options.deadline.Expired()) {
        if (pair_profile) consider(Score(game, *pair_profile, Tactic::kSubgame2x2));
        return Finish(game, "fgss12", best, WsneStatus::kTimeout, lp_calls);
      }
      for (int j0 = 0; j0 < n; ++j0) {
        for (int j1 = j0 + 1; j1 < n; ++j1) {
          // Row regret depends only on y, column regret only on x.
          const EnvelopeMinimum ty = BestPairMix(game.R(), i0, i1, j0, j1, &lines);
          if (ty.value >= best_pair) continue;
          const EnvelopeMinimum tx = BestPairMix(ct, j0, j1, i0, i1, &lines);
          const double value = std::max(ty.value, tx.value);
          if (value < best_pair) {
            best_pair = value;
            pair_profile = MixedProfile{PairMix(m, i0, i1, tx.t), PairMix(n, j0, j1, ty.t)};
          }
        }
      }
    }
  }
  if (pair_profile) consider(Score(game, *pair_profile, Tactic::kSubgame2x2));
  return Finish(game, "fgss12", best, WsneStatus::kOk, lp_calls);
}

namespace {

WsneResult Cdffjs06528Oriented(const BimatrixGame& game, const ZeroSumPair& zs) {
  const int m = game.rows();
  const int n = game.cols();
  const double threshold = 2.0 / 3.0 - kCdffjsZ;
  int lp_calls = 2;
  std::vector<Scored> tried;
  auto attempt = [&](const MixedProfile& p, Tactic t) {
    tried.push_back(Score(game, p, t));
    return tried.back().ws <= threshold;
  };
  auto argmin = [&]() {
    const Scored* best = &tried.front();
    for (const Scored& s : tried) {
      if (s.ws < best->ws) best = &s;
    }
    return *best;
  };

  try {
    if (attempt({zs.x_hat, zs.y_star}, Tactic::kZeroSum) ||
        attempt({zs.x_star, zs.y_star}, Tactic::kZeroSum)) {
      return Finish(game, "cdffjs15_06528", tried.back(), WsneStatus::kOk, lp_calls);
    }

    // Shift the row player's probability within supp(x*) toward rows that
    // keep the column player's best payoff low.
    const int j_star = BestResponse(game, zs.x_star, Player::kCol);
    const std::vector<int> sx = Support(zs.x_star);
    double u = 0.0;
    const Vector x_b = MinimizeOpponentBest(game.C(), sx, &u);
    ++lp_calls;
    if (attempt({x_b, UnitVector(n, j_star)}, Tactic::kShifted)) {
      return Finish(game, "cdffjs15_06528", tried.back(), WsneStatus::kOk, lp_calls);
    }

    const int j_prime = BestResponse(game, x_b, Player::kCol);
    for (int i : sx) {
      if (attempt(MixedProfile::Pure(m, n, i, j_star), Tactic::kPure) ||
          attempt(MixedProfile::Pure(m, n, i, j_prime), Tactic::kPure)) {
        return Finish(game, "cdffjs15_06528", tried.back(), WsneStatus::kOk, lp_calls);
      }
    }

    // Matching-pennies-like sub-game on rows {b, s} x columns {j*, j'}: keep
    // the row pair whose weaker guaranteed payoff is largest.
    if (j_prime != j_star && sx.size() >= 2) {
      double best_guarantee = -1.0;
      MixedProfile best_profile;
      for (size_t a = 0; a < sx.size(); ++a) {
        for (size_t b = a + 1; b < sx.size(); ++b) {
          const int rows[2] = {sx[a], sx[b]};
          const int cols[2] = {j_star, j_prime};
          Matrix r_sub(2, 2), c_sub(2, 2);
          for (int p = 0; p < 2; ++p) {
            for (int q = 0; q < 2; ++q) {
              r_sub(p, q) = game.R()(rows[p], cols[q]);
              c_sub(p, q) = game.C()(rows[p], cols[q]);
            }
          }
          const lp::ZeroSumSolution row_side = lp::SolveZeroSum(r_sub);
          const lp::ZeroSumSolution col_side = lp::SolveZeroSum(c_sub.transpose());
          lp_calls += 2;
          const double guarantee = std::min(row_side.value, col_side.value);
          if (guarantee > best_guarantee) {
            best_guarantee = guarantee;
            Vector x = Vector::Zero(m);
            Vector y = Vector::Zero(n);
            for (int p = 0; p < 2; ++p) {
              x[rows[p]] = row_side.x[p];
              y[cols[p]] = col_side.x[p];
            }
            best_profile = {x, y};
          }
        }
      }
      if (attempt(best_profile, Tactic::kSubgame2x2)) {
        return Finish(game, "cdffjs15_06528", tried.back(), WsneStatus::kOk, lp_calls);
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalFailure) throw;
    const Scored fallback =
        tried.empty() ? Score(game, {zs.x_hat, zs.y_star}, Tactic::kZeroSum) : argmin();
    return Finish(game, "cdffjs15_06528", fallback, WsneStatus::kPrecisionError, lp_calls);
  }
  return Finish(game, "cdffjs15_06528", argmin(), WsneStatus::kOk, lp_calls);
}

WsneResult Dfm22Oriented(const BimatrixGame& game, const ZeroSumPair& zs,
                         const Dfm22Options& options) {
  int lp_calls = 2;
  // Low payoffs: every row earns at most v_r against y*, every column at most
  // v_c against x_hat.
  if (zs.v_r <= 0.5) {
    return Finish(game, "dfm22_12", Score(game, {zs.x_hat, zs.y_star}, Tactic::kLowPayoff),
                  WsneStatus::kOk, lp_calls);
  }
  // Low-high payoffs: re-weight supp(x*) so no column earns more than 1/2.
  double u = 0.0;
  const Vector x_prime = MinimizeOpponentBest(game.C(), Support(zs.x_star), &u);
  ++lp_calls;
  if (u <= 0.5 + 1e-12) {
    return Finish(game, "dfm22_12", Score(game, {x_prime, zs.y_star}, Tactic::kLowHigh),
                  WsneStatus::kOk, lp_calls);
  }
  // High payoffs.
  exact::KUniformOptions search;
  search.target = exact::SearchTarget::kWsEpsilon;
  search.budget = options.search_budget;
  search.stop_at = 0.5 + options.delta;
  search.deadline = options.deadline;
  const exact::KUniformResult found =
      exact::KUniformSearch(game, exact::Kappa(options.delta), search);
  const WsneStatus status = found.stopped_early || (found.exhausted && !found.timed_out)
                                ? WsneStatus::kOk
                                : WsneStatus::kTimeout;
  return Finish(game, "dfm22_12", Score(game, found.best, Tactic::kHighPayoff), status,
                lp_calls);
}

}  // namespace

WsneResult Cdffjs15_06528(const BimatrixGame& game) {
  ZeroSumPair zs;
  try {
    zs = SolvePair(game);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalFailure) throw;
    return Finish(game, "cdffjs15_06528", Score(game, BestPureWsProfile(game), Tactic::kPure),
                  WsneStatus::kPrecisionError, 2);
  }
  if (zs.v_c > zs.v_r) {
    const ZeroSumPair swapped{zs.y_hat, zs.x_hat, zs.y_star, zs.x_star, zs.v_c, zs.v_r};
    return Untranspose(Cdffjs06528Oriented(game.Transposed(), swapped));
  }
  return Cdffjs06528Oriented(game, zs);
}

WsneResult Dfm22_12(const BimatrixGame& game, const Dfm22Options& options) {
  if (!(options.delta > 0.0 && options.delta <= 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1/2]");
  }
  if (options.search_budget <= 0) {
    throw Error(ErrorCode::kBudgetZero, "search_budget must be positive");
  }
  ZeroSumPair zs;
  try {
    zs = SolvePair(game);
    if (zs.v_c > zs.v_r) {
      const ZeroSumPair swapped{zs.y_hat, zs.x_hat, zs.y_star, zs.x_star, zs.v_c, zs.v_r};
      return Untranspose(Dfm22Oriented(game.Transposed(), swapped, options));
    }
    return Dfm22Oriented(game, zs, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalFailure) throw;
    return Finish(game, "dfm22_12", Score(game, BestPureWsProfile(game), Tactic::kPure),
                  WsneStatus::kPrecisionError, 2);
  }
}

}  // namespace bimatrix::wsne
