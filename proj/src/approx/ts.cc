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

#include "bimatrix/approx/ts.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bimatrix/approx/mixing.h"
#include "bimatrix/errors.h"
#include "bimatrix/lp/lp.h"
#include "bimatrix/metrics.h"
#include "bimatrix/rng.h"

namespace bimatrix::approx {
namespace {

struct Objective {
  double f_row = 0.0;
  double f_col = 0.0;
  double f = 0.0;
};

Objective Evaluate(const BimatrixGame& game, const MixedProfile& p) {
  const Vector ry = game.R() * p.y;
  const Vector cx = game.C().transpose() * p.x;
  Objective o;
  o.f_row = std::max(0.0, ry.maxCoeff() - p.x.dot(ry));
  o.f_col = std::max(0.0, cx.maxCoeff() - p.y.dot(cx));
  o.f = std::max(o.f_row, o.f_col);
  return o;
}

MixedProfile InitialProfile(const BimatrixGame& game, const TsOptions& options) {
  switch (options.init) {
    case InitMode::kUniform:
      return MixedProfile::Uniform(game.rows(), game.cols());
    case InitMode::kCustom:
      if (!options.initial_profile) {
        throw Error(ErrorCode::kInvalidArgument, "custom init needs initial_profile");
      }
      ValidateProfile(*options.initial_profile, game.rows(), game.cols());
      return *options.initial_profile;
    case InitMode::kRandom:
      break;
  }
  CounterRng row_rng(options.seed, 2);
  CounterRng col_rng(options.seed, 3);
  return {row_rng.NextSimplexPoint(game.rows()), col_rng.NextSimplexPoint(game.cols())};
}

// Minimizes max(f_R, f_C) over the strategy of the player with the larger
// regret, holding the other fixed. Both terms are piecewise linear in that
// strategy, so one LP in (strategy, s) suffices.
void Equalize(const BimatrixGame& game, MixedProfile* p, Objective* obj, int* lp_calls) {
  const bool move_row = obj->f_row > obj->f_col;
  // The mover's payoff matrix U (own actions by rows) and the other's V.
  const Matrix& own = move_row ? game.R() : game.C();
  const Matrix& other = move_row ? game.C() : game.R();
  const Vector& fixed = move_row ? p->y : p->x;
  const int k = move_row ? game.rows() : game.cols();

  // Payoff vector of the mover against the fixed strategy.
  const Vector u = move_row ? Vector(own * fixed) : Vector(own.transpose() * fixed);
  // Deviation payoffs of the fixed player, linear in the mover's strategy:
  // dev_j(s) = (other_j - other * fixed) . s.
  const Matrix dev = move_row ? Matrix(other.transpose()) : Matrix(other);
  const Vector other_vs_fixed = move_row ? Vector(other * fixed) : Vector(other.transpose() * fixed);

  lp::LpProblem problem(k + 1, lp::Sense::kMinimize);
  problem.SetObjectiveCoefficient(k, 1.0);
  Vector row(k + 1);
  row.head(k) = u;
  row[k] = 1.0;
  problem.AddConstraint(row, lp::Relation::kGreaterEqual, u.maxCoeff());
  for (int j = 0; j < dev.rows(); ++j) {
    row.head(k) = dev.row(j).transpose() - other_vs_fixed;
    row[k] = -1.0;
    problem.AddConstraint(row, lp::Relation::kLessEqual, 0.0);
  }
  row.head(k).setOnes();
  row[k] = 0.0;
  problem.AddConstraint(row, lp::Relation::kEqual, 1.0);
  const lp::LpSolution s = lp::SolveLp(problem);
  ++*lp_calls;
  if (s.status != lp::LpStatus::kOptimal) return;

  MixedProfile moved = *p;
  (move_row ? moved.x : moved.y) = CleanStrategy(s.primal.head(k));
  const Objective after = Evaluate(game, moved);
  if (after.f <= obj->f) {
    *p = moved;
    *obj = after;
  }
}

struct Direction {
  MixedProfile target;
  double dini = 0.0;
  double rho = 0.0;
  Vector w;
  Vector z;
};

// min gamma over (x', y', gamma) subject to one constraint per active best
// response of each active regret term:
//   row i:    (R^i - x'R) y' - (Ry) x' - gamma <= f_R - x'Ry
//   column j: (C_j - Cy) x' - (x'C) y' - gamma <= f_C - x'Cy
// The left sides minus the right sides are the one-sided derivatives of f_R
// and f_C toward (x', y').
Direction MinimizeDini(const BimatrixGame& game, const MixedProfile& p, const Objective& obj,
                       double active_tol, int* lp_calls) {
  const int m = game.rows();
  const int n = game.cols();
  const Matrix& R = game.R();
  const Matrix& C = game.C();
  const Vector ry = R * p.y;
  const Vector rx = R.transpose() * p.x;
  const Vector cx = C.transpose() * p.x;
  const Vector cy = C * p.y;
  const double xry = p.x.dot(ry);
  const double xcy = p.x.dot(cy);

  lp::LpProblem problem(m + n + 1, lp::Sense::kMinimize);
  problem.SetObjectiveCoefficient(m + n, 1.0);
  problem.SetBounds(m + n, -10.0, lp::kInfinity);

  std::vector<int> active_rows, active_cols;
  if (obj.f_row >= obj.f - active_tol) {
    const double top = ry.maxCoeff();
    for (int i = 0; i < m; ++i) {
      if (ry[i] >= top - active_tol) active_rows.push_back(i);
    }
  }
  if (obj.f_col >= obj.f - active_tol) {
    const double top = cx.maxCoeff();
    for (int j = 0; j < n; ++j) {
      if (cx[j] >= top - active_tol) active_cols.push_back(j);
    }
  }
  Vector row(m + n + 1);
  for (int i : active_rows) {
    row.head(m) = -ry;
    row.segment(m, n) = R.row(i).transpose() - rx;
    row[m + n] = -1.0;
    problem.AddConstraint(row, lp::Relation::kLessEqual, obj.f_row - xry);
  }
  for (int j : active_cols) {
    row.head(m) = C.col(j) - cy;
    row.segment(m, n) = -cx;
    row[m + n] = -1.0;
    problem.AddConstraint(row, lp::Relation::kLessEqual, obj.f_col - xcy);
  }
  row.setZero();
  row.head(m).setOnes();
  problem.AddConstraint(row, lp::Relation::kEqual, 1.0);
  row.setZero();
  row.segment(m, n).setOnes();
  problem.AddConstraint(row, lp::Relation::kEqual, 1.0);

  const lp::LpSolution s = lp::SolveLp(problem);
  ++*lp_calls;
  if (s.status != lp::LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure, "direction LP did not reach optimality");
  }

  Direction d;
  d.target = {CleanStrategy(s.primal.head(m)), CleanStrategy(s.primal.segment(m, n))};
  d.dini = s.primal[m + n];
  // Multipliers of <= rows in a minimization are nonpositive shadow prices.
  Vector w = Vector::Zero(m);
  Vector z = Vector::Zero(n);
  int k = 0;
  for (int i : active_rows) w[i] = std::max(0.0, -s.dual[k++]);
  for (int j : active_cols) z[j] = std::max(0.0, -s.dual[k++]);
  const double row_mass = w.sum();
  const double col_mass = z.sum();
  d.rho = row_mass + col_mass > 0.0 ? row_mass / (row_mass + col_mass) : 0.0;
  d.w = row_mass > 1e-12 ? Vector(w / row_mass)
                         : UnitVector(m, BestResponse(game, p.y, Player::kRow));
  d.z = col_mass > 1e-12 ? Vector(z / col_mass)
                         : UnitVector(n, BestResponse(game, p.x, Player::kCol));
  return d;
}

// f along (x + e dx, y + e dy) in O(m + n) per evaluation.
class Segment {
 public:
  Segment(const BimatrixGame& game, const MixedProfile& from, const MixedProfile& to)
      : dx_(to.x - from.x), dy_(to.y - from.y) {
    const Matrix& R = game.R();
    const Matrix& C = game.C();
    ry_ = R * from.y;
    rdy_ = R * dy_;
    cx_ = C.transpose() * from.x;
    cdx_ = C.transpose() * dx_;
    const Vector cy = C * from.y;
    const Vector cdy = C * dy_;
    r0_ = from.x.dot(ry_);
    r1_ = dx_.dot(ry_) + from.x.dot(rdy_);
    r2_ = dx_.dot(rdy_);
    c0_ = from.x.dot(cy);
    c1_ = dx_.dot(cy) + from.x.dot(cdy);
    c2_ = dx_.dot(cdy);
  }

  double F(double e) const {
    const double row_best = (ry_ + e * rdy_).maxCoeff();
    const double col_best = (cx_ + e * cdx_).maxCoeff();
    const double f_row = row_best - (r0_ + e * (r1_ + e * r2_));
    const double f_col = col_best - (c0_ + e * (c1_ + e * c2_));
    return std::max(f_row, f_col);
  }

 private:
  Vector dx_, dy_, ry_, rdy_, cx_, cdx_;
  double r0_, r1_, r2_, c0_, c1_, c2_;
};

// Scans dyadic and uniform step sizes, then refines the best bracket by
// golden-section search.
double LineSearch(const Segment& seg, double* best_f) {
  std::vector<double> steps;
  for (int k = 0; k <= 40; ++k) steps.push_back(std::ldexp(1.0, -k));
  for (int k = 1; k < 64; ++k) steps.push_back(k / 64.0);
  steps.push_back(0.0);
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  size_t best = 0;
  std::vector<double> values(steps.size());
  for (size_t k = 0; k < steps.size(); ++k) {
    values[k] = seg.F(steps[k]);
    if (values[k] < values[best]) best = k;
  }
  double lo = steps[best == 0 ? 0 : best - 1];
  double hi = steps[std::min(best + 1, steps.size() - 1)];
  double e = steps[best];
  double fe = values[best];
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - phi * (hi - lo);
  double b = lo + phi * (hi - lo);
  double fa = seg.F(a);
  double fb = seg.F(b);
  for (int it = 0; it < 64; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - phi * (hi - lo);
      fa = seg.F(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + phi * (hi - lo);
      fb = seg.F(b);
    }
    if (fa < fe) {
      e = a;
      fe = fa;
    }
    if (fb < fe) {
      e = b;
      fe = fb;
    }
  }
  *best_f = fe;
  return e;
}

}  // namespace

TsState TsDescent(const BimatrixGame& game, const TsOptions& options) {
  if (!(options.delta > 0.0)) throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  TsState state;
  state.delta = options.delta;
  MixedProfile p = InitialProfile(game, options);
  Objective obj = Evaluate(game, p);

  while (true) {
    if (obj.f <= options.f_exit) {
      state.termination = TsTermination::kSmallObjective;
      state.dini_value = 0.0;
      state.rho = obj.f_row >= obj.f_col ? 1.0 : 0.0;
      state.w = UnitVector(game.rows(), BestResponse(game, p.y, Player::kRow));
      state.z = UnitVector(game.cols(), BestResponse(game, p.x, Player::kCol));
      break;
    }
    if (std::abs(obj.f_row - obj.f_col) > options.active_tol) {
      Equalize(game, &p, &obj, &state.lp_calls);
    }
    const Direction dir = MinimizeDini(game, p, obj, options.active_tol, &state.lp_calls);
    state.dini_value = dir.dini;
    state.rho = dir.rho;
    state.w = dir.w;
    state.z = dir.z;
    if (dir.dini >= -options.delta) {
      state.termination = TsTermination::kStationary;
      break;
    }
    if (state.rounds >= options.round_cap) {
      state.termination = TsTermination::kRoundCap;
      break;
    }
    if (options.deadline.Expired()) {
      state.termination = TsTermination::kTimeout;
      break;
    }
    const Segment seg(game, p, dir.target);
    double f_new = obj.f;
    const double step = LineSearch(seg, &f_new);
    MixedProfile moved{CleanStrategy(p.x + step * (dir.target.x - p.x)),
                       CleanStrategy(p.y + step * (dir.target.y - p.y))};
    const Objective after = Evaluate(game, moved);
    if (!(after.f < obj.f)) {
      state.termination = TsTermination::kNoProgress;
      break;
    }
    p = moved;
    obj = after;
    ++state.rounds;
    state.f_history.push_back(obj.f);
  }
  state.profile = p;
  state.f_row = obj.f_row;
  state.f_col = obj.f_col;
  state.f = obj.f;
  return state;
}

namespace {

void FillFromState(const TsState& state, SearchMixResult* result) {
  result->pre_mix = state.profile;
  result->lp_calls = state.lp_calls;
  result->iterations = state.rounds;
  if (state.termination == TsTermination::kRoundCap) {
    result->status = RunStatus::kRoundCapExceeded;
  } else if (state.termination == TsTermination::kTimeout) {
    result->status = RunStatus::kTimeout;
  }
}

}  // namespace

SearchMixResult MixTs07(const BimatrixGame& game, const TsState& state) {
  SearchMixResult result;
  result.algorithm = "ts07";
  FillFromState(state, &result);
  const Vector& x = state.profile.x;
  const Vector& y = state.profile.y;
  AddCandidate(game, state.profile, "stationary", &result);
  // (alpha x* + (1 - alpha) w*, z*) and (w*, beta y* + (1 - beta) z*).
  const SegmentOptimum a = MinimizeOverRowSegment(game, state.w, x, state.z);
  result.candidates.push_back({a.profile, a.epsilon, "alpha_mix"});
  const SegmentOptimum b = MinimizeOverColSegment(game, state.w, state.z, y);
  result.candidates.push_back({b.profile, b.epsilon, "beta_mix"});
  SelectArgmin(&result);
  return result;
}

SearchMixResult MixDfm22(const BimatrixGame& game, const TsState& state) {
  SearchMixResult result = MixTs07(game, state);
  result.algorithm = "dfm22_13";
  const Vector& x = state.profile.x;
  const Vector& y = state.profile.y;
  const Vector& w = state.w;
  const Vector& z = state.z;
  AddCandidate(game, {w, z}, "best_responses", &result);

  // y_hat = (z* + y*)/2 with w_hat a best response to it.
  const Vector y_hat = 0.5 * (z + y);
  const Vector w_hat = UnitVector(game.rows(), BestResponse(game, y_hat, Player::kRow));
  const SegmentOptimum p = MinimizeOverRowSegment(game, w_hat, w, z);
  result.candidates.push_back({p.profile, p.epsilon, "p_mix"});
  const SegmentOptimum q = MinimizeOverColSegment(game, w, y_hat, z);
  result.candidates.push_back({q.profile, q.epsilon, "q_mix"});

  // The role-symmetric pair around x_hat = (w* + x*)/2.
  const Vector x_hat = 0.5 * (w + x);
  const Vector z_hat = UnitVector(game.cols(), BestResponse(game, x_hat, Player::kCol));
  const SegmentOptimum ps = MinimizeOverColSegment(game, w, z_hat, z);
  result.candidates.push_back({ps.profile, ps.epsilon, "p_mix_sym"});
  const SegmentOptimum qs = MinimizeOverRowSegment(game, x_hat, w, z);
  result.candidates.push_back({qs.profile, qs.epsilon, "q_mix_sym"});
  SelectArgmin(&result);
  return result;
}

SearchMixResult Ts07(const BimatrixGame& game, const TsOptions& options, TsState* state_out) {
  TsState state = TsDescent(game, options);
  SearchMixResult result = MixTs07(game, state);
  if (state_out != nullptr) *state_out = std::move(state);
  return result;
}

SearchMixResult Dfm22_13(const BimatrixGame& game, const TsOptions& options,
                         TsState* state_out) {
  TsState state = TsDescent(game, options);
  SearchMixResult result = MixDfm22(game, state);
  if (state_out != nullptr) *state_out = std::move(state);
  return result;
}

}  // namespace bimatrix::approx
