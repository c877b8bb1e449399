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

#include "bimatrix/lp/lp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bimatrix/errors.h"

namespace bimatrix::lp {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr int kReinvertEvery = 100;
constexpr double kSingularRcond = 1e-12;

// Original variable = offset + sign * z[pos] - z[neg].
struct VarMap {
  int pos = -1;
  int neg = -1;
  double sign = 1.0;
  double offset = 0.0;
};

struct StandardForm {
  Matrix a;
  Vector b;
  Vector cost;  // minimization, zero on slack and artificial columns
  double cost_offset = 0.0;
  int num_columns = 0;
  int first_artificial = 0;
  std::vector<int> basis;
  std::vector<double> row_sign;
  std::vector<VarMap> vars;
};

StandardForm BuildStandardForm(const LpProblem& problem) {
  StandardForm sf;
  const int n = problem.num_variables();
  const double direction = problem.sense() == Sense::kMaximize ? -1.0 : 1.0;

  struct BoundRow {
    int column;
    double width;
  };
  std::vector<BoundRow> bound_rows;
  int structural = 0;
  sf.vars.resize(n);
  for (int j = 0; j < n; ++j) {
    const double lo = problem.lower()[j];
    const double hi = problem.upper()[j];
    VarMap& v = sf.vars[j];
    if (std::isfinite(lo)) {
      v.pos = structural++;
      v.offset = lo;
      if (std::isfinite(hi)) bound_rows.push_back({v.pos, hi - lo});
    } else if (std::isfinite(hi)) {
      v.pos = structural++;
      v.sign = -1.0;
      v.offset = hi;
    } else {
      v.pos = structural++;
      v.neg = structural++;
    }
  }

  const auto& constraints = problem.constraints();
  const int user_rows = static_cast<int>(constraints.size());
  const int rows = user_rows + static_cast<int>(bound_rows.size());

  // Rows over structural columns, relation and rhs before sign fixing.
  Matrix body = Matrix::Zero(rows, structural);
  Vector rhs(rows);
  std::vector<Relation> relation(rows);
  for (int i = 0; i < user_rows; ++i) {
    const Constraint& c = constraints[i];
    double r = c.rhs;
    for (int j = 0; j < n; ++j) {
      const double coef = c.coefficients[j];
      if (coef == 0.0) continue;
      const VarMap& v = sf.vars[j];
      body(i, v.pos) += coef * v.sign;
      if (v.neg >= 0) body(i, v.neg) -= coef;
      r -= coef * v.offset;
    }
    rhs[i] = r;
    relation[i] = c.relation;
  }
  for (size_t k = 0; k < bound_rows.size(); ++k) {
    const int i = user_rows + static_cast<int>(k);
    body(i, bound_rows[k].column) = 1.0;
    rhs[i] = bound_rows[k].width;
    relation[i] = Relation::kLessEqual;
  }

  int slacks = 0;
  for (Relation rel : relation) slacks += rel != Relation::kEqual;
  sf.row_sign.assign(rows, 1.0);
  std::vector<bool> needs_artificial(rows);
  int artificials = 0;
  for (int i = 0; i < rows; ++i) {
    if (rhs[i] < 0.0) sf.row_sign[i] = -1.0;
    const bool slack_is_unit =
        (relation[i] == Relation::kLessEqual && sf.row_sign[i] > 0) ||
        (relation[i] == Relation::kGreaterEqual && sf.row_sign[i] < 0);
    needs_artificial[i] = !slack_is_unit;
    artificials += needs_artificial[i];
  }

  sf.num_columns = structural + slacks + artificials;
  sf.first_artificial = structural + slacks;
  sf.a = Matrix::Zero(rows, sf.num_columns);
  sf.b.resize(rows);
  sf.basis.assign(rows, -1);
  int slack_col = structural;
  int art_col = sf.first_artificial;
  for (int i = 0; i < rows; ++i) {
    const double s = sf.row_sign[i];
    sf.a.row(i).head(structural) = s * body.row(i);
    sf.b[i] = s * rhs[i];
    if (relation[i] != Relation::kEqual) {
      const double slack = relation[i] == Relation::kLessEqual ? 1.0 : -1.0;
      sf.a(i, slack_col) = s * slack;
      if (!needs_artificial[i]) sf.basis[i] = slack_col;
      ++slack_col;
    }
    if (needs_artificial[i]) {
      sf.a(i, art_col) = 1.0;
      sf.basis[i] = art_col++;
    }
  }

  sf.cost = Vector::Zero(sf.num_columns);
  for (int j = 0; j < n; ++j) {
    const double c = direction * problem.objective()[j];
    const VarMap& v = sf.vars[j];
    sf.cost[v.pos] += c * v.sign;
    if (v.neg >= 0) sf.cost[v.neg] -= c;
    sf.cost_offset += c * v.offset;
  }
  return sf;
}

class Simplex {
 public:
  Simplex(const StandardForm& sf, const SimplexOptions& options)
      : sf_(sf), options_(options), t_(sf.a), b_(sf.b), basis_(sf.basis) {
    const int rows = static_cast<int>(sf.b.size());
    cap_ = options.iteration_cap > 0
               ? options.iteration_cap
               : 50 * (rows + sf.num_columns) + 1000;
    reinvert_every_ = std::max(kReinvertEvery, rows);
  }

  // Minimizes cost over the current basis. Artificial columns may enter only
  // when allow_artificial is set.
  LpStatus Run(const Vector& cost, bool allow_artificial) {
    Reinvert(cost);
    int stalled = 0;
    bool bland = options_.stall_window <= 0;
    double last = Objective(cost);
    int since_reinvert = 0;
    while (true) {
      const int limit = allow_artificial ? sf_.num_columns : sf_.first_artificial;
      int entering = -1;
      double best = -options_.optimality_tol;
      for (int j = 0; j < limit; ++j) {
        if (is_basic_[j]) continue;
        if (d_[j] < best) {
          entering = j;
          if (bland) break;
          best = d_[j];
        }
      }
      if (entering < 0) {
        // Confirm against a freshly inverted basis before declaring optimal.
        if (since_reinvert == 0) return LpStatus::kOptimal;
        Reinvert(cost);
        since_reinvert = 0;
        continue;
      }
      const int leaving = RatioTest(entering, bland);
      if (leaving < 0) {
        if (since_reinvert == 0) return LpStatus::kUnbounded;
        Reinvert(cost);
        since_reinvert = 0;
        continue;
      }
      Pivot(leaving, entering);
      if (++iterations_ > cap_) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex iteration cap " + std::to_string(cap_) + " reached");
      }
      if (++since_reinvert >= reinvert_every_) {
        Reinvert(cost);
        since_reinvert = 0;
      }
      const double now = Objective(cost);
      if (now < last - 1e-12 * (1.0 + std::abs(last))) {
        stalled = 0;
        last = now;
      } else if (++stalled >= options_.stall_window) {
        bland = true;
      }
    }
  }

  // Pivots basic artificials out on any usable non-artificial column.
  void DriveOutArtificials() {
    for (size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < sf_.first_artificial) continue;
      int best = -1;
      double mag = kPivotTol;
      for (int j = 0; j < sf_.first_artificial; ++j) {
        if (!is_basic_[j] && std::abs(t_(i, j)) > mag) {
          mag = std::abs(t_(i, j));
          best = j;
        }
      }
      if (best >= 0) Pivot(static_cast<int>(i), best);
    }
  }

  double Objective(const Vector& cost) const {
    double z = 0.0;
    for (size_t i = 0; i < basis_.size(); ++i) z += cost[basis_[i]] * b_[i];
    return z;
  }

  // Recomputes the tableau, basic values and reduced costs from the original
  // data to shed accumulated rounding.
  void Reinvert(const Vector& cost) {
    const int rows = static_cast<int>(basis_.size());
    is_basic_.assign(sf_.num_columns, false);
    for (int c : basis_) is_basic_[c] = true;
    if (rows == 0) {
      d_ = cost;
      y_ = Vector(0);
      return;
    }
    Matrix basis_matrix(rows, rows);
    Vector cost_b(rows);
    for (int i = 0; i < rows; ++i) {
      basis_matrix.col(i) = sf_.a.col(basis_[i]);
      cost_b[i] = cost[basis_[i]];
    }
    Eigen::PartialPivLU<Matrix> lu(basis_matrix);
    if (!(lu.rcond() > kSingularRcond)) {
      throw Error(ErrorCode::kNumericalFailure, "basis matrix is singular");
    }
    t_ = lu.solve(sf_.a);
    b_ = lu.solve(sf_.b);
    y_ = lu.transpose().solve(cost_b);
    d_ = cost - sf_.a.transpose() * y_;
    for (int c : basis_) d_[c] = 0.0;
  }

  const Vector& values() const { return b_; }
  const Vector& duals() const { return y_; }
  const std::vector<int>& basis() const { return basis_; }
  int iterations() const { return iterations_; }

 private:
  // Harris two-pass ratio test: among rows whose ratio is within the
  // feasibility tolerance of the minimum, take the largest pivot. Bland mode
  // keeps the lowest basic index among exact ties instead.
  int RatioTest(int entering, bool bland) const {
    const double tol = options_.feasibility_tol;
    double bound = kInfinity;
    for (int i = 0; i < t_.rows(); ++i) {
      const double coef = t_(i, entering);
      if (coef <= kPivotTol) continue;
      bound = std::min(bound, (std::max(b_[i], 0.0) + tol) / coef);
    }
    int leaving = -1;
    double best = 0.0;
    for (int i = 0; i < t_.rows(); ++i) {
      const double coef = t_(i, entering);
      if (coef <= kPivotTol) continue;
      const double ratio = std::max(b_[i], 0.0) / coef;
      if (ratio > bound) continue;
      if (bland) {
        if (leaving < 0 || ratio < best - 1e-12 ||
            (ratio <= best + 1e-12 && basis_[i] < basis_[leaving])) {
          best = ratio;
          leaving = i;
        }
      } else if (leaving < 0 || coef > best) {
        best = coef;
        leaving = i;
      }
    }
    return leaving;
  }

  void Pivot(int row, int col) {
    const double pivot = t_(row, col);
    t_.row(row) /= pivot;
    b_[row] /= pivot;
    Vector column = t_.col(col);
    column[row] = 0.0;
    const Eigen::RowVectorXd pivot_row = t_.row(row);
    t_.noalias() -= column * pivot_row;
    b_ -= column * b_[row];
    d_ -= d_[col] * pivot_row.transpose();
    d_[col] = 0.0;
    is_basic_[basis_[row]] = false;
    is_basic_[col] = true;
    basis_[row] = col;
  }

  const StandardForm& sf_;
  SimplexOptions options_;
  Matrix t_;
  Vector b_;
  Vector d_;
  Vector y_;
  std::vector<int> basis_;
  std::vector<bool> is_basic_;
  int iterations_ = 0;
  int cap_ = 0;
  int reinvert_every_ = kReinvertEvery;
};

double Scale(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace

LpProblem::LpProblem(int num_variables, Sense sense)
    : sense_(sense),
      objective_(Vector::Zero(num_variables)),
      lower_(Vector::Zero(num_variables)),
      upper_(Vector::Constant(num_variables, kInfinity)) {
  if (num_variables < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative variable count");
  }
}

void LpProblem::SetObjective(const Vector& c) {
  if (c.size() != objective_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "objective length mismatch");
  }
  objective_ = c;
}

void LpProblem::SetBounds(int var, double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw Error(ErrorCode::kInvalidArgument, "NaN variable bound");
  }
  lower_[var] = lo;
  upper_[var] = hi;
}

int LpProblem::AddConstraint(const Vector& coefficients, Relation relation,
                             double rhs) {
  if (coefficients.size() != objective_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "constraint length mismatch");
  }
  if (!std::isfinite(rhs) || !coefficients.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite constraint data");
  }
  constraints_.push_back({coefficients, relation, rhs});
  return static_cast<int>(constraints_.size()) - 1;
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

LpSolution SolveOnce(const LpProblem& problem, const SimplexOptions& options) {
  LpSolution solution;
  const int n = problem.num_variables();
  if (!problem.objective().allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite objective");
  }
  for (int j = 0; j < n; ++j) {
    if (problem.lower()[j] > problem.upper()[j] ||
        problem.lower()[j] == kInfinity || problem.upper()[j] == -kInfinity) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
  }

  const StandardForm sf = BuildStandardForm(problem);
  Simplex simplex(sf, options);
  const int rows = static_cast<int>(sf.b.size());

  if (sf.first_artificial < sf.num_columns) {
    Vector phase_one = Vector::Zero(sf.num_columns);
    phase_one.tail(sf.num_columns - sf.first_artificial).setOnes();
    simplex.Run(phase_one, /*allow_artificial=*/true);
    const double infeasibility = simplex.Objective(phase_one);
    const double floor = simplex.values().size() ? simplex.values().minCoeff() : 0.0;
    if (!(floor >= -options.residual_cap * (1.0 + Scale(sf.b)))) {
      throw Error(ErrorCode::kNumericalFailure, "phase one ended on an infeasible basis");
    }
    if (infeasibility > options.feasibility_tol * (1.0 + Scale(sf.b))) {
      solution.status = LpStatus::kInfeasible;
      solution.iterations = simplex.iterations();
      return solution;
    }
    simplex.DriveOutArtificials();
  }

  const LpStatus status = simplex.Run(sf.cost, /*allow_artificial=*/false);
  solution.iterations = simplex.iterations();
  if (status == LpStatus::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  Vector z = Vector::Zero(sf.num_columns);
  const Vector& values = simplex.values();
  for (int i = 0; i < rows; ++i) {
    const double v = values[i];
    if (!(v >= -options.residual_cap * (1.0 + Scale(sf.b)))) {
      throw Error(ErrorCode::kNumericalFailure,
                  "basic variable negative after refinement: " + std::to_string(v));
    }
    z[simplex.basis()[i]] = std::max(v, 0.0);
  }
  for (int j = sf.first_artificial; j < sf.num_columns; ++j) {
    if (z[j] > options.residual_cap * (1.0 + Scale(sf.b))) {
      throw Error(ErrorCode::kNumericalFailure, "artificial variable left positive");
    }
  }

  solution.primal.resize(n);
  for (int j = 0; j < n; ++j) {
    const VarMap& v = sf.vars[j];
    double x = v.offset + v.sign * z[v.pos];
    if (v.neg >= 0) x -= z[v.neg];
    solution.primal[j] = x;
  }

  const double direction = problem.sense() == Sense::kMaximize ? -1.0 : 1.0;
  const auto& constraints = problem.constraints();
  const int user_rows = static_cast<int>(constraints.size());
  solution.dual.resize(user_rows);
  for (int i = 0; i < user_rows; ++i) {
    solution.dual[i] = direction * sf.row_sign[i] * simplex.duals()[i];
  }
  solution.objective = problem.objective().dot(solution.primal);

  for (int i = 0; i < user_rows; ++i) {
    const Constraint& c = constraints[i];
    const double lhs = c.coefficients.dot(solution.primal);
    const double scale = 1.0 + std::abs(c.rhs) + Scale(c.coefficients);
    double violation = 0.0;
    switch (c.relation) {
      case Relation::kLessEqual:
        violation = lhs - c.rhs;
        break;
      case Relation::kGreaterEqual:
        violation = c.rhs - lhs;
        break;
      case Relation::kEqual:
        violation = std::abs(lhs - c.rhs);
        break;
    }
    if (!(violation <= options.residual_cap * scale)) {
      throw Error(ErrorCode::kNumericalFailure,
                  "constraint " + std::to_string(i) + " violated by " +
                      std::to_string(violation));
    }
  }
  solution.status = LpStatus::kOptimal;
  return solution;
}

}  // namespace

LpSolution SolveLp(const LpProblem& problem, const SimplexOptions& options) {
  try {
    return SolveOnce(problem, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNumericalFailure || options.stall_window <= 0) throw;
  }
  // Degenerate problems can drift under Dantzig pricing; retry with Bland's
  // rule from the first pivot.
  SimplexOptions bland = options;
  bland.stall_window = 0;
  return SolveOnce(problem, bland);
}

}  // namespace bimatrix::lp
