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

#ifndef BIMATRIX_LP_LP_H_
#define BIMATRIX_LP_LP_H_

#include <limits>
#include <vector>

#include "bimatrix/game.h"

namespace bimatrix::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct Constraint {
  Vector coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// Variables default to [0, +inf). Either bound may be infinite.
class LpProblem {
 public:
  LpProblem(int num_variables, Sense sense);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  Sense sense() const { return sense_; }
  const Vector& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }

  void SetObjective(const Vector& c);
  void SetObjectiveCoefficient(int var, double c) { objective_[var] = c; }
  void SetBounds(int var, double lo, double hi);
  // Returns the index of the new constraint.
  int AddConstraint(const Vector& coefficients, Relation relation, double rhs);

 private:
  Sense sense_;
  Vector objective_;
  Vector lower_;
  Vector upper_;
  std::vector<Constraint> constraints_;
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double residual_cap = 1e-8;
  // Consecutive non-improving pivots before switching to Bland's rule.
  // 0 uses Bland's rule throughout. SolveLp retries a failed solve that way.
  int stall_window = 50;
  // 0 selects 50 * (rows + columns) + 1000.
  int iteration_cap = 0;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Vector primal;
  // One multiplier per constraint: d(objective)/d(rhs) at the optimum.
  Vector dual;
  double objective = 0.0;
  int iterations = 0;
};

// Two-phase primal simplex on a dense tableau. Infeasible and unbounded
// problems are statuses; NumericalFailure is thrown if the iteration cap is
// hit or the final basis misses the residual cap.
LpSolution SolveLp(const LpProblem& problem, const SimplexOptions& options = {});

const char* LpStatusName(LpStatus status);

}  // namespace bimatrix::lp

#endif  // BIMATRIX_LP_LP_H_
