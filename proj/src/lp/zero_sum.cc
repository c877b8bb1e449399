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

#include "bimatrix/lp/zero_sum.h"

#include "bimatrix/errors.h"

namespace bimatrix::lp {

ZeroSumSolution SolveZeroSum(const Matrix& payoff, const SimplexOptions& options) {
  const int m = static_cast<int>(payoff.rows());
  const int n = static_cast<int>(payoff.cols());
  if (m == 0 || n == 0 || !payoff.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "zero-sum payoff must be finite and non-empty");
  }
  // Variables: x_0..x_{m-1}, t. t is bounded below by a value it can never
  // reach at the optimum, which keeps it a plain shifted column.
  LpProblem problem(m + 1, Sense::kMaximize);
  problem.SetObjectiveCoefficient(m, 1.0);
  problem.SetBounds(m, payoff.minCoeff() - 1.0, kInfinity);
  Vector row(m + 1);
  for (int j = 0; j < n; ++j) {
    row.head(m) = payoff.col(j);
    row[m] = -1.0;
    problem.AddConstraint(row, Relation::kGreaterEqual, 0.0);
  }
  row.head(m).setOnes();
  row[m] = 0.0;
  problem.AddConstraint(row, Relation::kEqual, 1.0);

  const LpSolution lp = SolveLp(problem, options);
  if (lp.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kNumericalFailure,
                std::string("zero-sum LP ended ") + LpStatusName(lp.status));
  }

  ZeroSumSolution out;
  out.lp_iterations = lp.iterations;
  out.value = lp.objective;
  out.x = CleanStrategy(lp.primal.head(m));
  out.y = CleanStrategy(-lp.dual.head(n));
  out.row_security = (payoff.transpose() * out.x).minCoeff();
  out.col_security = (payoff * out.y).maxCoeff();
  return out;
}

}  // namespace bimatrix::lp
