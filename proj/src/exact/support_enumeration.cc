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

#include "bimatrix/exact/support_enumeration.h"

#include <algorithm>

#include "bimatrix/errors.h"

namespace bimatrix::exact {
namespace {

constexpr double kNegativeTol = 1e-12;
constexpr double kDeviationTol = 1e-9;
constexpr double kDuplicateTol = 1e-9;

// Next size-k subset of {0..n-1} in lexicographic order.
bool NextSubset(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  for (int p = k - 1; p >= 0; --p) {
    if (s[p] < n - k + p) {
      ++s[p];
      for (int q = p + 1; q < k; ++q) s[q] = s[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> FirstSubset(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

// Solves A[own, other] p = v 1 with 1'p = 1, where `payoff` is indexed
// (own action, other action). Returns false when the system is singular.
bool Indifference(const Matrix& payoff, const std::vector<int>& own,
                  const std::vector<int>& other, Vector* probs, double* value) {
  const int k = static_cast<int>(own.size());
  Matrix a = Matrix::Zero(k + 1, k + 1);
  Vector rhs = Vector::Zero(k + 1);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) a(r, c) = payoff(own[r], other[c]);
    a(r, k) = -1.0;
  }
  a.row(k).head(k).setOnes();
  rhs[k] = 1.0;
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) return false;
  const Vector sol = lu.solve(rhs);
  *probs = sol.head(k);
  *value = sol[k];
  return true;
}

Vector Expand(const Vector& probs, const std::vector<int>& support, int size) {
  Vector out = Vector::Zero(size);
  for (size_t i = 0; i < support.size(); ++i) out[support[i]] = probs[i];
  return out;
}

}  // namespace

SupportEnumerationResult SupportEnumeration(const BimatrixGame& game,
                                            std::optional<int> max_support,
                                            const Deadline& deadline) {
  const int m = game.rows();
  const int n = game.cols();
  const int limit = max_support.value_or(std::min(m, n));
  if (limit < 1 || limit > std::min(m, n)) {
    throw Error(ErrorCode::kInvalidArgument, "max_support must lie in [1, min(m, n)]");
  }
  const Matrix col_t = game.C().transpose();
  SupportEnumerationResult result;

  for (int k = 1; k <= limit; ++k) {
    std::vector<int> rows = FirstSubset(k);
    do {
      std::vector<int> cols = FirstSubset(k);
      do {
        if (deadline.Expired()) {
          result.timed_out = true;
          return result;
        }
        Vector y_s, x_s;
        double v = 0.0, u = 0.0;
        // Row indifference over `rows` pins y on `cols`, and vice versa.
        if (!Indifference(game.R(), rows, cols, &y_s, &v) ||
            !Indifference(col_t, cols, rows, &x_s, &u)) {
          ++result.singular_systems;
          continue;
        }
        if (x_s.minCoeff() < -kNegativeTol || y_s.minCoeff() < -kNegativeTol) continue;
        const Vector x = CleanStrategy(Expand(x_s, rows, m));
        const Vector y = CleanStrategy(Expand(y_s, cols, n));
        if ((game.R() * y).maxCoeff() > x.dot(game.R() * y) + kDeviationTol) continue;
        if ((col_t * x).maxCoeff() > y.dot(col_t * x) + kDeviationTol) continue;
        const bool duplicate = std::any_of(
            result.equilibria.begin(), result.equilibria.end(), [&](const MixedProfile& e) {
              return (e.x - x).cwiseAbs().maxCoeff() <= kDuplicateTol &&
                     (e.y - y).cwiseAbs().maxCoeff() <= kDuplicateTol;
            });
        if (!duplicate) result.equilibria.push_back({x, y});
      } while (NextSubset(cols, n));
    } while (NextSubset(rows, m));
  }
  return result;
}

}  // namespace bimatrix::exact
