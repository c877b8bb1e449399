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

#include "bimatrix/exact/k_uniform.h"

#include <cmath>
#include <limits>
#include <vector>

#include "bimatrix/errors.h"

namespace bimatrix::exact {
namespace {

// Advances a nondecreasing index vector over {0..n-1}. Returns the first
// position that changed, or -1 after the last multiset.
int NextMultiset(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int p = k - 1; p >= 0; --p) {
    if (idx[p] < n - 1) {
      const int v = idx[p] + 1;
      for (int q = p; q < k; ++q) idx[q] = v;
      return p;
    }
  }
  return -1;
}

Vector Histogram(const std::vector<int>& idx, int size) {
  Vector out = Vector::Zero(size);
  for (int i : idx) out[i] += 1.0;
  return out / static_cast<double>(idx.size());
}

}  // namespace

int Kappa(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa needs delta in (0, 1)");
  }
  return static_cast<int>(std::ceil(2.0 / (delta * delta) * std::log(1.0 / delta)));
}

int KForApproxNe(double epsilon, int n) {
  return std::max(1, static_cast<int>(std::ceil(12.0 * std::log(n) / (epsilon * epsilon))));
}

int KForWsne(double epsilon, int n) {
  return std::max(1, static_cast<int>(std::ceil(2.0 * std::log(2.0 * n) / (epsilon * epsilon))));
}

KUniformResult KUniformSearch(const BimatrixGame& game, int k,
                              const KUniformOptions& options) {
  if (options.budget <= 0) throw Error(ErrorCode::kBudgetZero, "k-uniform budget must be positive");
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  const int m = game.rows();
  const int n = game.cols();
  const Matrix& R = game.R();
  const Matrix col_t = game.C().transpose();
  const bool ws = options.target == SearchTarget::kWsEpsilon;
  const double inv_k = 1.0 / k;

  KUniformResult result;
  result.metric = std::numeric_limits<double>::infinity();
  std::vector<int> best_rows, best_cols;

  std::vector<int> rows(k, 0);
  bool done = false;
  while (!done) {
    const Vector x = Histogram(rows, m);
    const Vector cx = col_t * x;
    const double cx_max = cx.maxCoeff();

    std::vector<int> cols(k, 0);
    Vector ry_sum = k * R.col(0);
    while (true) {
      if (result.evaluated >= options.budget) {
        result.budget_hit = true;
        done = true;
        break;
      }
      if ((result.evaluated & 1023) == 0 && options.deadline.Expired()) {
        result.timed_out = true;
        done = true;
        break;
      }
      ++result.evaluated;

      double row_part, col_part;
      const double ry_max = ry_sum.maxCoeff() * inv_k;
      if (ws) {
        double worst = std::numeric_limits<double>::infinity();
        for (int i : rows) worst = std::min(worst, ry_sum[i] * inv_k);
        row_part = ry_max - worst;
        double worst_c = std::numeric_limits<double>::infinity();
        for (int j : cols) worst_c = std::min(worst_c, cx[j]);
        col_part = cx_max - worst_c;
      } else {
        double xry = 0.0;
        for (int i : rows) xry += ry_sum[i];
        row_part = ry_max - xry * inv_k * inv_k;
        double ycx = 0.0;
        for (int j : cols) ycx += cx[j];
        col_part = cx_max - ycx * inv_k;
      }
      const double metric = std::max(0.0, std::max(row_part, col_part));
      if (metric < result.metric) {
        result.metric = metric;
        best_rows = rows;
        best_cols = cols;
        if (options.stop_at && metric <= *options.stop_at) {
          result.stopped_early = true;
          done = true;
          break;
        }
      }

      // Positions p..k-1 held (cols[p] - 1, n-1, ..., n-1) before the step.
      const int p = NextMultiset(cols, n);
      if (p < 0) break;
      ry_sum -= R.col(cols[p] - 1) + (k - 1 - p) * R.col(n - 1);
      ry_sum += (k - p) * R.col(cols[p]);
    }
    if (!done && NextMultiset(rows, m) < 0) {
      result.exhausted = true;
      done = true;
    }
  }
  result.best = {Histogram(best_rows, m), Histogram(best_cols, n)};
  result.metric = std::min(result.metric, 1.0);
  return result;
}

}  // namespace bimatrix::exact
