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

#include "oracle/oracles.h"

#include <algorithm>
#include <cmath>
#include <random>

namespace bimatrix::oracle {

BruteMetrics PureDeviationMetrics(const Matrix& R, const Matrix& C,
                                  const Vector& x, const Vector& y,
                                  double threshold) {
  const int m = static_cast<int>(R.rows());
  const int n = static_cast<int>(R.cols());
  std::vector<double> row_pay(m, 0.0), col_pay(n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) row_pay[i] += R(i, j) * y[j];
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) col_pay[j] += C(i, j) * x[i];
  double current_row = 0.0, current_col = 0.0;
  for (int i = 0; i < m; ++i) current_row += x[i] * row_pay[i];
  for (int j = 0; j < n; ++j) current_col += y[j] * col_pay[j];

  BruteMetrics out{0.0, 0.0, 0.0};
  double ws_row = 0.0, ws_col = 0.0;
  for (int i = 0; i < m; ++i) {
    out.regret_row = std::max(out.regret_row, row_pay[i] - current_row);
    if (x[i] > threshold) {
      for (int k = 0; k < m; ++k) ws_row = std::max(ws_row, row_pay[k] - row_pay[i]);
    }
  }
  for (int j = 0; j < n; ++j) {
    out.regret_col = std::max(out.regret_col, col_pay[j] - current_col);
    if (y[j] > threshold) {
      for (int k = 0; k < n; ++k) ws_col = std::max(ws_col, col_pay[k] - col_pay[j]);
    }
  }
  out.ws = std::max(ws_row, ws_col);
  return out;
}

bool MixedEquilibrium2x2(const Matrix& R, const Matrix& C, Vector* x, Vector* y) {
  // Row indifference fixes y: R00 q + R01 (1-q) = R10 q + R11 (1-q).
  const double dr = R(0, 0) - R(0, 1) - R(1, 0) + R(1, 1);
  const double dc = C(0, 0) - C(1, 0) - C(0, 1) + C(1, 1);
  if (dr == 0.0 || dc == 0.0) return false;
  const double q = (R(1, 1) - R(0, 1)) / dr;
  const double p = (C(1, 1) - C(1, 0)) / dc;
  if (p <= 0.0 || p >= 1.0 || q <= 0.0 || q >= 1.0) return false;
  *x = Vector(2);
  *y = Vector(2);
  (*x) << p, 1.0 - p;
  (*y) << q, 1.0 - q;
  return true;
}

Matrix UniformMatrix(int m, int n, uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Matrix out(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = dist(gen);
  return out;
}

Vector UniformSimplexPoint(int n, uint32_t seed) {
  std::mt19937 gen(seed);
  std::exponential_distribution<double> dist(1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = dist(gen);
  return v / v.sum();
}

double MultisetCount(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n + i - 1) / i;
  return std::round(c);
}

Vector Softmax(const Vector& scores, double temperature) {
  Vector out(scores.size());
  double total = 0.0;
  for (int i = 0; i < scores.size(); ++i) {
    out[i] = std::exp(scores[i] / temperature);
    total += out[i];
  }
  return out / total;
}

}  // namespace bimatrix::oracle
