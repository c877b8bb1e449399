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

#include "bimatrix/exact/lemke_howson.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bimatrix/errors.h"

namespace bimatrix::exact {
namespace {

using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
struct Arith;

template <>
struct Arith<double> {
  static double From(double v) { return v; }
  static double ToDouble(double v) { return v; }
  static bool Positive(double v) { return v > 1e-12; }
  static int Compare(double a, double b) {
    const double tol = 1e-12 * (1.0 + std::abs(a) + std::abs(b));
    if (a < b - tol) return -1;
    if (a > b + tol) return 1;
    return 0;
  }
};

template <>
struct Arith<Rational> {
  static Rational From(double v) { return Rational(v); }
  static double ToDouble(const Rational& v) { return v.convert_to<double>(); }
  static bool Positive(const Rational& v) { return v > 0; }
  static int Compare(const Rational& a, const Rational& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
  }
};

// Dense tableau whose columns are indexed by label, plus a trailing rhs
// column. The slack labels form the initial identity basis, so their columns
// hold the basis inverse used by the lexicographic ratio test.
template <typename Scalar>
class Tableau {
 public:
  Tableau(int rows, int labels, std::vector<int> slack_labels)
      : rows_(rows),
        cols_(labels + 1),
        data_(static_cast<size_t>(rows) * (labels + 1), Arith<Scalar>::From(0.0)),
        basis_(std::move(slack_labels)) {
    for (int r = 0; r < rows_; ++r) {
      at(r, basis_[r]) = Arith<Scalar>::From(1.0);
      at(r, cols_ - 1) = Arith<Scalar>::From(1.0);
    }
    slack_ = basis_;
  }

  Scalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const std::vector<int>& basis() const { return basis_; }

  // Brings `label` into the basis and returns the label that leaves.
  int Enter(int label, double guard) {
    int row = -1;
    for (int r = 0; r < rows_; ++r) {
      if (!Arith<Scalar>::Positive(at(r, label))) continue;
      if (row < 0 || LexLess(r, row, label)) row = r;
    }
    if (row < 0) {
      throw Error(ErrorCode::kNumericalFailure,
                  "no admissible pivot row for label " + std::to_string(label + 1));
    }
    const int leaving = basis_[row];
    Pivot(row, label, guard);
    basis_[row] = label;
    return leaving;
  }

  // Value of the basic variable carrying `label`, or 0 if nonbasic.
  double Value(int label) const {
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] == label) return Arith<Scalar>::ToDouble(at(r, cols_ - 1));
    }
    return 0.0;
  }

 private:
  // Compares rows a and b by (rhs, basis inverse) / entering coefficient.
  bool LexLess(int a, int b, int label) const {
    const Scalar& pa = at(a, label);
    const Scalar& pb = at(b, label);
    auto key = [&](int r, int c, const Scalar& p) { return Scalar(at(r, c) / p); };
    int cmp = Arith<Scalar>::Compare(key(a, cols_ - 1, pa), key(b, cols_ - 1, pb));
    for (size_t k = 0; cmp == 0 && k < slack_.size(); ++k) {
      cmp = Arith<Scalar>::Compare(key(a, slack_[k], pa), key(b, slack_[k], pb));
    }
    return cmp < 0;
  }

  void Pivot(int row, int col, double guard) {
    const Scalar pivot = at(row, col);
    for (int c = 0; c < cols_; ++c) at(row, c) /= pivot;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Scalar factor = at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < cols_; ++c) {
        at(r, c) -= factor * at(row, c);
      }
    }
    if constexpr (std::is_same_v<Scalar, double>) {
      for (const double v : data_) {
        if (!(std::abs(v) <= guard)) {
          throw Error(ErrorCode::kNumericalFailure,
                      "tableau entry exceeded magnitude guard");
        }
      }
    }
  }

  int rows_;
  int cols_;
  std::vector<Scalar> data_;
  std::vector<int> basis_;
  std::vector<int> slack_;
};

template <typename Scalar>
LemkeHowsonResult Run(const BimatrixGame& game, const LemkeHowsonOptions& options) {
  const int m = game.rows();
  const int n = game.cols();
  const int labels = m + n;
  const Matrix row_pos = game.R().array() + (1.0 - game.R().minCoeff());
  const Matrix col_pos = game.C().array() + (1.0 - game.C().minCoeff());

  // P: C+' x + s = 1, one row per column j, slack s_j carries label m+j.
  std::vector<int> p_slack(n), q_slack(m);
  for (int j = 0; j < n; ++j) p_slack[j] = m + j;
  for (int i = 0; i < m; ++i) q_slack[i] = i;
  Tableau<Scalar> p(n, labels, p_slack);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) p.at(j, i) = Arith<Scalar>::From(col_pos(i, j));
  // Q: R+ y + r = 1, one row per row i, slack r_i carries label i.
  Tableau<Scalar> q(m, labels, q_slack);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) q.at(i, m + j) = Arith<Scalar>::From(row_pos(i, j));

  const int cap = options.pivot_cap > 0 ? options.pivot_cap
                                        : 10 * (m + n) * std::max(m, n);
  const int dropped = options.initial_label - 1;
  int entering = dropped;
  bool in_p = dropped < m;
  int pivots = 0;
  while (true) {
    Tableau<Scalar>& t = in_p ? p : q;
    const int leaving = t.Enter(entering, options.magnitude_guard);
    ++pivots;
    if (options.on_pivot) {
      TableauState state;
      for (int l : p.basis()) state.row_basis.push_back(l + 1);
      for (int l : q.basis()) state.col_basis.push_back(l + 1);
      state.pivots = pivots;
      state.dropped_label = options.initial_label;
      options.on_pivot(state);
    }
    if (leaving == dropped) break;
    if (pivots >= cap) {
      throw Error(ErrorCode::kPivotCapExceeded,
                  "Lemke-Howson pivot cap " + std::to_string(cap) + " reached after " +
                      std::to_string(pivots) + " pivots");
    }
    entering = leaving;
    in_p = !in_p;
  }

  Vector x(m), y(n);
  for (int i = 0; i < m; ++i) x[i] = p.Value(i);
  for (int j = 0; j < n; ++j) y[j] = q.Value(m + j);
  LemkeHowsonResult result;
  result.profile = {CleanStrategy(x), CleanStrategy(y)};
  result.pivots = pivots;
  result.initial_label = options.initial_label;
  return result;
}

}  // namespace

LemkeHowsonResult LemkeHowson(const BimatrixGame& game,
                              const LemkeHowsonOptions& options) {
  const int labels = game.rows() + game.cols();
  if (options.initial_label < 1 || options.initial_label > labels) {
    throw Error(ErrorCode::kInvalidArgument,
                "initial_label must lie in [1, " + std::to_string(labels) + "]");
  }
  if (options.exact_arithmetic) return Run<Rational>(game, options);
  return Run<double>(game, options);
}

}  // namespace bimatrix::exact
