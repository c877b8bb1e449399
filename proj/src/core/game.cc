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

#include "bimatrix/game.h"

#include <cmath>
#include <string>

#include "bimatrix/errors.h"

namespace bimatrix {
namespace {

void CheckFinite(const Matrix& m, const char* which) {
  if (!m.allFinite()) {
    throw Error(ErrorCode::kNonFinitePayoff,
                std::string(which) + " payoff matrix has NaN or infinite entries");
  }
}

void CheckShapes(const Matrix& row, const Matrix& col) {
  if (row.rows() == 0 || row.cols() == 0) {
    throw Error(ErrorCode::kShapeMismatch, "payoff matrices must be non-empty");
  }
  if (row.rows() != col.rows() || row.cols() != col.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "row payoffs are " + std::to_string(row.rows()) + "x" +
                    std::to_string(row.cols()) + " but column payoffs are " +
                    std::to_string(col.rows()) + "x" + std::to_string(col.cols()));
  }
}

AffineMap FitMap(const Matrix& raw) {
  const double lo = raw.minCoeff();
  const double hi = raw.maxCoeff();
  AffineMap map;
  map.offset = lo;
  map.scale = hi > lo ? hi - lo : 1.0;
  return map;
}

Matrix Apply(const AffineMap& map, const Matrix& raw) {
  Matrix out = (raw.array() - map.offset) / map.scale;
  // Guard the endpoints against rounding so the [0,1] invariant is exact.
  return out.cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace

BimatrixGame::BimatrixGame(Matrix row, Matrix col, AffineMap row_map,
                           AffineMap col_map)
    : row_(std::move(row)),
      col_(std::move(col)),
      row_map_(row_map),
      col_map_(col_map) {}

BimatrixGame BimatrixGame::Normalize(const Matrix& raw_row,
                                     const Matrix& raw_col) {
  CheckShapes(raw_row, raw_col);
  CheckFinite(raw_row, "row");
  CheckFinite(raw_col, "column");
  const AffineMap row_map = FitMap(raw_row);
  const AffineMap col_map = FitMap(raw_col);
  return BimatrixGame(Apply(row_map, raw_row), Apply(col_map, raw_col),
                      row_map, col_map);
}

BimatrixGame BimatrixGame::FromNormalized(const Matrix& row, const Matrix& col) {
  CheckShapes(row, col);
  CheckFinite(row, "row");
  CheckFinite(col, "column");
  if (row.minCoeff() < 0.0 || row.maxCoeff() > 1.0 || col.minCoeff() < 0.0 ||
      col.maxCoeff() > 1.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "normalized payoffs must lie in [0,1]");
  }
  return BimatrixGame(row, col, AffineMap{}, AffineMap{});
}

Matrix BimatrixGame::RawR() const {
  return (row_.array() * row_map_.scale + row_map_.offset).matrix();
}

Matrix BimatrixGame::RawC() const {
  return (col_.array() * col_map_.scale + col_map_.offset).matrix();
}

BimatrixGame BimatrixGame::Transposed() const {
  return BimatrixGame(col_.transpose(), row_.transpose(), col_map_, row_map_);
}

MixedProfile MixedProfile::Uniform(int m, int n) {
  return {Vector::Constant(m, 1.0 / m), Vector::Constant(n, 1.0 / n)};
}

MixedProfile MixedProfile::Pure(int m, int n, int row, int col) {
  return {UnitVector(m, row), UnitVector(n, col)};
}

Vector UnitVector(int size, int index) {
  if (index < 0 || index >= size) {
    throw Error(ErrorCode::kInvalidArgument,
                "unit vector index " + std::to_string(index) +
                    " out of range for size " + std::to_string(size));
  }
  Vector e = Vector::Zero(size);
  e[index] = 1.0;
  return e;
}

void ValidateStrategy(const Vector& v, int size, const char* what) {
  if (v.size() != size) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " has length " + std::to_string(v.size()) +
                    ", expected " + std::to_string(size));
  }
  if (!v.allFinite() || v.minCoeff() < -1e-12 || std::abs(v.sum() - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " is not a probability vector");
  }
}

void ValidateProfile(const MixedProfile& profile, int m, int n) {
  ValidateStrategy(profile.x, m, "row strategy");
  ValidateStrategy(profile.y, n, "column strategy");
}

Vector CleanStrategy(const Vector& v) {
  Vector out = v.cwiseMax(0.0);
  const double total = out.sum();
  if (total <= 0.0) {
    throw Error(ErrorCode::kNumericalFailure, "strategy has no positive mass");
  }
  return out / total;
}

}  // namespace bimatrix
