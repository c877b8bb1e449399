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

#ifndef BIMATRIX_GAME_H_
#define BIMATRIX_GAME_H_

#include <Eigen/Dense>

namespace bimatrix {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Player { kRow, kCol };

inline constexpr double kDefaultSupportThreshold = 1e-10;

// normalized = (raw - offset) / scale.
struct AffineMap {
  double scale = 1.0;
  double offset = 0.0;

  double Normalize(double raw) const { return (raw - offset) / scale; }
  double Recover(double normalized) const { return normalized * scale + offset; }
};

// Two-player game with both payoff matrices in [0,1]. Immutable once built.
class BimatrixGame {
 public:
  // Maps each player's matrix affinely so its minimum becomes 0 and its
  // maximum 1. A constant matrix maps to all zeros with scale 1.
  static BimatrixGame Normalize(const Matrix& raw_row, const Matrix& raw_col);

  // Wraps matrices that are already in [0,1]; identity normalization maps.
  static BimatrixGame FromNormalized(const Matrix& row, const Matrix& col);

  const Matrix& R() const { return row_; }
  const Matrix& C() const { return col_; }
  int rows() const { return static_cast<int>(row_.rows()); }
  int cols() const { return static_cast<int>(row_.cols()); }
  const AffineMap& row_map() const { return row_map_; }
  const AffineMap& col_map() const { return col_map_; }

  Matrix RawR() const;
  Matrix RawC() const;

  // The same game with the players' roles swapped: (C^T, R^T).
  BimatrixGame Transposed() const;

 private:
  BimatrixGame(Matrix row, Matrix col, AffineMap row_map, AffineMap col_map);

  Matrix row_;
  Matrix col_;
  AffineMap row_map_;
  AffineMap col_map_;
};

struct MixedProfile {
  Vector x;
  Vector y;

  static MixedProfile Uniform(int m, int n);
  static MixedProfile Pure(int m, int n, int row, int col);

  // Role swap matching BimatrixGame::Transposed.
  MixedProfile Swapped() const { return {y, x}; }
};

Vector UnitVector(int size, int index);

// Throws DimensionMismatch / InvalidArgument unless x is a probability
// vector of length m and y one of length n (sums within 1e-9, entries >= 0
// up to -1e-12).
void ValidateProfile(const MixedProfile& profile, int m, int n);
void ValidateStrategy(const Vector& v, int size, const char* what);

// Clamps tiny negative entries to zero and rescales to sum one.
Vector CleanStrategy(const Vector& v);

}  // namespace bimatrix

#endif  // BIMATRIX_GAME_H_
