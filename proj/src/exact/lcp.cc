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

#include "bimatrix/exact/lcp.h"

#include <algorithm>
#include <cmath>

#include "bimatrix/errors.h"

namespace bimatrix::exact {

LcpInstance LcpFromBlocks(const Matrix& row_block, const Matrix& col_block) {
  if (row_block.rows() != col_block.rows() || row_block.cols() != col_block.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "LCP blocks must share a shape");
  }
  if (row_block.minCoeff() <= 0.0 || col_block.minCoeff() <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "LCP blocks must be strictly positive");
  }
  LcpInstance lcp;
  lcp.m = static_cast<int>(row_block.rows());
  lcp.n = static_cast<int>(row_block.cols());
  const int size = lcp.m + lcp.n;
  lcp.M = Matrix::Zero(size, size);
  lcp.M.topRightCorner(lcp.m, lcp.n) = row_block;
  lcp.M.bottomLeftCorner(lcp.n, lcp.m) = col_block.transpose();
  lcp.q = -Vector::Ones(size);
  lcp.row_block = row_block;
  lcp.col_block = col_block;
  return lcp;
}

LcpInstance ToLcp(const BimatrixGame& game) {
  const double row_offset = 1.0 + game.R().maxCoeff();
  const double col_offset = 1.0 + game.C().maxCoeff();
  LcpInstance lcp = LcpFromBlocks((row_offset - game.R().array()).matrix(),
                                  (col_offset - game.C().array()).matrix());
  lcp.row_offset = row_offset;
  lcp.col_offset = col_offset;
  return lcp;
}

Vector LcpSolutionFromProfile(const LcpInstance& lcp, const MixedProfile& profile) {
  Vector z(lcp.m + lcp.n);
  z.head(lcp.m) = profile.x / profile.x.dot(lcp.col_block * profile.y);
  z.tail(lcp.n) = profile.y / profile.x.dot(lcp.row_block * profile.y);
  return z;
}

double ComplementarityResidual(const LcpInstance& lcp, const Vector& z) {
  const Vector w = lcp.q + lcp.M * z;
  return std::max({std::max(0.0, -z.minCoeff()), std::max(0.0, -w.minCoeff()),
                   std::abs(z.dot(w))});
}

MixedProfile ProfileFromLcpSolution(const LcpInstance& lcp, const Vector& z) {
  if (z.size() != lcp.m + lcp.n) {
    throw Error(ErrorCode::kDimensionMismatch, "LCP solution length mismatch");
  }
  return {CleanStrategy(z.head(lcp.m)), CleanStrategy(z.tail(lcp.n))};
}

}  // namespace bimatrix::exact
