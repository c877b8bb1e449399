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

#ifndef BIMATRIX_EXACT_LCP_H_
#define BIMATRIX_EXACT_LCP_H_

#include "bimatrix/game.h"

namespace bimatrix::exact {

// Find z >= 0 with w = q + M z >= 0 and z'w = 0, where
// M = [[0, A], [B', 0]] and q = -1 with A, B >= 1 entrywise.
//
// With q = -1 a supported strategy must attain the *smallest* value of its
// block, so the blocks hold losses: A = (1 + max R) - R and
// B = (1 + max C) - C. Complementary solutions then map to equilibria of
// (R, C), and every block entry is at least 1.
struct LcpInstance {
  Matrix M;
  Vector q;
  int m = 0;
  int n = 0;
  Matrix row_block;
  Matrix col_block;
  // A = row_offset - R, B = col_offset - C.
  double row_offset = 0.0;
  double col_offset = 0.0;
};

LcpInstance ToLcp(const BimatrixGame& game);

// Builds the instance from strictly positive loss blocks.
LcpInstance LcpFromBlocks(const Matrix& row_block, const Matrix& col_block);

// The complementary solution of an equilibrium: x' = x / (x'By),
// y' = y / (x'Ay).
Vector LcpSolutionFromProfile(const LcpInstance& lcp, const MixedProfile& profile);

// max(|min(z)|, |min(w)|, |z'w|) for a candidate z.
double ComplementarityResidual(const LcpInstance& lcp, const Vector& z);

// Splits z = (x', y') and normalizes each half onto the simplex.
MixedProfile ProfileFromLcpSolution(const LcpInstance& lcp, const Vector& z);

}  // namespace bimatrix::exact

#endif  // BIMATRIX_EXACT_LCP_H_
