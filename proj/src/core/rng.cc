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

#include "bimatrix/rng.h"

#include <cmath>

#include "bimatrix/errors.h"

namespace bimatrix {

uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(uint64_t seed, uint64_t stream)
    : key_(Mix64(seed ^ (stream * 0xD1B54A32D192ED03ULL))) {}

uint64_t CounterRng::WordAt(uint64_t index) const {
  return Mix64(key_ + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::UnitAt(uint64_t index) const {
  return static_cast<double>(WordAt(index) >> 11) * 0x1.0p-53;
}

int CounterRng::NextIndex(int bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  return static_cast<int>(NextUnit() * bound);
}

Vector CounterRng::NextSimplexPoint(int size) {
  Vector v(size);
  for (int i = 0; i < size; ++i) v[i] = -std::log1p(-NextUnit());
  const double total = v.sum();
  if (total <= 0.0) return Vector::Constant(size, 1.0 / size);
  return v / total;
}

uint64_t Fnv1a64(std::string_view bytes, uint64_t basis) {
  uint64_t hash = basis;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace bimatrix
