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

#ifndef BIMATRIX_RNG_H_
#define BIMATRIX_RNG_H_

#include <cstdint>
#include <string_view>

#include "bimatrix/game.h"

namespace bimatrix {

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t z);

// Counter-based generator. Draw k of stream s under seed is a pure function:
//   key  = Mix64(seed ^ (s * 0xD1B54A32D192ED03))
//   word = Mix64(key + (k + 1) * 0x9E3779B97F4A7C15)
//   unit = (word >> 11) * 2^-53        (uniform on [0,1))
// so any implementation of these three lines reproduces the same doubles.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream);

  uint64_t WordAt(uint64_t index) const;
  double UnitAt(uint64_t index) const;

  // Sequential interface over the same counter.
  uint64_t NextWord() { return WordAt(counter_++); }
  double NextUnit() { return UnitAt(counter_++); }
  // Uniform integer in [0, bound); bound > 0.
  int NextIndex(int bound);

  // Uniformly distributed point of the simplex (normalized exponentials).
  Vector NextSimplexPoint(int size);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// FNV-1a, used to derive stable per-task seeds and config digests.
uint64_t Fnv1a64(std::string_view bytes, uint64_t basis = 0xcbf29ce484222325ULL);

}  // namespace bimatrix

#endif  // BIMATRIX_RNG_H_
