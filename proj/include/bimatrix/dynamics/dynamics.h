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

#ifndef BIMATRIX_DYNAMICS_DYNAMICS_H_
#define BIMATRIX_DYNAMICS_DYNAMICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bimatrix/game.h"

namespace bimatrix::dynamics {

struct Checkpoint {
  int iteration = 0;
  // Metrics of the average profile after `iteration` rounds.
  double epsilon = 0.0;
  double ws_epsilon = 0.0;
};

struct DynamicsTrace {
  std::string algorithm;
  MixedProfile average_profile;
  MixedProfile last_profile;
  std::vector<Checkpoint> checkpoints;
  int iterations = 0;
  uint64_t seed = 0;
};

struct DynamicsOptions {
  int iterations = 100000;
  // Updates are full-information and ties go to the lowest index, so the
  // seed is recorded but does not change the trace.
  uint64_t seed = 0;
  // 0 selects max(1, iterations / 100); negative disables checkpoints.
  int checkpoint_interval = 0;
};

// Discrete-time fictitious play with simultaneous moves. Both players open
// with action 0 and then best-respond to the opponent's empirical play.
DynamicsTrace FictitiousPlay(const BimatrixGame& game, const DynamicsOptions& options = {});

enum class TemperatureRule {
  // tau = sqrt(T / (8 ln k)) for k actions.
  kHorizonTuned,
  // tau = ln(2) / T.
  kLogTwoOverT,
  kFixed,
};

struct HedgeParams {
  TemperatureRule rule = TemperatureRule::kHorizonTuned;
  // Used by kFixed.
  double temperature = 1.0;
};

double HedgeTemperature(const HedgeParams& params, int actions, int iterations);

// Softmax of cumulative expected payoffs.
DynamicsTrace Hedge(const BimatrixGame& game, const DynamicsOptions& options = {},
                    const HedgeParams& params = {});

enum class MwuVariant { kExponential, kLinear };

struct MwuParams {
  double rate = 0.5;
  MwuVariant variant = MwuVariant::kExponential;
};

// w <- w (1 - rate)^u, or w (1 - rate u) for the linear variant.
void MwuUpdate(Vector* weights, const Vector& u, double rate, MwuVariant variant);

// Weights are updated with the loss 1 - payoff of each action against the
// opponent's current strategy.
DynamicsTrace Mwu(const BimatrixGame& game, const DynamicsOptions& options = {},
                  const MwuParams& params = {});

// Cumulative regret against the opponent's current strategy, played as the
// normalized positive part.
DynamicsTrace RegretMatching(const BimatrixGame& game, const DynamicsOptions& options = {});

Vector SoftmaxStrategy(const Vector& cumulative, double temperature);
// Uniform when no regret is positive.
Vector RegretMatchingStrategy(const Vector& regrets);
// Frequencies of 0-based actions.
Vector EmpiricalDistribution(std::span<const int> actions, int size);

// Conitzer's bound (r + 1) / (2r) for r rounds of fictitious play.
double FictitiousPlayBound(int rounds);

}  // namespace bimatrix::dynamics

#endif  // BIMATRIX_DYNAMICS_DYNAMICS_H_
