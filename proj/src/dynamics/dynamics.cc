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

#include "bimatrix/dynamics/dynamics.h"

#include <algorithm>
#include <cmath>

#include "bimatrix/errors.h"
#include "bimatrix/metrics.h"

namespace bimatrix::dynamics {
namespace {

void CheckOptions(const DynamicsOptions& options) {
  if (options.iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be at least 1");
  }
}

int Interval(const DynamicsOptions& options) {
  if (options.checkpoint_interval < 0) return 0;
  if (options.checkpoint_interval > 0) return options.checkpoint_interval;
  return std::max(1, options.iterations / 100);
}

// Accumulates the played strategies and records checkpoints.
class Recorder {
 public:
  Recorder(const BimatrixGame& game, const DynamicsOptions& options, const char* name)
      : game_(game),
        interval_(Interval(options)),
        x_sum_(Vector::Zero(game.rows())),
        y_sum_(Vector::Zero(game.cols())) {
    trace_.algorithm = name;
    trace_.seed = options.seed;
  }

  void Add(const Vector& x, const Vector& y, int t) {
    x_sum_ += x;
    y_sum_ += y;
    if (interval_ > 0 && t % interval_ == 0) {
      const ApproxReport r = EpsilonOf(game_, Average(t));
      trace_.checkpoints.push_back({t, r.epsilon, r.ws_epsilon});
    }
  }

  DynamicsTrace Finish(const Vector& x, const Vector& y, int t) {
    trace_.iterations = t;
    trace_.average_profile = Average(t);
    trace_.last_profile = {x, y};
    return std::move(trace_);
  }

 private:
  MixedProfile Average(int t) const { return {x_sum_ / t, y_sum_ / t}; }

  const BimatrixGame& game_;
  int interval_;
  Vector x_sum_;
  Vector y_sum_;
  DynamicsTrace trace_;
};

// Softmax terms below e^-300 are flushed to zero. They are far below the
// resolution of a probability vector and would otherwise decay into
// subnormals, which slow every later product by orders of magnitude.
constexpr double kFlushExponent = -300.0;

}  // namespace

Vector SoftmaxStrategy(const Vector& cumulative, double temperature) {
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "temperature must be positive");
  }
  const Vector shifted = (cumulative.array() - cumulative.maxCoeff()) / temperature;
  const Vector e = (shifted.array() < kFlushExponent).select(0.0, shifted.array().exp());
  return e / e.sum();
}

Vector RegretMatchingStrategy(const Vector& regrets) {
  const Vector positive = regrets.cwiseMax(0.0);
  const double total = positive.sum();
  if (total > 0.0) return positive / total;
  return Vector::Constant(regrets.size(), 1.0 / regrets.size());
}

Vector EmpiricalDistribution(std::span<const int> actions, int size) {
  if (actions.empty()) throw Error(ErrorCode::kInvalidArgument, "no actions");
  Vector counts = Vector::Zero(size);
  for (int a : actions) {
    if (a < 0 || a >= size) throw Error(ErrorCode::kInvalidArgument, "action out of range");
    counts[a] += 1.0;
  }
  return counts / static_cast<double>(actions.size());
}

double FictitiousPlayBound(int rounds) { return (rounds + 1.0) / (2.0 * rounds); }

void MwuUpdate(Vector* weights, const Vector& u, double rate, MwuVariant variant) {
  if (!(rate > 0.0 && rate < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rate must lie in (0, 1)");
  }
  if (variant == MwuVariant::kExponential) {
    weights->array() *= (u.array() * std::log1p(-rate)).exp();
  } else {
    weights->array() *= 1.0 - rate * u.array();
  }
}

double HedgeTemperature(const HedgeParams& params, int actions, int iterations) {
  switch (params.rule) {
    case TemperatureRule::kHorizonTuned:
      if (actions < 2) return 1.0;
      return std::sqrt(iterations / (8.0 * std::log(static_cast<double>(actions))));
    case TemperatureRule::kLogTwoOverT:
      return std::log(2.0) / iterations;
    case TemperatureRule::kFixed:
      if (!(params.temperature > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "temperature must be positive");
      }
      return params.temperature;
  }
  return 1.0;
}

DynamicsTrace FictitiousPlay(const BimatrixGame& game, const DynamicsOptions& options) {
  CheckOptions(options);
  const Matrix& R = game.R();
  const Matrix& C = game.C();
  const int m = game.rows();
  const int n = game.cols();
  Recorder rec(game, options, "fp");
  // Payoff of each own action summed over the opponent's past actions.
  Vector row_payoff = Vector::Zero(m);
  Vector col_payoff = Vector::Zero(n);
  int a_row = 0;
  int a_col = 0;
  Vector x = UnitVector(m, 0);
  Vector y = UnitVector(n, 0);
  for (int t = 1; t <= options.iterations; ++t) {
    x = UnitVector(m, a_row);
    y = UnitVector(n, a_col);
    rec.Add(x, y, t);
    row_payoff += R.col(a_col);
    col_payoff += C.row(a_row).transpose();
    a_row = ArgMax(row_payoff);
    a_col = ArgMax(col_payoff);
  }
  return rec.Finish(x, y, options.iterations);
}

DynamicsTrace Hedge(const BimatrixGame& game, const DynamicsOptions& options,
                    const HedgeParams& params) {
  CheckOptions(options);
  const Matrix& R = game.R();
  const Matrix& C = game.C();
  const double tau_row = HedgeTemperature(params, game.rows(), options.iterations);
  const double tau_col = HedgeTemperature(params, game.cols(), options.iterations);
  Recorder rec(game, options, "hedge");
  Vector row_cum = Vector::Zero(game.rows());
  Vector col_cum = Vector::Zero(game.cols());
  Vector x, y;
  for (int t = 1; t <= options.iterations; ++t) {
    x = SoftmaxStrategy(row_cum, tau_row);
    y = SoftmaxStrategy(col_cum, tau_col);
    rec.Add(x, y, t);
    row_cum.noalias() += R * y;
    col_cum.noalias() += C.transpose() * x;
  }
  return rec.Finish(x, y, options.iterations);
}

DynamicsTrace Mwu(const BimatrixGame& game, const DynamicsOptions& options,
                  const MwuParams& params) {
  CheckOptions(options);
  if (!(params.rate > 0.0 && params.rate < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "rate must lie in (0, 1)");
  }
  const Matrix& R = game.R();
  const Matrix& C = game.C();
  const bool exponential = params.variant == MwuVariant::kExponential;
  Recorder rec(game, options, exponential ? "mwu_exp" : "mwu_linear");
  // Log-weights, since the weights themselves underflow within a few
  // thousand rounds.
  Vector row_lw = Vector::Zero(game.rows());
  Vector col_lw = Vector::Zero(game.cols());
  const double log_keep = std::log1p(-params.rate);
  auto log_factor = [&](const Vector& loss) -> Vector {
    if (exponential) return log_keep * loss;
    return (1.0 - params.rate * loss.array()).log().matrix();
  };
  Vector x, y;
  for (int t = 1; t <= options.iterations; ++t) {
    x = SoftmaxStrategy(row_lw, 1.0);
    y = SoftmaxStrategy(col_lw, 1.0);
    rec.Add(x, y, t);
    row_lw += log_factor((1.0 - (R * y).array()).matrix());
    col_lw += log_factor((1.0 - (C.transpose() * x).array()).matrix());
  }
  return rec.Finish(x, y, options.iterations);
}

DynamicsTrace RegretMatching(const BimatrixGame& game, const DynamicsOptions& options) {
  CheckOptions(options);
  const Matrix& R = game.R();
  const Matrix& C = game.C();
  Recorder rec(game, options, "regret_matching");
  Vector row_regret = Vector::Zero(game.rows());
  Vector col_regret = Vector::Zero(game.cols());
  Vector x, y;
  for (int t = 1; t <= options.iterations; ++t) {
    x = RegretMatchingStrategy(row_regret);
    y = RegretMatchingStrategy(col_regret);
    rec.Add(x, y, t);
    const Vector ry = R * y;
    const Vector cx = C.transpose() * x;
    row_regret.array() += ry.array() - x.dot(ry);
    col_regret.array() += cx.array() - y.dot(cx);
  }
  return rec.Finish(x, y, options.iterations);
}

}  // namespace bimatrix::dynamics
