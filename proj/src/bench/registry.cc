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

#include "bimatrix/bench/registry.h"

#include <algorithm>
#include <functional>
#include <map>

#include "bimatrix/approx/simple.h"
#include "bimatrix/approx/ts.h"
#include "bimatrix/bench/config.h"
#include "bimatrix/dynamics/dynamics.h"
#include "bimatrix/errors.h"
#include "bimatrix/exact/lemke_howson.h"
#include "bimatrix/exact/support_enumeration.h"
#include "bimatrix/wsne/wsne.h"

namespace bimatrix::bench {
namespace {

using Fn = std::function<Outcome(const BimatrixGame&, const TaskContext&)>;

Outcome FromSearchMix(const approx::SearchMixResult& r, bool has_pre_mix) {
  Outcome o;
  o.final = r.final;
  if (has_pre_mix) o.pre_mix = r.pre_mix;
  switch (r.status) {
    case approx::RunStatus::kOk:
      break;
    case approx::RunStatus::kTimeout:
      o.status = RecordStatus::kTimeout;
      break;
    case approx::RunStatus::kPrecisionError:
      o.status = RecordStatus::kPrecisionError;
      break;
    case approx::RunStatus::kRoundCapExceeded:
      o.note = "round_cap";
      break;
  }
  return o;
}

Outcome FromWsne(const wsne::WsneResult& r) {
  Outcome o;
  o.final = r.profile;
  o.note = wsne::TacticName(r.tactic);
  if (r.status == wsne::WsneStatus::kTimeout) o.status = RecordStatus::kTimeout;
  if (r.status == wsne::WsneStatus::kPrecisionError) o.status = RecordStatus::kPrecisionError;
  return o;
}

Outcome FromTrace(const dynamics::DynamicsTrace& t) {
  Outcome o;
  o.final = t.average_profile;
  o.pre_mix = t.last_profile;
  return o;
}

approx::TsOptions TsOptionsFor(const TaskContext& ctx) {
  approx::TsOptions opts;
  opts.delta = ctx.config->delta;
  opts.round_cap = ctx.config->ts_round_cap;
  opts.init = ctx.config->ts_init == "uniform" ? approx::InitMode::kUniform
                                                : approx::InitMode::kRandom;
  opts.seed = ctx.seed;
  opts.deadline = ctx.deadline;
  return opts;
}

dynamics::DynamicsOptions DynamicsFor(const TaskContext& ctx) {
  dynamics::DynamicsOptions opts;
  opts.iterations = ctx.config->dynamics_iterations;
  opts.seed = ctx.seed;
  opts.checkpoint_interval = -1;
  return opts;
}

const std::map<std::string, Fn>& Table() {
  static const std::map<std::string, Fn> table = {
      {"kps06", [](const BimatrixGame& g, const TaskContext&) {
         return FromSearchMix(approx::Kps06(g), false);
       }},
      {"dmp06", [](const BimatrixGame& g, const TaskContext& ctx) {
         const int start_row = 1 + static_cast<int>(ctx.seed % g.rows());
         return FromSearchMix(approx::Dmp06(g, start_row), false);
       }},
      {"cdffjs15_038", [](const BimatrixGame& g, const TaskContext&) {
         return FromSearchMix(approx::Cdffjs15_038(g), true);
       }},
      {"bbm07", [](const BimatrixGame& g, const TaskContext&) {
         return FromSearchMix(approx::Bbm07(g), true);
       }},
      {"ts07", [](const BimatrixGame& g, const TaskContext& ctx) {
         return FromSearchMix(approx::Ts07(g, TsOptionsFor(ctx)), true);
       }},
      {"dfm22_13", [](const BimatrixGame& g, const TaskContext& ctx) {
         return FromSearchMix(approx::Dfm22_13(g, TsOptionsFor(ctx)), true);
       }},
      {"ks07", [](const BimatrixGame& g, const TaskContext&) {
         return FromWsne(wsne::Ks07(g));
       }},
      {"fgss12", [](const BimatrixGame& g, const TaskContext& ctx) {
         wsne::Fgss12Options opts;
         opts.size_cap_2x2 = ctx.config->fgss12_size_cap;
         opts.deadline = ctx.deadline;
         return FromWsne(wsne::Fgss12(g, opts));
       }},
      {"cdffjs15_06528", [](const BimatrixGame& g, const TaskContext&) {
         return FromWsne(wsne::Cdffjs15_06528(g));
       }},
      {"dfm22_12", [](const BimatrixGame& g, const TaskContext& ctx) {
         wsne::Dfm22Options opts;
         opts.delta = ctx.config->dfm22_12_delta;
         opts.search_budget = ctx.config->dfm22_12_budget;
         opts.deadline = ctx.deadline;
         return FromWsne(wsne::Dfm22_12(g, opts));
       }},
      {"fp", [](const BimatrixGame& g, const TaskContext& ctx) {
         return FromTrace(dynamics::FictitiousPlay(g, DynamicsFor(ctx)));
       }},
      {"hedge", [](const BimatrixGame& g, const TaskContext& ctx) {
         dynamics::HedgeParams params;
         const std::string& t = ctx.config->hedge_temperature;
         if (t == "log2_over_t") {
           params.rule = dynamics::TemperatureRule::kLogTwoOverT;
         } else if (t != "horizon") {
           params.rule = dynamics::TemperatureRule::kFixed;
           params.temperature = std::stod(t);
         }
         return FromTrace(dynamics::Hedge(g, DynamicsFor(ctx), params));
       }},
      {"mwu_exp", [](const BimatrixGame& g, const TaskContext& ctx) {
         dynamics::MwuParams params{ctx.config->mwu_rate, dynamics::MwuVariant::kExponential};
         return FromTrace(dynamics::Mwu(g, DynamicsFor(ctx), params));
       }},
      {"mwu_linear", [](const BimatrixGame& g, const TaskContext& ctx) {
         dynamics::MwuParams params{ctx.config->mwu_rate, dynamics::MwuVariant::kLinear};
         return FromTrace(dynamics::Mwu(g, DynamicsFor(ctx), params));
       }},
      {"regret_matching", [](const BimatrixGame& g, const TaskContext& ctx) {
         return FromTrace(dynamics::RegretMatching(g, DynamicsFor(ctx)));
       }},
      {"lemke_howson", [](const BimatrixGame& g, const TaskContext&) {
         Outcome o;
         o.final = exact::LemkeHowson(g).profile;
         return o;
       }},
      {"support_enum", [](const BimatrixGame& g, const TaskContext& ctx) {
         const exact::SupportEnumerationResult r =
             exact::SupportEnumeration(g, std::nullopt, ctx.deadline);
         Outcome o;
         if (!r.equilibria.empty()) o.final = r.equilibria.front();
         if (r.timed_out) o.status = RecordStatus::kTimeout;
         o.note = std::to_string(r.equilibria.size()) + " equilibria";
         return o;
       }},
  };
  return table;
}

}  // namespace

const char* RecordStatusName(RecordStatus status) {
  switch (status) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kTimeout: return "timeout";
    case RecordStatus::kPrecisionError: return "precision_error";
  }
  return "unknown";
}

const std::vector<std::string>& AlgorithmIds() {
  static const std::vector<std::string> ids = {
      "kps06", "dmp06", "cdffjs15_038", "bbm07", "ts07", "dfm22_13",
      "ks07", "fgss12", "cdffjs15_06528", "dfm22_12", "fp", "hedge",
      "mwu_exp", "mwu_linear", "regret_matching", "lemke_howson", "support_enum"};
  return ids;
}

bool IsKnownAlgorithm(const std::string& id) { return Table().count(id) > 0; }

Outcome RunAlgorithm(const std::string& id, const BimatrixGame& game, const TaskContext& ctx) {
  const auto it = Table().find(id);
  if (it == Table().end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + id + "'");
  }
  try {
    return it->second(game, ctx);
  } catch (const Error& e) {
    Outcome o;
    o.status = RecordStatus::kPrecisionError;
    o.note = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    return o;
  }
}

}  // namespace bimatrix::bench
