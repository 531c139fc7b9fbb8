// Copyright 2026 The transparency-game Authors
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

#include "report.h"

#include <cstdio>

namespace tgame::cli {

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

Json ToJson(const RawParams& raw) {
  return Json{{"theta", raw.theta},   {"lambda", raw.lambda},
              {"alpha", raw.alpha},   {"beta", raw.beta},
              {"reward", raw.reward}, {"cost_h", raw.cost_h},
              {"cost_l", raw.cost_l}};
}

Json ToJson(const StrategyProfile& profile) {
  return Json{{"scenario", ToString(profile.scenario)},
              {"improve_h", profile.improve_h},
              {"improve_l", profile.improve_l}};
}

Json ToJson(const HiringPolicy& policy) {
  Json out = Json::object();
  for (FeatureState s : policy.states()) out[std::string(ToString(s))] = policy[s];
  return out;
}

Json ToJson(const PayoffTriple& payoffs) {
  return Json{{"firm", payoffs.firm},
              {"agents_h", payoffs.agents_h},
              {"agents_l", payoffs.agents_l},
              {"agents_total", payoffs.agents_total()}};
}

Json ToJson(const EquilibriumOutcome& outcome) {
  Json mixing = nullptr;
  if (outcome.mixing) {
    mixing = Json{{"firm_probability", outcome.mixing->firm_probability},
                  {"agent_probability", outcome.mixing->agent_probability}};
  }
  return Json{{"case", outcome.id.label()},
              {"profile", ToJson(outcome.profile)},
              {"policy", ToJson(outcome.policy)},
              {"payoffs", ToJson(outcome.payoffs)},
              {"mixing", mixing},
              {"boundary", outcome.boundary}};
}

Json ToJson(const ComparisonReport& r) {
  Json threshold = nullptr;
  if (r.applicable_threshold) {
    threshold = Json{{"name", "beta" + std::to_string(
                                           r.applicable_threshold->index)},
                     {"value", r.applicable_threshold->value},
                     {"cleared", r.applicable_threshold->cleared}};
  }
  return Json{{"region", ToString(r.region)},
              {"opaque_case", ToString(r.opaque_case)},
              {"transparent_case", ToString(r.transparent_case)},
              {"firm_prefers", ToString(r.firm_prefers)},
              {"agents_prefer", ToString(r.agents_prefer)},
              {"pi_firm_opaque", r.pi_firm_opaque},
              {"pi_firm_transparent", r.pi_firm_transparent},
              {"pi_agents_opaque", r.pi_agents_opaque},
              {"pi_agents_transparent", r.pi_agents_transparent},
              {"payoff_gap_firm", r.payoff_gap_firm},
              {"payoff_gap_agents", r.payoff_gap_agents},
              {"applicable_threshold", threshold},
              {"dos_opaque", r.dos_opaque},
              {"dos_transparent", r.dos_transparent},
              {"boundary", r.boundary}};
}

Json ToJson(const BetaThresholds& t, const AssumptionBounds& b) {
  return Json{{"beta1", t.beta1},
              {"beta2", t.beta2},
              {"beta3", t.beta3},
              {"alpha_lower", b.alpha_lower},
              {"alpha_upper", b.alpha_upper},
              {"beta_lower", b.beta_lower},
              {"beta_upper", b.beta_upper}};
}

Json ToJson(const VerificationReport& r) {
  Json checks = Json::array();
  for (const SlackRecord& s : r.details) {
    // Adding zero turns -0.0 into 0.0.
    checks.push_back(
        Json{{"check", s.check}, {"slack", s.slack + 0.0}, {"ok", s.ok}});
  }
  return Json{{"nash_ok", r.is_nash},
              {"max_agent_gain", r.max_agent_gain},
              {"max_firm_gain", r.max_firm_gain},
              {"checks", checks}};
}

Json ToJson(const std::vector<AssumptionViolation>& violations) {
  Json list = Json::array();
  for (const AssumptionViolation& v : violations) {
    list.push_back(Json{{"id", ToString(v.id)},
                        {"detail", v.detail},
                        {"value", v.value},
                        {"bound", v.bound},
                        {"boundary", v.boundary}});
  }
  return Json{{"error", "AssumptionViolation"}, {"violations", list}};
}

AnalysisReport Analyze(const ModelParams& params, SelectionRule rule) {
  EquilibriumOutcome opaque = SolveOpaque(params, rule);
  EquilibriumOutcome transparent = SolveTransparent(params);
  ComparisonReport comparison = Compare(params, rule);
  VerificationReport vo = VerifyEquilibrium(opaque, params);
  VerificationReport vt = VerifyEquilibrium(transparent, params);
  return AnalysisReport{
      .params = params.raw(),
      .rule = rule,
      .opaque = std::move(opaque),
      .transparent = std::move(transparent),
      .comparison = std::move(comparison),
      .thresholds = ComputeBetaThresholds(params),
      .bounds = params.bounds(),
      .verify_opaque = std::move(vo),
      .verify_transparent = std::move(vt),
  };
}

Json ToJson(const AnalysisReport& r) {
  Json warnings = Json::array();
  for (const std::string& w : r.comparison.warnings) warnings.push_back(w);
  if (!r.verify_opaque.is_nash) {
    warnings.push_back("OracleRejected: opaque outcome " + r.opaque.id.label() +
                       " fails a no-deviation check");
  }
  if (!r.verify_transparent.is_nash) {
    warnings.push_back("OracleRejected: transparent outcome " +
                       r.transparent.id.label() +
                       " fails a no-deviation check");
  }
  return Json{{"schema_version", 1},
              {"params", ToJson(r.params)},
              {"selection_rule", ToString(r.rule)},
              {"opaque", ToJson(r.opaque)},
              {"transparent", ToJson(r.transparent)},
              {"comparison", ToJson(r.comparison)},
              {"thresholds", ToJson(r.thresholds, r.bounds)},
              {"verification",
               Json{{"opaque", ToJson(r.verify_opaque)},
                    {"transparent", ToJson(r.verify_transparent)}}},
              {"warnings", warnings}};
}

}  // namespace tgame::cli
