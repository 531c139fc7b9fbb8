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

#include "tgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tgame {
namespace {

double Scaled(double tolerance, double magnitude) {
  return tolerance * std::max(1.0, std::abs(magnitude));
}

// Largest gain available to `type` by dropping an action from its support.
double AgentGain(AgentType type, double p, const HiringPolicy& policy,
                 const ModelParams& params) {
  const double u1 = AgentUtility(type, true, policy, params);
  const double u0 = AgentUtility(type, false, policy, params);
  const double best = std::max(u1, u0);
  double worst_used;
  if (p >= 1) {
    worst_used = u1;
  } else if (p <= 0) {
    worst_used = u0;
  } else {
    worst_used = std::min(u1, u0);
  }
  return best - worst_used;
}

}  // namespace

VerificationReport VerifyEquilibrium(const EquilibriumOutcome& outcome,
                                     const ModelParams& params,
                                     double tolerance) {
  return VerifyEquilibrium(outcome.profile, outcome.policy, params, tolerance);
}

VerificationReport VerifyEquilibrium(const StrategyProfile& profile,
                                     const HiringPolicy& policy,
                                     const ModelParams& params,
                                     double tolerance) {
  if (profile.scenario != policy.scenario()) {
    throw std::invalid_argument(
        "hiring policy dimension does not match the profile's scenario");
  }
  VerificationReport report;
  for (AgentType type : {AgentType::kHigh, AgentType::kLow}) {
    const double p = profile.improve(type);
    const double gain = AgentGain(type, p, policy, params);
    const double scale = std::max(
        std::abs(AgentUtility(type, true, policy, params)),
        std::abs(AgentUtility(type, false, policy, params)));
    const bool ok = gain <= Scaled(tolerance, scale);
    report.details.push_back(
        {"agent " + std::string(ToString(type)), -gain, ok});
    report.max_agent_gain = std::max(report.max_agent_gain, gain);
    report.is_nash &= ok;
  }

  const PopulationComposition end = EndComposition(profile, params);
  const double firm = FirmPayoff(end, policy, params);
  const double firm_tol = Scaled(tolerance, firm);
  for (FeatureState s : end.states()) {
    if (end.StateMass(s) <= 0) continue;
    const double m = StateMarginal(end, s, params);
    // Hiring with positive probability needs m >= 0; refusing needs m <= 0.
    double slack = INFINITY;
    if (policy[s] > 0) slack = std::min(slack, m);
    if (policy[s] < 1) slack = std::min(slack, -m);
    const bool ok = slack >= -firm_tol;
    report.details.push_back(
        {"firm state " + std::string(ToString(s)), slack, ok});
    report.is_nash &= ok;
  }

  const PolicySearchResult search = ExhaustivePolicySearch(profile, params, 2);
  report.max_firm_gain = std::max(0.0, search.best_payoff - firm);
  const bool firm_ok = report.max_firm_gain <= firm_tol;
  report.details.push_back(
      {"firm vertex search", -report.max_firm_gain, firm_ok});
  report.is_nash &= firm_ok;
  return report;
}

PolicySearchResult ExhaustivePolicySearch(const StrategyProfile& profile,
                                          const ModelParams& params,
                                          int grid) {
  if (grid < 2) throw std::invalid_argument("policy grid must be >= 2");
  const PopulationComposition end = EndComposition(profile, params);
  const auto states = end.states();
  const int k = int(states.size());
  std::vector<int> digits(k, 0);
  HiringPolicy policy = HiringPolicy::Uniform(profile.scenario, 0);
  PolicySearchResult result{policy, FirmPayoff(end, policy, params), 0};
  while (true) {
    for (int i = 0; i < k; ++i) {
      policy.Set(states[i], double(digits[i]) / (grid - 1));
    }
    const double value = FirmPayoff(end, policy, params);
    ++result.evaluated;
    if (value > result.best_payoff) {
      result.best_payoff = value;
      result.best = policy;
    }
    int i = k - 1;
    while (i >= 0 && ++digits[i] == grid) digits[i--] = 0;
    if (i < 0) break;
  }
  return result;
}

HiringPolicy FirmBestResponse(const StrategyProfile& profile,
                              const ModelParams& params,
                              const std::optional<HiringPolicy>& previous) {
  const PopulationComposition end = EndComposition(profile, params);
  HiringPolicy policy = HiringPolicy::Uniform(profile.scenario, 0);
  for (FeatureState s : end.states()) {
    const bool educated = FeaturesOf(s).educated;
    if (end.StateMass(s) <= 0) {
      policy.Set(s, educated ? 1 : 0);
      continue;
    }
    const double m = StateMarginal(end, s, params);
    if (m > kEpsilon) {
      policy.Set(s, 1);
    } else if (m < -kEpsilon) {
      policy.Set(s, 0);
    } else if (previous && previous->scenario() == profile.scenario) {
      policy.Set(s, (*previous)[s]);
    } else {
      policy.Set(s, educated ? 1 : 0);
    }
  }
  return policy;
}

DynamicsTrace BestResponseDynamics(const ModelParams& params,
                                   Scenario scenario,
                                   const DynamicsOptions& options) {
  if (!(options.damping > 0 && options.damping <= 1)) {
    throw std::invalid_argument("damping must lie in (0, 1]");
  }
  if (options.max_rounds < 0) {
    throw std::invalid_argument("max_rounds must be >= 0");
  }
  StrategyProfile profile =
      options.start.value_or(StrategyProfile{.scenario = scenario});
  if (profile.scenario != scenario) {
    throw std::invalid_argument("start profile is for the other scenario");
  }
  HiringPolicy policy = FirmBestResponse(profile, params);

  DynamicsTrace trace;
  trace.rounds.push_back(
      {0, profile, policy, EvaluatePayoffs(profile, policy, params), 0});

  for (int round = 1; round <= options.max_rounds; ++round) {
    StrategyProfile next = profile;
    double change = 0;
    for (AgentType type : {AgentType::kHigh, AgentType::kLow}) {
      const double u1 = AgentUtility(type, true, policy, params);
      const double u0 = AgentUtility(type, false, policy, params);
      const double p = profile.improve(type);
      double target = p;
      if (u1 > u0 + kEpsilon) target = 1;
      if (u0 > u1 + kEpsilon) target = 0;
      const double moved = p + options.damping * (target - p);
      (type == AgentType::kHigh ? next.improve_h : next.improve_l) = moved;
      change = std::max(change, std::abs(moved - p));
    }
    profile = next;
    policy = FirmBestResponse(profile, params, policy);
    trace.rounds.push_back({round, profile, policy,
                            EvaluatePayoffs(profile, policy, params), change});
    if (change < options.tolerance) {
      trace.converged = true;
      break;
    }
  }

  trace.limit = profile;
  trace.time_average = StrategyProfile{.scenario = scenario};
  for (const DynamicsRound& r : trace.rounds) {
    trace.time_average.improve_h += r.profile.improve_h;
    trace.time_average.improve_l += r.profile.improve_l;
  }
  trace.time_average.improve_h /= double(trace.rounds.size());
  trace.time_average.improve_l /= double(trace.rounds.size());
  return trace;
}

}  // namespace tgame
