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

#include "tgame/payoff.h"

#include <stdexcept>

namespace tgame {
namespace {

void CheckProfile(const StrategyProfile& profile) {
  for (double p : {profile.improve_h, profile.improve_l}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("improvement probability outside [0, 1]");
    }
  }
}

void CheckScenario(Scenario a, Scenario b) {
  if (a != b) {
    throw std::invalid_argument(
        "hiring policy dimension does not match the profile's scenario");
  }
}

}  // namespace

double Performance(AgentType type, bool educated, const ModelParams& params) {
  return (type == AgentType::kHigh ? params.alpha() : 0.0) +
         (educated ? params.beta() : 0.0);
}

PopulationComposition EndComposition(const StrategyProfile& profile,
                                     const ModelParams& params) {
  CheckProfile(profile);
  const PopulationComposition start =
      InitialComposition(params, profile.scenario);
  PopulationComposition end(profile.scenario);
  for (AgentType type : {AgentType::kHigh, AgentType::kLow}) {
    const double p = profile.improve(type);
    for (FeatureState s : start.states()) {
      const double mass = start.Mass(type, s);
      if (mass == 0.0) continue;
      const FeatureState up = WithEducation(s, true);
      const FeatureState stay = WithEducation(s, false);
      end.SetMass(type, up, end.Mass(type, up) + p * mass);
      end.SetMass(type, stay, end.Mass(type, stay) + (1 - p) * mass);
    }
  }
  return end;
}

double StateMarginal(const PopulationComposition& composition,
                     FeatureState state, const ModelParams& params) {
  const bool educated = FeaturesOf(state).educated;
  double marginal = 0;
  for (AgentType type : {AgentType::kHigh, AgentType::kLow}) {
    marginal += composition.Mass(type, state) *
                (Performance(type, educated, params) - params.reward());
  }
  return marginal;
}

double FirmPayoff(const PopulationComposition& composition,
                  const HiringPolicy& policy, const ModelParams& params) {
  CheckScenario(policy.scenario(), composition.scenario());
  double total = 0;
  for (FeatureState s : composition.states()) {
    total += policy[s] * StateMarginal(composition, s, params);
  }
  return total;
}

double FirmPayoff(const StrategyProfile& profile, const HiringPolicy& policy,
                  const ModelParams& params) {
  return FirmPayoff(EndComposition(profile, params), policy, params);
}

double AgentUtility(AgentType type, bool improve, const HiringPolicy& policy,
                    const ModelParams& params) {
  const double r = params.reward();
  const double sunk = improve ? params.cost(type) : 0.0;
  if (policy.scenario() == Scenario::kTransparent) {
    return policy[improve ? FeatureState::kF : FeatureState::kE] * r - sunk;
  }
  // The agent does not know its correlational value; it is high with
  // probability lambda (H) or 1 - lambda (L).
  const double high_corr = params.correlational_share(type);
  const FeatureState high = improve ? FeatureState::kB : FeatureState::kA;
  const FeatureState low = improve ? FeatureState::kD : FeatureState::kC;
  return (high_corr * policy[high] + (1 - high_corr) * policy[low]) * r - sunk;
}

double ExpectedAgentUtility(AgentType type, double improve_probability,
                            const HiringPolicy& policy,
                            const ModelParams& params) {
  return improve_probability * AgentUtility(type, true, policy, params) +
         (1 - improve_probability) * AgentUtility(type, false, policy, params);
}

double TotalAgentPayoff(AgentType type, const StrategyProfile& profile,
                        const HiringPolicy& policy, const ModelParams& params) {
  CheckProfile(profile);
  CheckScenario(policy.scenario(), profile.scenario);
  return params.type_mass(type) *
         ExpectedAgentUtility(type, profile.improve(type), policy, params);
}

PayoffTriple EvaluatePayoffs(const StrategyProfile& profile,
                             const HiringPolicy& policy,
                             const ModelParams& params) {
  return {
      .firm = FirmPayoff(profile, policy, params),
      .agents_h = TotalAgentPayoff(AgentType::kHigh, profile, policy, params),
      .agents_l = TotalAgentPayoff(AgentType::kLow, profile, policy, params),
  };
}

}  // namespace tgame
