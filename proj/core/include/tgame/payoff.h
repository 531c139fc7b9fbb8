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

#ifndef TGAME_PAYOFF_H_
#define TGAME_PAYOFF_H_

#include "tgame/model.h"

namespace tgame {

// Probability with which each agent type improves education. Mixed profiles
// are read as expected masses over a continuum population.
struct StrategyProfile {
  Scenario scenario = Scenario::kOpaque;
  double improve_h = 0.0;
  double improve_l = 0.0;

  double improve(AgentType type) const {
    return type == AgentType::kHigh ? improve_h : improve_l;
  }
  friend bool operator==(const StrategyProfile&,
                         const StrategyProfile&) = default;
};

// Firm payoff plus population-total agent payoffs per type.
struct PayoffTriple {
  double firm = 0.0;
  double agents_h = 0.0;
  double agents_l = 0.0;

  double agents(AgentType type) const {
    return type == AgentType::kHigh ? agents_h : agents_l;
  }
  double agents_total() const { return agents_h + agents_l; }
};

// W(T, education): alpha for H plus beta for education; an uneducated L
// agent produces 0.
double Performance(AgentType type, bool educated, const ModelParams& params);

// Applies the profile's education choices to the initial composition.
// Correlational values are preserved.
PopulationComposition EndComposition(const StrategyProfile& profile,
                                     const ModelParams& params);

// Change in firm payoff per unit of hiring probability in `state`:
// sum over types of n^T_S (W^T_S - R). Zero for an empty state.
double StateMarginal(const PopulationComposition& composition,
                     FeatureState state, const ModelParams& params);

double FirmPayoff(const PopulationComposition& composition,
                  const HiringPolicy& policy, const ModelParams& params);
double FirmPayoff(const StrategyProfile& profile, const HiringPolicy& policy,
                  const ModelParams& params);

// Per-capita utility of a pure education choice. The scenario is taken from
// the policy.
double AgentUtility(AgentType type, bool improve, const HiringPolicy& policy,
                    const ModelParams& params);

// Per-capita utility of improving with probability `improve_probability`.
double ExpectedAgentUtility(AgentType type, double improve_probability,
                            const HiringPolicy& policy,
                            const ModelParams& params);

// Population-total utility of one type under the profile.
double TotalAgentPayoff(AgentType type, const StrategyProfile& profile,
                        const HiringPolicy& policy, const ModelParams& params);

// Firm payoff and population-total agent payoffs.
PayoffTriple EvaluatePayoffs(const StrategyProfile& profile,
                             const HiringPolicy& policy,
                             const ModelParams& params);

}  // namespace tgame

#endif  // TGAME_PAYOFF_H_
