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

#ifndef TGAME_ORACLE_H_
#define TGAME_ORACLE_H_

#include <optional>
#include <string>
#include <vector>

#include "tgame/model.h"
#include "tgame/payoff.h"
#include "tgame/solver.h"

namespace tgame {

// One no-deviation condition. `slack` is how far the condition is from being
// violated; it is negative when violated.
struct SlackRecord {
  std::string check;
  double slack;
  bool ok;
};

struct VerificationReport {
  bool is_nash = true;
  // Best gain any agent type gets by leaving its support.
  double max_agent_gain = 0;
  // Best gain the firm gets over all vertex policies.
  double max_firm_gain = 0;
  std::vector<SlackRecord> details;
};

// Checks the outcome's profile and policy against every unilateral
// deviation. Gains count as deviations when they exceed
// tolerance * max(1, |payoff|).
VerificationReport VerifyEquilibrium(const EquilibriumOutcome& outcome,
                                     const ModelParams& params,
                                     double tolerance = 1e-9);
VerificationReport VerifyEquilibrium(const StrategyProfile& profile,
                                     const HiringPolicy& policy,
                                     const ModelParams& params,
                                     double tolerance = 1e-9);

struct PolicySearchResult {
  HiringPolicy best;
  double best_payoff;
  long evaluated;
};

// Brute-force firm best response over the grid {0, 1/(g-1), ..., 1} on every
// state of the profile's scenario. grid = 2 enumerates the vertices. Ties go
// to the first policy in lexicographic order. Throws std::invalid_argument if
// grid < 2.
PolicySearchResult ExhaustivePolicySearch(const StrategyProfile& profile,
                                          const ModelParams& params,
                                          int grid = 2);

struct DynamicsOptions {
  // Fraction of the way each agent type moves toward its best response.
  double damping = 1.0;
  int max_rounds = 1000;
  double tolerance = 1e-6;
  std::optional<StrategyProfile> start = std::nullopt;  // nobody educates
};

struct DynamicsRound {
  int round;
  StrategyProfile profile;
  HiringPolicy policy;
  PayoffTriple payoffs;
  // Largest change of an improvement probability since the previous round.
  double change;
};

struct DynamicsTrace {
  std::vector<DynamicsRound> rounds;  // round 0 is the start
  bool converged = false;
  StrategyProfile limit;
  // Mean profile over all recorded rounds.
  StrategyProfile time_average;
};

// Alternating best responses. Each round the agents move toward their best
// response to the current policy (holding their mix when indifferent), then
// the firm best-responds state by state. An occupied state whose marginal is
// within kEpsilon of zero keeps its previous hiring probability. An empty
// state is hired iff it is an education state.
DynamicsTrace BestResponseDynamics(const ModelParams& params,
                                   Scenario scenario,
                                   const DynamicsOptions& options = {});

// The firm's per-state best response used by the dynamics.
HiringPolicy FirmBestResponse(const StrategyProfile& profile,
                              const ModelParams& params,
                              const std::optional<HiringPolicy>& previous =
                                  std::nullopt);

}  // namespace tgame

#endif  // TGAME_ORACLE_H_
