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

#ifndef TGAME_SOLVER_H_
#define TGAME_SOLVER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgame/errors.h"
#include "tgame/model.h"
#include "tgame/payoff.h"

namespace tgame {

// Sustainable agent behaviours in the opaque scenario:
//   O1 nobody educates, O2 only H educates, O3 everyone educates,
//   O4 H educates with probability p_H, O5 L educates with probability p_L.
enum class OpaqueCase { kO1 = 1, kO2, kO3, kO4, kO5 };

// Transparent scenario: T1 nobody, T2 only H, T3 everyone educates. The mixed
// cases cannot be sustained once the correlational feature is gamed.
enum class TransparentCase { kT1 = 1, kT2, kT3 };

std::string_view ToString(OpaqueCase c);
std::string_view ToString(TransparentCase c);
std::optional<OpaqueCase> ParseOpaqueCase(std::string_view label);
std::optional<TransparentCase> ParseTransparentCase(std::string_view label);

// Which opaque case owns a point where several are sustainable.
//
// kPublished reproduces the published case map, in which the O4 region is
// the triangle C_H >= (1-lambda)R, C_L < lambda R. On that triangle the L
// type gains by educating, so the oracle rejects those O4 outcomes.
//
// kNashConsistent uses the L-type no-deviation condition as derived from the
// agent utilities; the O4 region then lies inside O1's and the triangle is
// played as O5. Every outcome passes the oracle under this rule.
enum class SelectionRule { kPublished, kNashConsistent };

std::string_view ToString(SelectionRule rule);
std::optional<SelectionRule> ParseSelectionRule(std::string_view text);

// Identifies a case in either scenario ("O4", "T2", ...).
struct CaseId {
  Scenario scenario = Scenario::kOpaque;
  int number = 1;

  static CaseId Of(OpaqueCase c) { return {Scenario::kOpaque, int(c)}; }
  static CaseId Of(TransparentCase c) {
    return {Scenario::kTransparent, int(c)};
  }
  OpaqueCase opaque() const;
  TransparentCase transparent() const;
  std::string label() const;
  friend bool operator==(const CaseId&, const CaseId&) = default;
};

// Firm's mixing probability on one state and the mixing agent type's
// improvement probability. O4: (P_A = p4, p_H). O5: (P_D = p5, p_L).
struct MixedStrategy {
  double firm_probability;
  double agent_probability;
};

struct EquilibriumOutcome {
  CaseId id;
  StrategyProfile profile;
  HiringPolicy policy;
  PayoffTriple payoffs;
  std::optional<MixedStrategy> mixing = std::nullopt;
  // Set when the cost point lies within kEpsilon of a case boundary.
  bool boundary = false;
  std::vector<std::string> warnings = {};
};

// Closed-form mixing probabilities. Throw DefectError(kMixingOutOfRange) if a
// value falls outside [0, 1], which the assumptions rule out at interior
// points.
MixedStrategy O4Mixing(const ModelParams& params);
MixedStrategy O5Mixing(const ModelParams& params);

// Firm total payoff of each case.
double ClosedFormFirmPayoff(OpaqueCase c, const ModelParams& params);
double ClosedFormFirmPayoff(TransparentCase c, const ModelParams& params);

// Firm payoff plus per-type agent totals of each case.
PayoffTriple ClosedFormPayoffs(OpaqueCase c, const ModelParams& params);
PayoffTriple ClosedFormPayoffs(TransparentCase c, const ModelParams& params);

// Agents' total payoff in the simplified single-expression form.
double ClosedFormAgentTotal(OpaqueCase c, const ModelParams& params);
double ClosedFormAgentTotal(TransparentCase c, const ModelParams& params);

// The case's strategy profile, hiring policy and closed-form payoffs at
// `params`, regardless of whether the case is the one played there.
EquilibriumOutcome OpaqueCaseOutcome(OpaqueCase c, const ModelParams& params);
EquilibriumOutcome TransparentCaseOutcome(TransparentCase c,
                                          const ModelParams& params);

// Cases whose region inequalities hold at the cost point (inclusive bounds).
// Depends only on lambda, R and the two costs.
std::vector<OpaqueCase> FeasibleOpaqueCases(double lambda, double reward,
                                            double cost_h, double cost_l,
                                            SelectionRule rule);
std::vector<TransparentCase> FeasibleTransparentCases(double reward,
                                                      double cost_h,
                                                      double cost_l);

template <typename Case>
struct Classification {
  Case played;
  bool boundary = false;
};

// Applies the dominance order (O1 > O2 > O3 > O4 > O5; T2 > T3 > T1) to the
// feasible set. Throws DefectError(kUnclassifiablePoint) on an empty set.
Classification<OpaqueCase> ClassifyOpaque(double lambda, double reward,
                                          double cost_h, double cost_l,
                                          SelectionRule rule);
Classification<TransparentCase> ClassifyTransparent(double reward,
                                                    double cost_h,
                                                    double cost_l);

EquilibriumOutcome SolveOpaque(
    const ModelParams& params,
    SelectionRule rule = SelectionRule::kPublished);
EquilibriumOutcome SolveTransparent(const ModelParams& params);

}  // namespace tgame

#endif  // TGAME_SOLVER_H_
