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

#include "tgame/solver.h"

#include <algorithm>
#include <array>
#include <cstdio>

namespace tgame {
namespace {

// Rounding slack for mixing probabilities that land a few ulps outside
// [0, 1] at region edges. Anything larger is a defect.
constexpr double kRoundingSlack = 1e-12;

double CheckedProbability(double p, const char* name) {
  if (p < -kRoundingSlack || p > 1 + kRoundingSlack) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s = %.12g outside [0, 1]", name, p);
    throw DefectError(DefectKind::kMixingOutOfRange, buf);
  }
  return std::clamp(p, 0.0, 1.0);
}

// Mass of agents that are high on the correlational feature.
double HighCorrMass(const ModelParams& p) {
  return p.lambda() * p.theta() + (1 - p.lambda()) * (1 - p.theta());
}

template <typename Case, std::size_t N>
Classification<Case> Resolve(const std::vector<Case>& feasible,
                             const std::array<Case, N>& priority) {
  for (Case c : priority) {
    if (std::find(feasible.begin(), feasible.end(), c) != feasible.end()) {
      return {c, false};
    }
  }
  throw DefectError(DefectKind::kUnclassifiablePoint,
                    "no case's region inequalities hold at this cost point");
}

constexpr std::array<OpaqueCase, 5> kOpaquePriority = {
    OpaqueCase::kO1, OpaqueCase::kO2, OpaqueCase::kO3, OpaqueCase::kO4,
    OpaqueCase::kO5};
constexpr std::array<TransparentCase, 3> kTransparentPriority = {
    TransparentCase::kT2, TransparentCase::kT3, TransparentCase::kT1};

// Probes the eight neighbours at distance kEpsilon; a different
// classification at any of them marks a boundary point.
template <typename Classify>
bool NearBoundary(double cost_h, double cost_l, Classify classify) {
  const auto centre = classify(cost_h, cost_l);
  for (int dh = -1; dh <= 1; ++dh) {
    for (int dl = -1; dl <= 1; ++dl) {
      if (dh == 0 && dl == 0) continue;
      const double h = cost_h + dh * kEpsilon;
      const double l = cost_l + dl * kEpsilon;
      if (h < 0 || h >= l) continue;
      if (classify(h, l) != centre) return true;
    }
  }
  return false;
}

}  // namespace

std::string_view ToString(DefectKind kind) {
  switch (kind) {
    case DefectKind::kUnclassifiablePoint: return "UnclassifiablePoint";
    case DefectKind::kInconsistentPair: return "InconsistentPair";
    case DefectKind::kTheoremMismatch: return "TheoremMismatch";
    case DefectKind::kSignViolation: return "SignViolation";
    case DefectKind::kMixingOutOfRange: return "MixingOutOfRange";
    case DefectKind::kThresholdOrder: return "ThresholdOrder";
  }
  return "?";
}

std::string_view ToString(OpaqueCase c) {
  switch (c) {
    case OpaqueCase::kO1: return "O1";
    case OpaqueCase::kO2: return "O2";
    case OpaqueCase::kO3: return "O3";
    case OpaqueCase::kO4: return "O4";
    case OpaqueCase::kO5: return "O5";
  }
  return "?";
}

std::string_view ToString(TransparentCase c) {
  switch (c) {
    case TransparentCase::kT1: return "T1";
    case TransparentCase::kT2: return "T2";
    case TransparentCase::kT3: return "T3";
  }
  return "?";
}

std::optional<OpaqueCase> ParseOpaqueCase(std::string_view label) {
  for (OpaqueCase c : kOpaquePriority) {
    if (ToString(c) == label) return c;
  }
  return std::nullopt;
}

std::optional<TransparentCase> ParseTransparentCase(std::string_view label) {
  for (TransparentCase c : kTransparentPriority) {
    if (ToString(c) == label) return c;
  }
  return std::nullopt;
}

std::string_view ToString(SelectionRule rule) {
  return rule == SelectionRule::kPublished ? "published" : "nash-consistent";
}

std::optional<SelectionRule> ParseSelectionRule(std::string_view text) {
  if (text == "published") return SelectionRule::kPublished;
  if (text == "nash-consistent") return SelectionRule::kNashConsistent;
  return std::nullopt;
}

OpaqueCase CaseId::opaque() const {
  if (scenario != Scenario::kOpaque || number < 1 || number > 5) {
    throw std::logic_error("not an opaque case: " + label());
  }
  return static_cast<OpaqueCase>(number);
}

TransparentCase CaseId::transparent() const {
  if (scenario != Scenario::kTransparent || number < 1 || number > 3) {
    throw std::logic_error("not a transparent case: " + label());
  }
  return static_cast<TransparentCase>(number);
}

std::string CaseId::label() const {
  return (scenario == Scenario::kOpaque ? "O" : "T") + std::to_string(number);
}

MixedStrategy O4Mixing(const ModelParams& params) {
  const double theta = params.theta();
  const double lambda = params.lambda();
  const double r = params.reward();
  const double alpha = params.alpha();
  // H indifferent: lambda * p4 * R = R - C_H.
  const double p4 = (1 - params.cost_h() / r) / lambda;
  // Firm indifferent on A: the H-share there equals R / alpha.
  const double p_h =
      1 - r * (1 - theta) * (1 - lambda) / ((alpha - r) * theta * lambda);
  return {CheckedProbability(p4, "p4"), CheckedProbability(p_h, "p_H")};
}

MixedStrategy O5Mixing(const ModelParams& params) {
  const double theta = params.theta();
  const double lambda = params.lambda();
  const double r = params.reward();
  const double alpha = params.alpha();
  const double beta = params.beta();
  // L indifferent: ((1 - lambda) + lambda * p5) R = C_L.
  const double p5 = (params.cost_l() - r) / (lambda * r) + 1;
  // Firm indifferent on D: the H-share there equals (R - beta) / alpha.
  const double p_l = theta * (1 - lambda) * (alpha + beta - r) /
                     ((1 - theta) * lambda * (r - beta));
  return {CheckedProbability(p5, "p5"), CheckedProbability(p_l, "p_L")};
}

double ClosedFormFirmPayoff(OpaqueCase c, const ModelParams& p) {
  const double theta = p.theta();
  const double lambda = p.lambda();
  const double alpha = p.alpha();
  const double beta = p.beta();
  const double r = p.reward();
  switch (c) {
    case OpaqueCase::kO1:
      return lambda * theta * alpha - HighCorrMass(p) * r;
    case OpaqueCase::kO2:
      return theta * (alpha + beta) - theta * r;
    case OpaqueCase::kO3:
      return lambda * theta * (alpha + beta) +
             (1 - lambda) * (1 - theta) * beta - HighCorrMass(p) * r;
    case OpaqueCase::kO4:
      return theta * (alpha + beta - r) *
             (1 - r * (1 - theta) * (1 - lambda) /
                      ((alpha - r) * theta * lambda));
    case OpaqueCase::kO5:
      return (2 * lambda - 1) / lambda * theta * (alpha + beta - r);
  }
  throw std::logic_error("unknown opaque case");
}

double ClosedFormFirmPayoff(TransparentCase c, const ModelParams& p) {
  const double theta = p.theta();
  switch (c) {
    case TransparentCase::kT1:
      return 0.0;
    case TransparentCase::kT2:
      return theta * (p.alpha() + p.beta() - p.reward());
    case TransparentCase::kT3:
      return theta * (p.alpha() + p.beta()) + (1 - theta) * p.beta() -
             p.reward();
  }
  throw std::logic_error("unknown transparent case");
}

PayoffTriple ClosedFormPayoffs(OpaqueCase c, const ModelParams& p) {
  const double theta = p.theta();
  const double lambda = p.lambda();
  const double r = p.reward();
  const double ch = p.cost_h();
  const double cl = p.cost_l();
  PayoffTriple out{.firm = ClosedFormFirmPayoff(c, p)};
  switch (c) {
    case OpaqueCase::kO1:
      out.agents_h = theta * lambda * r;
      out.agents_l = (1 - theta) * (1 - lambda) * r;
      break;
    case OpaqueCase::kO2:
      out.agents_h = theta * (r - ch);
      out.agents_l = 0.0;
      break;
    case OpaqueCase::kO3:
      out.agents_h = theta * lambda * r - theta * ch;
      out.agents_l = (1 - theta) * (1 - lambda) * r - (1 - theta) * cl;
      break;
    case OpaqueCase::kO4: {
      const double p4 = O4Mixing(p).firm_probability;
      out.agents_h = theta * (r - ch);
      out.agents_l = p4 * (1 - theta) * (1 - lambda) * r;
      break;
    }
    case OpaqueCase::kO5: {
      const double p5 = O5Mixing(p).firm_probability;
      out.agents_h = (theta * lambda + theta * (1 - lambda) * p5) * r -
                     theta * ch;
      out.agents_l = 0.0;
      break;
    }
  }
  return out;
}

PayoffTriple ClosedFormPayoffs(TransparentCase c, const ModelParams& p) {
  const double theta = p.theta();
  const double r = p.reward();
  PayoffTriple out{.firm = ClosedFormFirmPayoff(c, p)};
  switch (c) {
    case TransparentCase::kT1:
      break;
    case TransparentCase::kT2:
      out.agents_h = theta * (r - p.cost_h());
      break;
    case TransparentCase::kT3:
      out.agents_h = theta * (r - p.cost_h());
      out.agents_l = (1 - theta) * (r - p.cost_l());
      break;
  }
  return out;
}

double ClosedFormAgentTotal(OpaqueCase c, const ModelParams& p) {
  const double theta = p.theta();
  const double lambda = p.lambda();
  const double r = p.reward();
  const double ch = p.cost_h();
  const double cl = p.cost_l();
  switch (c) {
    case OpaqueCase::kO1:
      return HighCorrMass(p) * r;
    case OpaqueCase::kO2:
      return theta * (r - ch);
    case OpaqueCase::kO3:
      return HighCorrMass(p) * r - ch * theta - cl * (1 - theta);
    case OpaqueCase::kO4:
      return HighCorrMass(p) * (r - ch) / lambda;
    case OpaqueCase::kO5:
      return (2 * r * lambda - r - ch * lambda - cl * lambda + cl) * theta /
             lambda;
  }
  throw std::logic_error("unknown opaque case");
}

double ClosedFormAgentTotal(TransparentCase c, const ModelParams& p) {
  const double theta = p.theta();
  const double r = p.reward();
  switch (c) {
    case TransparentCase::kT1:
      return 0.0;
    case TransparentCase::kT2:
      return theta * (r - p.cost_h());
    case TransparentCase::kT3:
      return r - p.cost_h() * theta - p.cost_l() * (1 - theta);
  }
  throw std::logic_error("unknown transparent case");
}

EquilibriumOutcome OpaqueCaseOutcome(OpaqueCase c, const ModelParams& params) {
  StrategyProfile profile{.scenario = Scenario::kOpaque};
  std::optional<MixedStrategy> mixing;
  HiringPolicy policy = HiringPolicy::Opaque(0, 1, 0, 1);
  switch (c) {
    case OpaqueCase::kO1:
      policy = HiringPolicy::Opaque(1, 1, 0, 1);
      break;
    case OpaqueCase::kO2:
      profile.improve_h = 1;
      policy = HiringPolicy::Opaque(0, 1, 0, 1);
      break;
    case OpaqueCase::kO3:
      profile.improve_h = profile.improve_l = 1;
      policy = HiringPolicy::Opaque(0, 1, 0, 0);
      break;
    case OpaqueCase::kO4:
      mixing = O4Mixing(params);
      profile.improve_h = mixing->agent_probability;
      policy = HiringPolicy::Opaque(mixing->firm_probability, 1, 0, 1);
      break;
    case OpaqueCase::kO5:
      mixing = O5Mixing(params);
      profile.improve_h = 1;
      profile.improve_l = mixing->agent_probability;
      policy = HiringPolicy::Opaque(0, 1, 0, mixing->firm_probability);
      break;
  }
  return EquilibriumOutcome{
      .id = CaseId::Of(c),
      .profile = profile,
      .policy = policy,
      .payoffs = ClosedFormPayoffs(c, params),
      .mixing = mixing,
  };
}

EquilibriumOutcome TransparentCaseOutcome(TransparentCase c,
                                          const ModelParams& params) {
  StrategyProfile profile{.scenario = Scenario::kTransparent};
  if (c != TransparentCase::kT1) profile.improve_h = 1;
  if (c == TransparentCase::kT3) profile.improve_l = 1;
  return EquilibriumOutcome{
      .id = CaseId::Of(c),
      .profile = profile,
      .policy = HiringPolicy::Transparent(0, 1),
      .payoffs = ClosedFormPayoffs(c, params),
  };
}

std::vector<OpaqueCase> FeasibleOpaqueCases(double lambda, double reward,
                                            double cost_h, double cost_l,
                                            SelectionRule rule) {
  const double r = reward;
  const double lo = (1 - lambda) * r;
  const double hi = lambda * r;
  std::vector<OpaqueCase> out;
  if (cost_h >= lo && cost_l >= hi) out.push_back(OpaqueCase::kO1);
  if (cost_h <= r && cost_l >= r) out.push_back(OpaqueCase::kO2);
  if (cost_h <= hi && cost_l <= lo) out.push_back(OpaqueCase::kO3);
  const bool h_range = cost_h >= lo && cost_h <= r;
  if (rule == SelectionRule::kPublished) {
    if (h_range && cost_l < hi &&
        (r - cost_h) * (1 - lambda) <= lambda * (r - cost_l)) {
      out.push_back(OpaqueCase::kO4);
    }
  } else {
    // L must not gain from educating: R - C_L <= (1 - lambda) p4 R.
    if (h_range && lambda * (r - cost_l) <= (1 - lambda) * (r - cost_h)) {
      out.push_back(OpaqueCase::kO4);
    }
  }
  if (cost_l >= lo && cost_l <= r &&
      lambda * (r - cost_h) >= (1 - lambda) * (r - cost_l)) {
    out.push_back(OpaqueCase::kO5);
  }
  return out;
}

std::vector<TransparentCase> FeasibleTransparentCases(double reward,
                                                      double cost_h,
                                                      double cost_l) {
  std::vector<TransparentCase> out;
  if (cost_h >= reward && cost_l >= reward) {
    out.push_back(TransparentCase::kT1);
  }
  if (cost_h <= reward && cost_l >= reward) {
    out.push_back(TransparentCase::kT2);
  }
  if (cost_h <= reward && cost_l <= reward) {
    out.push_back(TransparentCase::kT3);
  }
  return out;
}

Classification<OpaqueCase> ClassifyOpaque(double lambda, double reward,
                                          double cost_h, double cost_l,
                                          SelectionRule rule) {
  auto classify = [&](double h, double l) {
    return Resolve(FeasibleOpaqueCases(lambda, reward, h, l, rule),
                   kOpaquePriority)
        .played;
  };
  return {classify(cost_h, cost_l), NearBoundary(cost_h, cost_l, classify)};
}

Classification<TransparentCase> ClassifyTransparent(double reward,
                                                    double cost_h,
                                                    double cost_l) {
  auto classify = [&](double h, double l) {
    return Resolve(FeasibleTransparentCases(reward, h, l),
                   kTransparentPriority)
        .played;
  };
  return {classify(cost_h, cost_l), NearBoundary(cost_h, cost_l, classify)};
}

EquilibriumOutcome SolveOpaque(const ModelParams& params, SelectionRule rule) {
  const auto cls = ClassifyOpaque(params.lambda(), params.reward(),
                                  params.cost_h(), params.cost_l(), rule);
  EquilibriumOutcome outcome = OpaqueCaseOutcome(cls.played, params);
  outcome.boundary = cls.boundary;
  if (cls.boundary) {
    outcome.warnings.push_back(
        "BoundaryAmbiguity: opaque cost point within 1e-9 of a case "
        "boundary; classified as " +
        outcome.id.label() + " by dominance order");
  }
  return outcome;
}

EquilibriumOutcome SolveTransparent(const ModelParams& params) {
  const auto cls =
      ClassifyTransparent(params.reward(), params.cost_h(), params.cost_l());
  EquilibriumOutcome outcome = TransparentCaseOutcome(cls.played, params);
  outcome.boundary = cls.boundary;
  if (cls.boundary) {
    outcome.warnings.push_back(
        "BoundaryAmbiguity: transparent cost point within 1e-9 of C_H = R "
        "or C_L = R; classified as " +
        outcome.id.label());
  }
  return outcome;
}

}  // namespace tgame
