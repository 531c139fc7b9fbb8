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

#include "tgame/model.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tgame {
namespace {

constexpr std::array<FeatureState, 4> kOpaqueStates = {
    FeatureState::kA, FeatureState::kB, FeatureState::kC, FeatureState::kD};
constexpr std::array<FeatureState, 2> kTransparentStates = {FeatureState::kE,
                                                            FeatureState::kF};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void AddViolation(std::vector<AssumptionViolation>& out, AssumptionId id,
                  std::string what, double value, double bound,
                  bool boundary) {
  std::string detail = std::string(ToString(id)) + ": " + std::move(what);
  if (boundary) detail += " (boundary: within 1e-9 of the bound)";
  out.push_back({id, std::move(detail), value, bound, boundary});
}

// Requires bound < value strictly, with values within kEpsilon of the bound
// reported as boundary violations.
void RequireAbove(std::vector<AssumptionViolation>& out, AssumptionId id,
                  std::string_view name, double value,
                  std::string_view bound_name, double bound) {
  if (value > bound + kEpsilon) return;
  const bool boundary = std::abs(value - bound) <= kEpsilon;
  AddViolation(out, id,
               std::string(name) + "=" + Num(value) + " must exceed " +
                   std::string(bound_name) + "=" + Num(bound),
               value, bound, boundary);
}

void RequireBelow(std::vector<AssumptionViolation>& out, AssumptionId id,
                  std::string_view name, double value,
                  std::string_view bound_name, double bound) {
  if (value < bound - kEpsilon) return;
  const bool boundary = std::abs(value - bound) <= kEpsilon;
  AddViolation(out, id,
               std::string(name) + "=" + Num(value) + " must be below " +
                   std::string(bound_name) + "=" + Num(bound),
               value, bound, boundary);
}

}  // namespace

std::string_view ToString(AgentType type) {
  return type == AgentType::kHigh ? "H" : "L";
}

std::string_view ToString(Scenario scenario) {
  return scenario == Scenario::kOpaque ? "opaque" : "transparent";
}

std::optional<Scenario> ParseScenario(std::string_view text) {
  if (text == "opaque") return Scenario::kOpaque;
  if (text == "transparent") return Scenario::kTransparent;
  return std::nullopt;
}

std::string_view ToString(FeatureState state) {
  switch (state) {
    case FeatureState::kA: return "A";
    case FeatureState::kB: return "B";
    case FeatureState::kC: return "C";
    case FeatureState::kD: return "D";
    case FeatureState::kE: return "E";
    case FeatureState::kF: return "F";
  }
  return "?";
}

std::string_view ToString(AssumptionId id) {
  switch (id) {
    case AssumptionId::kA1: return "A1";
    case AssumptionId::kA2: return "A2";
    case AssumptionId::kA3: return "A3";
    case AssumptionId::kCostOrder: return "CostOrder";
    case AssumptionId::kLambdaRange: return "LambdaRange";
    case AssumptionId::kThetaRange: return "ThetaRange";
    case AssumptionId::kEmptyInterval: return "EmptyInterval";
    case AssumptionId::kNonFinite: return "NonFinite";
  }
  return "?";
}

FeatureValues FeaturesOf(FeatureState state) {
  switch (state) {
    case FeatureState::kA: return {false, true};
    case FeatureState::kB: return {true, true};
    case FeatureState::kC: return {false, false};
    case FeatureState::kD: return {true, false};
    case FeatureState::kE: return {false, std::nullopt};
    case FeatureState::kF: return {true, std::nullopt};
  }
  throw std::logic_error("unknown feature state");
}

Scenario ScenarioOf(FeatureState state) {
  return (state == FeatureState::kE || state == FeatureState::kF)
             ? Scenario::kTransparent
             : Scenario::kOpaque;
}

std::span<const FeatureState> StatesOf(Scenario scenario) {
  if (scenario == Scenario::kOpaque) return kOpaqueStates;
  return kTransparentStates;
}

int StateIndex(FeatureState state) {
  switch (state) {
    case FeatureState::kA: return 0;
    case FeatureState::kB: return 1;
    case FeatureState::kC: return 2;
    case FeatureState::kD: return 3;
    case FeatureState::kE: return 0;
    case FeatureState::kF: return 1;
  }
  throw std::logic_error("unknown feature state");
}

FeatureState WithEducation(FeatureState origin, bool educated) {
  switch (origin) {
    case FeatureState::kA:
    case FeatureState::kB:
      return educated ? FeatureState::kB : FeatureState::kA;
    case FeatureState::kC:
    case FeatureState::kD:
      return educated ? FeatureState::kD : FeatureState::kC;
    case FeatureState::kE:
    case FeatureState::kF:
      return educated ? FeatureState::kF : FeatureState::kE;
  }
  throw std::logic_error("unknown feature state");
}

AssumptionBounds ComputeBounds(double theta, double lambda, double alpha,
                               double reward) {
  const double hired_share = theta * lambda + (1 - theta) * (1 - lambda);
  const double low_corr_h = theta * (1 - lambda);
  const double low_corr_mass = low_corr_h + (1 - theta) * lambda;
  return {
      .alpha_lower = hired_share * reward / (theta * lambda),
      .alpha_upper = reward / theta,
      .beta_lower = reward - theta * alpha,
      .beta_upper = reward - low_corr_h * alpha / low_corr_mass,
  };
}

ValidationResult ModelParams::Validate(const RawParams& raw) {
  ValidationResult result;
  auto& out = result.violations_;

  const std::array<std::pair<std::string_view, double>, 7> fields = {{
      {"theta", raw.theta},
      {"lambda", raw.lambda},
      {"alpha", raw.alpha},
      {"beta", raw.beta},
      {"reward", raw.reward},
      {"cost_h", raw.cost_h},
      {"cost_l", raw.cost_l},
  }};
  for (const auto& [name, value] : fields) {
    if (!std::isfinite(value)) {
      AddViolation(out, AssumptionId::kNonFinite,
                   std::string(name) + " is not a finite number", value, 0.0,
                   false);
    }
  }
  if (!out.empty()) return result;

  RequireAbove(out, AssumptionId::kThetaRange, "theta", raw.theta, "0", 0.0);
  RequireBelow(out, AssumptionId::kThetaRange, "theta", raw.theta, "1", 1.0);
  const bool theta_ok = out.empty();

  if (raw.lambda < 0.5) {
    AddViolation(out, AssumptionId::kLambdaRange,
                 "lambda=" + Num(raw.lambda) + " is below 0.5", raw.lambda,
                 0.5, false);
  } else if (raw.lambda > 1.0) {
    AddViolation(out, AssumptionId::kLambdaRange,
                 "lambda=" + Num(raw.lambda) + " is above 1", raw.lambda, 1.0,
                 false);
  }
  const bool lambda_ok = !result.Violates(AssumptionId::kLambdaRange);

  RequireAbove(out, AssumptionId::kA1, "beta", raw.beta, "0", 0.0);
  RequireBelow(out, AssumptionId::kA1, "beta", raw.beta, "reward", raw.reward);
  RequireBelow(out, AssumptionId::kA1, "reward", raw.reward, "alpha",
               raw.alpha);

  if (theta_ok && lambda_ok && raw.reward > 0) {
    const AssumptionBounds b =
        ComputeBounds(raw.theta, raw.lambda, raw.alpha, raw.reward);
    if (b.alpha_lower >= b.alpha_upper - kEpsilon) {
      AddViolation(out, AssumptionId::kEmptyInterval,
                   "alpha interval (" + Num(b.alpha_lower) + ", " +
                       Num(b.alpha_upper) +
                       ") is empty: requires theta*lambda + "
                       "(1-theta)*(1-lambda) < lambda",
                   b.alpha_lower, b.alpha_upper, false);
    }
    RequireAbove(out, AssumptionId::kA2, "alpha", raw.alpha, "alpha_lower",
                 b.alpha_lower);
    RequireBelow(out, AssumptionId::kA2, "alpha", raw.alpha, "alpha_upper",
                 b.alpha_upper);
    if (b.beta_lower >= b.beta_upper - kEpsilon) {
      AddViolation(out, AssumptionId::kEmptyInterval,
                   "beta interval (" + Num(b.beta_lower) + ", " +
                       Num(b.beta_upper) + ") is empty",
                   b.beta_lower, b.beta_upper, false);
    }
    RequireAbove(out, AssumptionId::kA3, "beta", raw.beta, "beta_lower",
                 b.beta_lower);
    RequireBelow(out, AssumptionId::kA3, "beta", raw.beta, "beta_upper",
                 b.beta_upper);
  }

  if (raw.cost_h < 0) {
    AddViolation(out, AssumptionId::kCostOrder,
                 "cost_h=" + Num(raw.cost_h) + " is negative", raw.cost_h,
                 0.0, false);
  }
  RequireBelow(out, AssumptionId::kCostOrder, "cost_h", raw.cost_h, "cost_l",
               raw.cost_l);

  if (out.empty()) result.params_ = ModelParams(raw);
  return result;
}

bool ValidationResult::Violates(AssumptionId id) const {
  for (const auto& v : violations_) {
    if (v.id == id) return true;
  }
  return false;
}

ModelParams ValidateOrThrow(const RawParams& raw) {
  ValidationResult result = ModelParams::Validate(raw);
  if (result) return result.value();
  std::string message = "invalid model parameters:";
  for (const auto& v : result.violations()) message += "\n  " + v.detail;
  throw std::invalid_argument(message);
}

AssumptionBounds ModelParams::bounds() const {
  return ComputeBounds(raw_.theta, raw_.lambda, raw_.alpha, raw_.reward);
}

HiringThresholds ModelParams::hiring_thresholds() const {
  return {raw_.reward / raw_.alpha, (raw_.reward - raw_.beta) / raw_.alpha};
}

HiringThresholds ComputeHiringThresholds(const ModelParams& params) {
  return params.hiring_thresholds();
}

ValidationResult ModelParams::WithCosts(double cost_h, double cost_l) const {
  RawParams raw = raw_;
  raw.cost_h = cost_h;
  raw.cost_l = cost_l;
  return Validate(raw);
}

PopulationComposition::PopulationComposition(Scenario scenario)
    : scenario_(scenario) {}

void PopulationComposition::CheckState(FeatureState state) const {
  if (ScenarioOf(state) != scenario_) {
    throw std::invalid_argument(std::string("state ") +
                                std::string(ToString(state)) +
                                " does not belong to the " +
                                std::string(ToString(scenario_)) +
                                " scenario");
  }
}

double PopulationComposition::Mass(AgentType type, FeatureState state) const {
  CheckState(state);
  return row(type)[StateIndex(state)];
}

void PopulationComposition::SetMass(AgentType type, FeatureState state,
                                    double mass) {
  CheckState(state);
  if (!(mass >= 0)) throw std::invalid_argument("agent mass must be >= 0");
  row(type)[StateIndex(state)] = mass;
}

double PopulationComposition::StateMass(FeatureState state) const {
  return Mass(AgentType::kHigh, state) + Mass(AgentType::kLow, state);
}

double PopulationComposition::TypeMass(AgentType type) const {
  double total = 0;
  for (FeatureState s : states()) total += Mass(type, s);
  return total;
}

double PopulationComposition::TotalMass() const {
  return TypeMass(AgentType::kHigh) + TypeMass(AgentType::kLow);
}

std::optional<double> PopulationComposition::HighShare(
    FeatureState state) const {
  const double n = StateMass(state);
  if (n <= 0) return std::nullopt;
  return Mass(AgentType::kHigh, state) / n;
}

PopulationComposition InitialComposition(const ModelParams& params,
                                         Scenario scenario) {
  PopulationComposition comp(scenario);
  const double theta = params.theta();
  const double lambda = params.lambda();
  if (scenario == Scenario::kTransparent) {
    comp.SetMass(AgentType::kHigh, FeatureState::kE, theta);
    comp.SetMass(AgentType::kLow, FeatureState::kE, 1 - theta);
    return comp;
  }
  comp.SetMass(AgentType::kHigh, FeatureState::kA, lambda * theta);
  comp.SetMass(AgentType::kHigh, FeatureState::kC, (1 - lambda) * theta);
  comp.SetMass(AgentType::kLow, FeatureState::kA, (1 - lambda) * (1 - theta));
  comp.SetMass(AgentType::kLow, FeatureState::kC, lambda * (1 - theta));
  return comp;
}

HiringPolicy HiringPolicy::Opaque(double p_a, double p_b, double p_c,
                                  double p_d) {
  HiringPolicy policy(Scenario::kOpaque);
  policy.Set(FeatureState::kA, p_a);
  policy.Set(FeatureState::kB, p_b);
  policy.Set(FeatureState::kC, p_c);
  policy.Set(FeatureState::kD, p_d);
  return policy;
}

HiringPolicy HiringPolicy::Transparent(double p_e, double p_f) {
  HiringPolicy policy(Scenario::kTransparent);
  policy.Set(FeatureState::kE, p_e);
  policy.Set(FeatureState::kF, p_f);
  return policy;
}

HiringPolicy HiringPolicy::Uniform(Scenario scenario, double p) {
  HiringPolicy policy(scenario);
  for (FeatureState s : policy.states()) policy.Set(s, p);
  return policy;
}

double HiringPolicy::operator[](FeatureState state) const {
  if (ScenarioOf(state) != scenario_) {
    throw std::invalid_argument("hiring policy dimension does not match state");
  }
  return probability_[StateIndex(state)];
}

void HiringPolicy::Set(FeatureState state, double probability) {
  if (ScenarioOf(state) != scenario_) {
    throw std::invalid_argument("hiring policy dimension does not match state");
  }
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw std::invalid_argument("hiring probability " + Num(probability) +
                                " outside [0, 1]");
  }
  probability_[StateIndex(state)] = probability;
}

}  // namespace tgame
