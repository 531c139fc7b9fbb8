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

#ifndef TGAME_MODEL_H_
#define TGAME_MODEL_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tgame {

// Tolerance used for strict-inequality boundaries, indifference and tie
// detection throughout the library.
inline constexpr double kEpsilon = 1e-9;

enum class AgentType { kHigh, kLow };

enum class Scenario { kOpaque, kTransparent };

// Opaque states A-D combine (causal, correlational); transparent states E/F
// carry the causal value only, every agent having gamed the correlational
// feature.
enum class FeatureState { kA, kB, kC, kD, kE, kF };

struct FeatureValues {
  bool educated;
  // Empty in the transparent scenario, where the feature carries no signal.
  std::optional<bool> correlational;
};

std::string_view ToString(AgentType type);
std::string_view ToString(Scenario scenario);
std::string_view ToString(FeatureState state);
std::optional<Scenario> ParseScenario(std::string_view text);

FeatureValues FeaturesOf(FeatureState state);
Scenario ScenarioOf(FeatureState state);

// States of a scenario in canonical order: A, B, C, D or E, F.
std::span<const FeatureState> StatesOf(Scenario scenario);
// Position of `state` within StatesOf(ScenarioOf(state)).
int StateIndex(FeatureState state);
// The state an agent lands in after choosing `educated` from `origin`.
FeatureState WithEducation(FeatureState origin, bool educated);

// Unvalidated seven-tuple, as read from flags or a config file.
struct RawParams {
  double theta = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double reward = 0.0;
  double cost_h = 0.0;
  double cost_l = 0.0;
};

enum class AssumptionId {
  kA1,
  kA2,
  kA3,
  kCostOrder,
  kLambdaRange,
  kThetaRange,
  kEmptyInterval,
  kNonFinite,
};

std::string_view ToString(AssumptionId id);

struct AssumptionViolation {
  AssumptionId id;
  // Human-readable description naming the bound and its computed value.
  std::string detail;
  double value = 0.0;
  double bound = 0.0;
  // True when `value` sits within kEpsilon of `bound` rather than beyond it.
  bool boundary = false;
};

// Open intervals checked as A2 (alpha) and A3 (beta). The beta bounds
// depend on alpha.
struct AssumptionBounds {
  double alpha_lower;
  double alpha_upper;
  double beta_lower;
  double beta_upper;
};

AssumptionBounds ComputeBounds(double theta, double lambda, double alpha,
                               double reward);

struct HiringThresholds {
  // Minimum H-share that makes hiring an uneducated state worthwhile, R/alpha.
  double uneducated;
  // Same for an educated state, (R - beta)/alpha.
  double educated;
};

class ValidationResult;

// Model primitives that satisfy every parametric assumption. Only
// constructible through Validate().
class ModelParams {
 public:
  static ValidationResult Validate(const RawParams& raw);

  double theta() const { return raw_.theta; }
  double lambda() const { return raw_.lambda; }
  double alpha() const { return raw_.alpha; }
  double beta() const { return raw_.beta; }
  double reward() const { return raw_.reward; }
  double cost_h() const { return raw_.cost_h; }
  double cost_l() const { return raw_.cost_l; }
  double cost(AgentType type) const {
    return type == AgentType::kHigh ? raw_.cost_h : raw_.cost_l;
  }
  double type_mass(AgentType type) const {
    return type == AgentType::kHigh ? raw_.theta : 1.0 - raw_.theta;
  }
  // Probability that an agent of `type` is high on the correlational feature.
  double correlational_share(AgentType type) const {
    return type == AgentType::kHigh ? raw_.lambda : 1.0 - raw_.lambda;
  }

  const RawParams& raw() const { return raw_; }
  AssumptionBounds bounds() const;
  HiringThresholds hiring_thresholds() const;

  // Same primitives with different education costs, revalidated.
  ValidationResult WithCosts(double cost_h, double cost_l) const;

 private:
  explicit ModelParams(const RawParams& raw) : raw_(raw) {}
  RawParams raw_;
};

class ValidationResult {
 public:
  bool ok() const { return params_.has_value(); }
  explicit operator bool() const { return ok(); }
  // Requires ok().
  const ModelParams& value() const { return *params_; }
  const std::vector<AssumptionViolation>& violations() const {
    return violations_;
  }
  bool Violates(AssumptionId id) const;

 private:
  friend class ModelParams;
  std::optional<ModelParams> params_;
  std::vector<AssumptionViolation> violations_;
};

// Validate() that throws std::invalid_argument listing every violation.
ModelParams ValidateOrThrow(const RawParams& raw);

HiringThresholds ComputeHiringThresholds(const ModelParams& params);

// Agent mass per (type, state) for one scenario. Total mass is 1.
class PopulationComposition {
 public:
  explicit PopulationComposition(Scenario scenario);

  Scenario scenario() const { return scenario_; }
  std::span<const FeatureState> states() const { return StatesOf(scenario_); }

  double Mass(AgentType type, FeatureState state) const;
  void SetMass(AgentType type, FeatureState state, double mass);

  double StateMass(FeatureState state) const;
  double TypeMass(AgentType type) const;
  double TotalMass() const;
  // H-share of a state; empty when the state holds no mass.
  std::optional<double> HighShare(FeatureState state) const;

 private:
  std::array<double, 4>& row(AgentType type) {
    return type == AgentType::kHigh ? high_ : low_;
  }
  const std::array<double, 4>& row(AgentType type) const {
    return type == AgentType::kHigh ? high_ : low_;
  }
  void CheckState(FeatureState state) const;

  Scenario scenario_;
  std::array<double, 4> high_{};
  std::array<double, 4> low_{};
};

// Composition before any education decision. Opaque: mass on A and C split
// by correlational accuracy. Transparent: everyone at E.
PopulationComposition InitialComposition(const ModelParams& params,
                                         Scenario scenario);

// Per-state hiring probabilities: four entries (A-D) or two (E, F).
class HiringPolicy {
 public:
  static HiringPolicy Opaque(double p_a, double p_b, double p_c, double p_d);
  static HiringPolicy Transparent(double p_e, double p_f);
  // Every entry set to `p`.
  static HiringPolicy Uniform(Scenario scenario, double p);

  Scenario scenario() const { return scenario_; }
  std::span<const FeatureState> states() const { return StatesOf(scenario_); }
  double operator[](FeatureState state) const;
  void Set(FeatureState state, double probability);

  friend bool operator==(const HiringPolicy&, const HiringPolicy&) = default;

 private:
  explicit HiringPolicy(Scenario scenario) : scenario_(scenario) {}
  Scenario scenario_;
  std::array<double, 4> probability_{};
};

}  // namespace tgame

#endif  // TGAME_MODEL_H_
