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

#include "tgame/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tgame/errors.h"

namespace tgame {
namespace {

// Within this distance of the applicable beta threshold the payoff gap can
// fall under the indifference tolerance, so indifference is also accepted.
constexpr double kThresholdWindow = 1e-6;

template <typename... Args>
std::string Format(const char* fmt, Args... args) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

bool Contains(const std::vector<Preference>& allowed, Preference p) {
  return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
}

std::optional<int> ThresholdIndex(Region region) {
  switch (region) {
    case Region::kC1: return 1;
    case Region::kC2: return 2;
    case Region::kC3: return 3;
    default: return std::nullopt;
  }
}

double ThresholdValue(const BetaThresholds& t, int index) {
  return index == 1 ? t.beta1 : index == 2 ? t.beta2 : t.beta3;
}

ComparisonReport Build(const ModelParams& params, SelectionRule rule,
                       bool check_agents) {
  const EquilibriumOutcome opaque = SolveOpaque(params, rule);
  const EquilibriumOutcome transparent = SolveTransparent(params);
  const Region region =
      RegionFromCases(opaque.id.opaque(), transparent.id.transparent());
  const BetaThresholds thresholds = ComputeBetaThresholds(params);

  ComparisonReport report{
      .region = region,
      .opaque_case = opaque.id.opaque(),
      .transparent_case = transparent.id.transparent(),
      .firm_prefers = PreferenceFromPayoffs(opaque.payoffs.firm,
                                            transparent.payoffs.firm),
      .agents_prefer = PreferenceFromPayoffs(
          opaque.payoffs.agents_total(), transparent.payoffs.agents_total()),
      .pi_firm_opaque = opaque.payoffs.firm,
      .pi_firm_transparent = transparent.payoffs.firm,
      .pi_agents_opaque = opaque.payoffs.agents_total(),
      .pi_agents_transparent = transparent.payoffs.agents_total(),
      .payoff_gap_firm = transparent.payoffs.firm - opaque.payoffs.firm,
      .payoff_gap_agents =
          transparent.payoffs.agents_total() - opaque.payoffs.agents_total(),
      .applicable_threshold = std::nullopt,
      .dos_opaque = DegreeOfSeparation(opaque.profile, params),
      .dos_transparent = DegreeOfSeparation(transparent.profile, params),
      .boundary = opaque.boundary || transparent.boundary,
      .warnings = opaque.warnings,
  };
  report.warnings.insert(report.warnings.end(), transparent.warnings.begin(),
                         transparent.warnings.end());
  if (auto index = ThresholdIndex(region)) {
    const double value = ThresholdValue(thresholds, *index);
    report.applicable_threshold =
        ThresholdCheck{*index, value, params.beta() > value};
  }

  if (report.boundary) {
    report.warnings.push_back(
        "BoundaryAmbiguity: preference rules not cross-checked at a region "
        "boundary");
    return report;
  }
  const auto firm_allowed = FirmRule(region, params.beta(), thresholds);
  if (!Contains(firm_allowed, report.firm_prefers)) {
    throw DefectError(
        DefectKind::kTheoremMismatch,
        std::string("firm prefers ") +
            std::string(ToString(report.firm_prefers)) + " in region " +
            std::string(ToString(region)) +
            Format(" (transparent - opaque = %.12g, beta = %.12g)",
                   report.payoff_gap_firm, params.beta()));
  }
  if (check_agents && !Contains(AgentsRule(region), report.agents_prefer)) {
    throw DefectError(
        DefectKind::kTheoremMismatch,
        std::string("agents prefer ") +
            std::string(ToString(report.agents_prefer)) + " in region " +
            std::string(ToString(region)) +
            Format(" (transparent - opaque = %.12g, C_L = %.12g)",
                   report.payoff_gap_agents, params.cost_l()));
  }
  return report;
}

}  // namespace

std::string_view ToString(Region region) {
  switch (region) {
    case Region::kN1: return "N1";
    case Region::kN2: return "N2";
    case Region::kN3: return "N3";
    case Region::kC1: return "C1";
    case Region::kC2: return "C2";
    case Region::kC3: return "C3";
    case Region::kC4: return "C4";
  }
  return "?";
}

std::optional<Region> ParseRegion(std::string_view label) {
  for (Region r : kAllRegions) {
    if (ToString(r) == label) return r;
  }
  return std::nullopt;
}

Region RegionFromCases(OpaqueCase opaque, TransparentCase transparent) {
  using O = OpaqueCase;
  using T = TransparentCase;
  if (opaque == O::kO1 && transparent == T::kT1) return Region::kN1;
  if (opaque == O::kO2 && transparent == T::kT2) return Region::kN2;
  if (opaque == O::kO3 && transparent == T::kT3) return Region::kN3;
  if (opaque == O::kO1 && transparent == T::kT3) return Region::kC1;
  if (opaque == O::kO4 && transparent == T::kT3) return Region::kC2;
  if (opaque == O::kO5 && transparent == T::kT3) return Region::kC3;
  if (opaque == O::kO1 && transparent == T::kT2) return Region::kC4;
  throw DefectError(DefectKind::kInconsistentPair,
                    std::string(ToString(opaque)) + " with " +
                        std::string(ToString(transparent)) +
                        " is not a region of the cost plane");
}

RegionClassification ClassifyRegionAt(double lambda, double reward,
                                      double cost_h, double cost_l,
                                      SelectionRule rule) {
  const auto o = ClassifyOpaque(lambda, reward, cost_h, cost_l, rule);
  const auto t = ClassifyTransparent(reward, cost_h, cost_l);
  return {RegionFromCases(o.played, t.played), o.played, t.played,
          o.boundary || t.boundary};
}

RegionClassification ClassifyRegion(const ModelParams& params,
                                    SelectionRule rule) {
  return ClassifyRegionAt(params.lambda(), params.reward(), params.cost_h(),
                          params.cost_l(), rule);
}

BetaThresholds ComputeBetaThresholds(double theta, double lambda, double alpha,
                                     double reward) {
  const double t = theta, l = lambda, a = alpha, r = reward;
  return {
      .beta1 = l * t * (a - r) - (1 - l) * (1 - t) * r + r - t * a,
      .beta2 = r - a * r * (1 - l) / ((a - r) * l + r * (1 - l)),
      .beta3 = (l * t * a - t * a - 2 * l * t * r + t * r + l * r) /
               (l - 2 * t * l + t),
  };
}

BetaThresholds ComputeBetaThresholds(const ModelParams& params) {
  const BetaThresholds t = ComputeBetaThresholds(
      params.theta(), params.lambda(), params.alpha(), params.reward());
  const double upper = params.bounds().beta_upper;
  if (!(t.beta1 < t.beta2 + 1e-12 && t.beta2 < t.beta3 + 1e-12)) {
    throw DefectError(DefectKind::kThresholdOrder,
                      Format("beta1 = %.12g, beta2 = %.12g out of order",
                             t.beta1, t.beta2));
  }
  if (std::abs(t.beta3 - upper) > kEpsilon * std::max(1.0, std::abs(upper))) {
    throw DefectError(DefectKind::kThresholdOrder,
                      Format("beta3 = %.12g differs from beta_upper = %.12g",
                             t.beta3, upper));
  }
  return t;
}

std::string_view ToString(Preference preference) {
  switch (preference) {
    case Preference::kOpaque: return "opaque";
    case Preference::kTransparent: return "transparent";
    case Preference::kIndifferent: return "indifferent";
  }
  return "?";
}

Preference PreferenceFromPayoffs(double opaque, double transparent) {
  const double tol =
      kEpsilon * std::max({1.0, std::abs(opaque), std::abs(transparent)});
  const double gap = transparent - opaque;
  if (gap > tol) return Preference::kTransparent;
  if (gap < -tol) return Preference::kOpaque;
  return Preference::kIndifferent;
}

std::vector<Preference> FirmRule(Region region, double beta,
                                 const BetaThresholds& thresholds) {
  switch (region) {
    case Region::kN1:
    case Region::kN3:
      return {Preference::kOpaque};
    case Region::kN2:
      return {Preference::kIndifferent};
    case Region::kC4:
      return {Preference::kTransparent};
    default:
      break;
  }
  const double threshold = ThresholdValue(thresholds, *ThresholdIndex(region));
  std::vector<Preference> allowed = {beta > threshold ? Preference::kTransparent
                                                      : Preference::kOpaque};
  if (std::abs(beta - threshold) <= kThresholdWindow) {
    allowed.push_back(Preference::kIndifferent);
  }
  return allowed;
}

std::vector<Preference> AgentsRule(Region region) {
  switch (region) {
    case Region::kN1:
    case Region::kC1:
    case Region::kC4:
      return {Preference::kOpaque};
    case Region::kN2:
      return {Preference::kIndifferent};
    case Region::kN3:
    case Region::kC2:
    case Region::kC3:
      return {Preference::kTransparent};
  }
  return {};
}

ComparisonReport FirmDecision(const ModelParams& params, SelectionRule rule) {
  return Build(params, rule, /*check_agents=*/false);
}

ComparisonReport Compare(const ModelParams& params, SelectionRule rule) {
  return Build(params, rule, /*check_agents=*/true);
}

ComparisonReport AgentsDecision(const ModelParams& params, SelectionRule rule) {
  return Compare(params, rule);
}

double DegreeOfSeparation(const StrategyProfile& profile,
                          const ModelParams& params) {
  const PopulationComposition end = EndComposition(profile, params);
  double h[2] = {0, 0};
  double l[2] = {0, 0};
  for (FeatureState s : end.states()) {
    const int educated = FeaturesOf(s).educated ? 1 : 0;
    h[educated] += end.Mass(AgentType::kHigh, s);
    l[educated] += end.Mass(AgentType::kLow, s);
  }
  const double total = h[0] + h[1] + l[0] + l[1];
  return 1 - (std::min(h[0], l[0]) + std::min(h[1], l[1])) / total;
}

ComparativeStatics ComputeComparativeStatics(const ModelParams& params,
                                             double step) {
  const double t = params.theta(), l = params.lambda(), a = params.alpha(),
               r = params.reward();
  const double denom = 2 * l * r - r - a * l;
  ComparativeStatics cs{
      .d_beta1_d_lambda = -2 * t * r + t * a + r,
      .d_beta2_d_lambda = a * r * (a - r) / (denom * denom),
      .d_beta1_d_theta = -2 * l * r + l * a + r - a,
      .d_beta2_d_theta = 0,
  };
  const auto up_l = ComputeBetaThresholds(t, l + step, a, r);
  const auto dn_l = ComputeBetaThresholds(t, l - step, a, r);
  const auto up_t = ComputeBetaThresholds(t + step, l, a, r);
  const auto dn_t = ComputeBetaThresholds(t - step, l, a, r);
  cs.fd_beta1_d_lambda = (up_l.beta1 - dn_l.beta1) / (2 * step);
  cs.fd_beta2_d_lambda = (up_l.beta2 - dn_l.beta2) / (2 * step);
  cs.fd_beta1_d_theta = (up_t.beta1 - dn_t.beta1) / (2 * step);
  cs.fd_beta2_d_theta = (up_t.beta2 - dn_t.beta2) / (2 * step);

  auto rel = [](double fd, double exact) {
    return std::abs(fd - exact) / std::abs(exact);
  };
  cs.max_relative_error =
      std::max({rel(cs.fd_beta1_d_lambda, cs.d_beta1_d_lambda),
                rel(cs.fd_beta2_d_lambda, cs.d_beta2_d_lambda),
                rel(cs.fd_beta1_d_theta, cs.d_beta1_d_theta),
                std::abs(cs.fd_beta2_d_theta)});

  if (!(cs.d_beta1_d_lambda > 0)) {
    throw DefectError(DefectKind::kSignViolation,
                      Format("d beta1 / d lambda = %.12g",
                             cs.d_beta1_d_lambda));
  }
  if (!(cs.d_beta2_d_lambda > 0)) {
    throw DefectError(DefectKind::kSignViolation,
                      Format("d beta2 / d lambda = %.12g",
                             cs.d_beta2_d_lambda));
  }
  if (!(cs.d_beta1_d_theta < 0)) {
    throw DefectError(DefectKind::kSignViolation,
                      Format("d beta1 / d theta = %.12g",
                             cs.d_beta1_d_theta));
  }
  return cs;
}

RegionAreas ComputeRegionAreas(double lambda, double reward, int resolution,
                               double c_max, SelectionRule rule) {
  if (resolution < 100) {
    throw std::invalid_argument("region area resolution must be >= 100");
  }
  if (!(c_max > 0) || !(reward > 0) || !(lambda >= 0.5 && lambda <= 1)) {
    throw std::invalid_argument("region area needs c_max > 0, R > 0 and "
                                "lambda in [0.5, 1]");
  }
  RegionAreas out;
  out.resolution = resolution;
  out.c_max = c_max;
  out.triangle_area = c_max * c_max / 2;
  const double d = c_max / resolution;
  const double cell = d * d;
  for (int i = 0; i < resolution; ++i) {
    const double h = (i + 0.5) * d;
    for (int j = i; j < resolution; ++j) {
      double l = (j + 0.5) * d;
      double weight = cell;
      double ch = h;
      if (j == i) {
        // Diagonal cells are half inside the triangle; sample the upper half.
        ch = h - d / 4;
        l = h + d / 4;
        weight = cell / 2;
      }
      const auto cls = ClassifyRegionAt(lambda, reward, ch, l, rule);
      out.area[int(cls.region)] += weight;
    }
  }
  for (double a : out.area) out.classified_area += a;
  return out;
}

}  // namespace tgame
