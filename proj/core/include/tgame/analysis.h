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

#ifndef TGAME_ANALYSIS_H_
#define TGAME_ANALYSIS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgame/model.h"
#include "tgame/payoff.h"
#include "tgame/solver.h"

namespace tgame {

// Pairing of the opaque and transparent cases played at one cost point.
//   N1 = (O1, T1)  N2 = (O2, T2)  N3 = (O3, T3)
//   C1 = (O1, T3)  C2 = (O4, T3)  C3 = (O5, T3)  C4 = (O1, T2)
enum class Region { kN1, kN2, kN3, kC1, kC2, kC3, kC4 };

inline constexpr std::array<Region, 7> kAllRegions = {
    Region::kN1, Region::kN2, Region::kN3, Region::kC1,
    Region::kC2, Region::kC3, Region::kC4};

std::string_view ToString(Region region);
std::optional<Region> ParseRegion(std::string_view label);

// Throws DefectError(kInconsistentPair) for any other pairing.
Region RegionFromCases(OpaqueCase opaque, TransparentCase transparent);

struct RegionClassification {
  Region region;
  OpaqueCase opaque;
  TransparentCase transparent;
  bool boundary = false;
};

// Geometry only: depends on lambda, R and the two costs.
RegionClassification ClassifyRegionAt(double lambda, double reward,
                                      double cost_h, double cost_l,
                                      SelectionRule rule);
RegionClassification ClassifyRegion(
    const ModelParams& params,
    SelectionRule rule = SelectionRule::kPublished);

// Minimum education premium at which the firm prefers transparency in
// C1 (beta1), C2 (beta2) and C3 (beta3).
struct BetaThresholds {
  double beta1;
  double beta2;
  double beta3;
};

// Unchecked closed forms; usable outside the valid parameter set.
BetaThresholds ComputeBetaThresholds(double theta, double lambda, double alpha,
                                     double reward);
// Also checks beta1 < beta2 < beta3 and beta3 == beta_upper within 1e-9.
// Throws DefectError(kThresholdOrder) otherwise.
BetaThresholds ComputeBetaThresholds(const ModelParams& params);

enum class Preference { kOpaque, kTransparent, kIndifferent };
std::string_view ToString(Preference preference);

// Signed gap difference under the relative indifference tolerance
// 1e-9 * max(1, |opaque|, |transparent|).
Preference PreferenceFromPayoffs(double opaque, double transparent);

struct ThresholdCheck {
  int index;  // 1, 2 or 3
  double value;
  // True when beta exceeds the threshold.
  bool cleared;
};

struct ComparisonReport {
  Region region;
  OpaqueCase opaque_case;
  TransparentCase transparent_case;
  Preference firm_prefers;
  Preference agents_prefer;
  double pi_firm_opaque;
  double pi_firm_transparent;
  double pi_agents_opaque;
  double pi_agents_transparent;
  // transparent minus opaque
  double payoff_gap_firm;
  double payoff_gap_agents;
  std::optional<ThresholdCheck> applicable_threshold;
  double dos_opaque;
  double dos_transparent;
  bool boundary = false;
  std::vector<std::string> warnings;
};

// Preferences allowed by the region rules of the firm-side and agent-side
// comparison. A threshold within kEpsilon of beta admits indifference too.
std::vector<Preference> FirmRule(Region region, double beta,
                                 const BetaThresholds& thresholds);
std::vector<Preference> AgentsRule(Region region);

// Firm side only: region, payoffs, gap, preference and threshold. Throws
// DefectError(kTheoremMismatch) when the payoff gap disagrees with FirmRule
// at a non-boundary point.
ComparisonReport FirmDecision(const ModelParams& params,
                              SelectionRule rule = SelectionRule::kPublished);
// FirmDecision plus the agent side, checked against AgentsRule.
ComparisonReport Compare(const ModelParams& params,
                         SelectionRule rule = SelectionRule::kPublished);
// Same as Compare(); named for the agent-side comparison.
ComparisonReport AgentsDecision(const ModelParams& params,
                                SelectionRule rule = SelectionRule::kPublished);

// 1 - (min(n_H0, n_L0) + min(n_H1, n_L1)) / total, where n_T1 is the type's
// educated mass. Ranges over [max(theta, 1 - theta), 1].
double DegreeOfSeparation(const StrategyProfile& profile,
                          const ModelParams& params);

struct ComparativeStatics {
  double d_beta1_d_lambda = 0;
  double d_beta2_d_lambda = 0;
  double d_beta1_d_theta = 0;
  double d_beta2_d_theta = 0;
  // Central finite differences of ComputeBetaThresholds.
  double fd_beta1_d_lambda = 0;
  double fd_beta2_d_lambda = 0;
  double fd_beta1_d_theta = 0;
  double fd_beta2_d_theta = 0;
  // Largest relative error among the nonzero derivatives; absolute error for
  // d_beta2_d_theta.
  double max_relative_error = 0;
};

// Throws DefectError(kSignViolation) unless the lambda derivatives are
// positive, d beta1 / d theta is negative and d beta2 / d theta is zero.
ComparativeStatics ComputeComparativeStatics(const ModelParams& params,
                                             double step = 1e-6);

struct RegionAreas {
  std::array<double, 7> area{};  // indexed like kAllRegions
  double classified_area = 0;    // sum over labels
  double triangle_area = 0;      // c_max^2 / 2
  int resolution = 0;
  double c_max = 0;

  double operator[](Region region) const { return area[int(region)]; }
};

// Midpoint-grid quadrature of each region over {0 <= C_H < C_L <= c_max}.
// Throws std::invalid_argument if resolution < 100.
RegionAreas ComputeRegionAreas(double lambda, double reward, int resolution,
                               double c_max,
                               SelectionRule rule = SelectionRule::kPublished);

}  // namespace tgame

#endif  // TGAME_ANALYSIS_H_
