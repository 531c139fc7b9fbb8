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

#ifndef TGAME_TOOLS_REPORT_H_
#define TGAME_TOOLS_REPORT_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "tgame/analysis.h"
#include "tgame/model.h"
#include "tgame/oracle.h"
#include "tgame/solver.h"

namespace tgame::cli {

using Json = nlohmann::ordered_json;

// "%.12g"; every float in CSV and JSON-derived text goes through this.
std::string FormatDouble(double value);

Json ToJson(const RawParams& raw);
Json ToJson(const StrategyProfile& profile);
Json ToJson(const HiringPolicy& policy);
Json ToJson(const PayoffTriple& payoffs);
Json ToJson(const EquilibriumOutcome& outcome);
Json ToJson(const ComparisonReport& report);
Json ToJson(const BetaThresholds& thresholds, const AssumptionBounds& bounds);
Json ToJson(const VerificationReport& report);
Json ToJson(const std::vector<AssumptionViolation>& violations);

struct AnalysisReport {
  RawParams params;
  SelectionRule rule;
  EquilibriumOutcome opaque;
  EquilibriumOutcome transparent;
  ComparisonReport comparison;
  BetaThresholds thresholds;
  AssumptionBounds bounds;
  VerificationReport verify_opaque;
  VerificationReport verify_transparent;
};

// Runs the full analysis. Throws DefectError on internal defects.
AnalysisReport Analyze(const ModelParams& params, SelectionRule rule);
Json ToJson(const AnalysisReport& report);

}  // namespace tgame::cli

#endif  // TGAME_TOOLS_REPORT_H_
