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

#ifndef TGAME_TOOLS_SWEEP_H_
#define TGAME_TOOLS_SWEEP_H_

#include <optional>
#include <ostream>
#include <vector>

#include "tgame/analysis.h"
#include "tgame/model.h"
#include "tgame/solver.h"

namespace tgame::cli {

struct SweepSpec {
  RawParams base;  // costs ignored
  double c_min = 0;
  double c_max = 1.5;
  int steps = 101;
  bool verify = false;
  SelectionRule rule = SelectionRule::kPublished;
  int threads = 0;  // 0 = auto
};

struct SweepRow {
  double c_h = 0;
  double c_l = 0;
  bool feasible = false;
  std::optional<ComparisonReport> report = std::nullopt;
  bool nash_ok_opaque = false;
  bool nash_ok_transparent = false;
};

// Number of worker threads: `requested` if positive, else
// TRANSPARENCY_GAME_THREADS if set and positive, else the hardware count.
int ResolveThreads(int requested);

// Grid rows in c_h-major order. Throws std::invalid_argument on a bad spec and
// DefectError from the analysis.
std::vector<SweepRow> RunSweep(const SweepSpec& spec);

void WriteSweepCsv(const std::vector<SweepRow>& rows, bool verify,
                   std::ostream& out);
void WriteSweepJson(const std::vector<SweepRow>& rows, bool verify,
                    std::ostream& out);

}  // namespace tgame::cli

#endif  // TGAME_TOOLS_SWEEP_H_
