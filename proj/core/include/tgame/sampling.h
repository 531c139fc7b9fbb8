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

#ifndef TGAME_SAMPLING_H_
#define TGAME_SAMPLING_H_

#include <cstdint>
#include <random>

#include "tgame/model.h"

namespace tgame {

struct SamplerOptions {
  double theta_min = 0.05;
  double theta_max = 0.95;
  // lambda = 0.5 leaves an empty alpha interval, so the lower end is open.
  double lambda_min = 0.5;
  double lambda_max = 1.0;
  double reward_min = 0.5;
  double reward_max = 2.0;
  // Costs are drawn from the triangle 0 <= C_H < C_L <= cost_scale * R.
  double cost_scale = 1.5;
  // Fraction of each open interval trimmed from both ends so that draws stay
  // clear of the kEpsilon boundary band.
  double margin = 1e-6;
};

// Seeded draws of valid ModelParams. alpha and beta are uniform inside their
// assumption intervals given the earlier draws, and the costs are uniform on
// the triangle. Deterministic for a given seed.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed, SamplerOptions options = {});

  ModelParams Next();
  // Base parameters only; the costs are zero and C_L is a placeholder.
  RawParams NextBase();
  // Uniform point of the cost triangle for reward R.
  std::pair<double, double> NextCosts(double reward);

 private:
  double Uniform(double lo, double hi);

  std::mt19937_64 engine_;
  SamplerOptions options_;
};

}  // namespace tgame

#endif  // TGAME_SAMPLING_H_
