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

#include "tgame/sampling.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace tgame {

ParamSampler::ParamSampler(std::uint64_t seed, SamplerOptions options)
    : engine_(seed), options_(options) {}

double ParamSampler::Uniform(double lo, double hi) {
  const double pad = (hi - lo) * options_.margin;
  return std::uniform_real_distribution<double>(lo + pad, hi - pad)(engine_);
}

RawParams ParamSampler::NextBase() {
  const double theta = Uniform(options_.theta_min, options_.theta_max);
  const double lambda = Uniform(options_.lambda_min, options_.lambda_max);
  const double reward = Uniform(options_.reward_min, options_.reward_max);
  const AssumptionBounds a = ComputeBounds(theta, lambda, 0, reward);
  const double alpha = Uniform(a.alpha_lower, a.alpha_upper);
  const AssumptionBounds b = ComputeBounds(theta, lambda, alpha, reward);
  // A1 also needs 0 < beta < R.
  const double beta =
      Uniform(std::max(b.beta_lower, 0.0), std::min(b.beta_upper, reward));
  return RawParams{.theta = theta,
                   .lambda = lambda,
                   .alpha = alpha,
                   .beta = beta,
                   .reward = reward,
                   .cost_h = 0,
                   .cost_l = reward};
}

std::pair<double, double> ParamSampler::NextCosts(double reward) {
  const double top = options_.cost_scale * reward;
  std::uniform_real_distribution<double> u(0, top);
  while (true) {
    double h = u(engine_), l = u(engine_);
    if (h > l) std::swap(h, l);
    if (l - h > kEpsilon * 10) return {h, l};
  }
}

ModelParams ParamSampler::Next() {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RawParams raw = NextBase();
    std::tie(raw.cost_h, raw.cost_l) = NextCosts(raw.reward);
    ValidationResult v = ModelParams::Validate(raw);
    if (v.ok()) return v.value();
  }
  throw std::runtime_error("sampler failed to produce valid parameters");
}

}  // namespace tgame
