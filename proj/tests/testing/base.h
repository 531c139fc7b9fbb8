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

#ifndef TGAME_TESTS_TESTING_BASE_H_
#define TGAME_TESTS_TESTING_BASE_H_

#include "tgame/model.h"

namespace tgame::testing {

// theta 0.5, lambda 0.75, alpha 1.5, beta 0.5, R 1.
inline RawParams BaseRaw(double cost_h = 0.5, double cost_l = 1.2) {
  return RawParams{.theta = 0.5,
                   .lambda = 0.75,
                   .alpha = 1.5,
                   .beta = 0.5,
                   .reward = 1,
                   .cost_h = cost_h,
                   .cost_l = cost_l};
}

inline ModelParams Base(double cost_h = 0.5, double cost_l = 1.2) {
  return ValidateOrThrow(BaseRaw(cost_h, cost_l));
}

}  // namespace tgame::testing

#endif  // TGAME_TESTS_TESTING_BASE_H_
