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

#ifndef TGAME_ERRORS_H_
#define TGAME_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgame {

// Conditions that can only arise from a defect in the case analysis or its
// implementation, never from bad user input.
enum class DefectKind {
  kUnclassifiablePoint,
  kInconsistentPair,
  kTheoremMismatch,
  kSignViolation,
  kMixingOutOfRange,
  kThresholdOrder,
};

std::string_view ToString(DefectKind kind);

class DefectError : public std::runtime_error {
 public:
  DefectError(DefectKind kind, const std::string& what)
      : std::runtime_error(std::string(ToString(kind)) + ": " + what),
        kind_(kind) {}

  DefectKind kind() const { return kind_; }

 private:
  DefectKind kind_;
};

}  // namespace tgame

#endif  // TGAME_ERRORS_H_
