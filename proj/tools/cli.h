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

#ifndef TGAME_TOOLS_CLI_H_
#define TGAME_TOOLS_CLI_H_

#include <ostream>

namespace tgame::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unreadable config, IO
inline constexpr int kExitAssumption = 2;
inline constexpr int kExitDefect = 3;  // also: a verify check failed
inline constexpr int kExitNonConvergence = 4;

// Entry point of the tgame tool, with injectable streams for testing.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace tgame::cli

#endif  // TGAME_TOOLS_CLI_H_
