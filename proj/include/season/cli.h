// Copyright 2026 The SEASON-cpp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEASON_CLI_H_
#define SEASON_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace season::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // self-check disagreement, internal error
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumeric = 4;

// Runs one subcommand. `args` excludes the program name. Options may also
// come from a key=value file given with --config; command-line flags win
// over the file, the file wins over defaults, unknown keys are rejected.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace season::cli

#endif  // SEASON_CLI_H_
