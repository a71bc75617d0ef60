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

#ifndef SEASON_SELFCHECK_H_
#define SEASON_SELFCHECK_H_

#include <cstdint>
#include <ostream>

namespace season {

// Compares the metrics, transport solver and beam search against the
// brute-force oracles on seeded random inputs. One line per family is
// written to `log`. Returns true iff every comparison agrees.
bool RunSelfCheck(std::uint64_t seed, std::ostream& log);

}  // namespace season

#endif  // SEASON_SELFCHECK_H_
