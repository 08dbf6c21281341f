// Copyright 2026 The labelsim Authors
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

/**
 * @file
 * Command-line front end: `list`, `run` and `sweep`.
 *
 * Exit codes: 0 when every check passes, 1 when a check fails (the report is
 * still written), 2 on usage or parameter errors, 3 when a post-selection is
 * impossible at the requested parameters.
 */
#pragma once

#include <ostream>

namespace labelsim {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitImpossible = 3;

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace labelsim
