// Copyright 2026 The effectkit Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Command-line front end. The entry point is a plain function over streams so
 * tests can drive it without spawning a process.
 *
 * Exit codes: 0 all checks pass, 1 a numerical check failed, 2 usage or parse
 * error.
 */

#pragma once

#include <ostream>

namespace effectkit::cli {

inline constexpr const char *kToolVersion = "effectkit 0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace effectkit::cli
