// Copyright 2026 The qjd developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cli.hpp — command line front end. Subcommands: decompose, joint,
// baselines, verify, sweep. Exit codes: 0 success / all-pass, 1 property
// failure, 2 invalid input, 3 internal error. All randomness flows from
// --seed; verify and sweep refuse to run without it.

#pragma once

namespace qjd::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

// Parses argv, dispatches and maps errors onto the exit codes above.
// Diagnostics go to stderr; requested artifacts to stdout or --out.
int run(int argc, const char* const* argv);

}  // namespace qjd::cli
