// Copyright 2026 The Authors.
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

#ifndef MKVC_CLI_CLI_H_
#define MKVC_CLI_CLI_H_

#include <iosfwd>

namespace mkvc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolverError = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;

// Runs the `mkvc` command line with the given argument vector.
int CliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mkvc::cli

#endif  // MKVC_CLI_CLI_H_
