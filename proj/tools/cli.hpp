// Copyright 2026 The Jaqal Toolchain Authors
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

#ifndef JAQAL_TOOLS_CLI_HPP
#define JAQAL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace jaqal::cli {

enum ExitCode : int { kOk = 0, kProgramError = 1, kUsageError = 2, kInternalError = 3 };

/// Entry point of the `jaqal` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace jaqal::cli

#endif
