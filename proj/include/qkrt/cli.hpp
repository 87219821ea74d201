// Copyright 2026 The qkrt Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qkrt {

/// Exit status for command-line usage errors. Library failures exit with
/// their ErrorCode value.
inline constexpr int kUsageExitCode = 1;

/// Runs the `qkrt` command line. `args` excludes the program name. Summaries
/// and artifacts without an output path go to `out`; failures print
/// {"error": {"code": ..., "message": ...}} to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qkrt
