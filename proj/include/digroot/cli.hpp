// Copyright 2026 The digroot Authors
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

#ifndef DIGROOT_CLI_HPP
#define DIGROOT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace digroot::cli {

enum ExitCode : int {
  kPositive = 0,
  kNegative = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

/// Runs one subcommand. `args` excludes the program name. The human report
/// is written as '#' comment lines, so when no --out is given the result
/// graph follows and stdout stays a valid graph file. With --json a single
/// JSON record replaces the report.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digroot::cli

#endif  // DIGROOT_CLI_HPP
