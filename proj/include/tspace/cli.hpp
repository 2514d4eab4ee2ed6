// Copyright 2026 The tspace Authors
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

#ifndef TSPACE_CLI_HPP_
#define TSPACE_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tspace {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInputError = 2;

// Runs one subcommand; `args` excludes the program name. The JSON report
// goes to `out`, diagnostics to `err`. Returns 0 when the analysis ran and
// its property holds, 1 when it ran and the property fails, 2 on bad input.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace tspace

#endif  // TSPACE_CLI_HPP_
