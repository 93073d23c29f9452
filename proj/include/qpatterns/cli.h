// Copyright 2026 The qpatterns Authors
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

#ifndef QPATTERNS_CLI_H
#define QPATTERNS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qpatterns {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;
/// Output was produced but a counting resolution flag or the query cap
/// was raised.
inline constexpr int kExitFlagged = 3;

/// Runs one command line (without the program name). Results go to `out`
/// (or to --output), diagnostics to `err`. Returns the process exit code.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpatterns

#endif  // QPATTERNS_CLI_H
