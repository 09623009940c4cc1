// Copyright 2026 The entpower Authors
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

#ifndef ENTPOWER_CLI_HPP
#define ENTPOWER_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "entpower/linalg.hpp"
#include "entpower/parallel.hpp"

namespace entpower::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInputError = 1,
    kDomainError = 2,
    kValidationFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code. All output goes to `out` / `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Loads a matrix file, or a permutation file if it has "images".
/// Throws Error(Parse) / Error(NotUnitary).
Unitary load_unitary(const std::filesystem::path &path);

struct SelftestOptions {
    // Replaces the swap operator under test with a phase-flipped copy.
    bool corrupt_swap = false;
    ExecPolicy policy;
};

/// Runs the invariant suite at d = 2, 3 and prints a summary table.
/// Returns kSuccess or kValidationFailure.
int selftest(const SelftestOptions &options, std::ostream &out);

}  // namespace entpower::cli

#endif
