// Copyright 2026 The qcheb Authors
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
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcheb::cli {

/// Process exit codes of the qcheb tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,        ///< bad flags, config or model file
    kExitIo = 2,           ///< file could not be read or written
    kExitVerification = 3, ///< a verification suite found a deviation
    kExitNumerical = 4,    ///< non-finite values during a computation
};

/// Environment variable naming the directory for outputs whose path flag is omitted.
inline constexpr const char *kOutputDirEnv = "QCHEB_OUTPUT_DIR";

/// Runs one command line (argv[0] is the program name) and returns its exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qcheb::cli
