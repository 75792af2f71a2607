// Copyright 2026 The swapdec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swapdec::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kValidation = 1,
    kResource = 2,
    kInsufficientData = 3,
};

/// Full command-line entry point: `swapdec <experiment> --config <path> ...`.
/// Diagnostics go to `err`, progress lines to `out`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run_cli(int argc, char **argv);

} // namespace swapdec::cli
