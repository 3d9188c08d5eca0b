// Copyright 2026 The ifra Authors
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

// Command-line entry point. All commands write their result to `out` and
// diagnostics to `err`, so the whole surface is testable in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ifra::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // numerical failure (e.g. quadrature did not converge)
  kUsage = 2,         // bad flags, unreadable or invalid data, missing seed
  kIncompatible = 3,  // method not available for the reference
  kDegenerate = 4,    // zero variance estimate
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ifra::cli
