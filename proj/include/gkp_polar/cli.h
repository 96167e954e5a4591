// Copyright 2026 The gkp-polar Authors
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

#ifndef GKP_POLAR_CLI_H
#define GKP_POLAR_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace gkp_polar::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kNumeric = 3,
};

/// Parses "start:stop:step" (stop excluded) or a single value.
std::vector<double> parse_grid(const std::string &spec);

extern const char *const kRatesHeader;
extern const char *const kLossHeader;
extern const char *const kDesignSummaryHeader;
extern const char *const kSimulateHeader;

/// Entry point of the gkp_polar tool. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gkp_polar::cli

#endif
