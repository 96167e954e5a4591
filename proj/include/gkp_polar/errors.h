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

#ifndef GKP_POLAR_ERRORS_H
#define GKP_POLAR_ERRORS_H

#include <stdexcept>
#include <string>

namespace gkp_polar {

/// Raised when an iterative numeric procedure (series, quadrature, root
/// bracketing) fails to reach its tolerance. Argument-range violations use
/// std::domain_error / std::invalid_argument instead.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace gkp_polar

#endif
