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


// Composite Gauss-Legendre quadrature with panel doubling.

#ifndef GKP_POLAR_QUADRATURE_H
#define GKP_POLAR_QUADRATURE_H

#include <functional>

namespace gkp_polar {

struct QuadResult {
    double value = 0;
    /// |difference| between the last two refinement levels.
    double error_est = 0;
    int panels = 0;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    int min_panels = 64;
    int max_panels = 1 << 16;
};

/// Integrates f over [a, b] with 16-point Gauss-Legendre panels, doubling the
/// panel count until successive estimates differ by less than abs_tol.
/// Throws NumericError when max_panels is reached first.
QuadResult integrate(const std::function<double(double)> &f, double a, double b, const QuadOptions &opt = {});

}  // namespace gkp_polar

#endif
