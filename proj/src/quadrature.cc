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


#include "gkp_polar/quadrature.h"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <string>

#include "gkp_polar/errors.h"

namespace gkp_polar {

namespace {

using Rule = boost::math::quadrature::gauss<double, 16>;

double composite(const std::function<double(double)> &f, double a, double b, int panels) {
    const auto &x = Rule::abscissa();
    const auto &w = Rule::weights();
    double h = (b - a) / panels;
    double half = h / 2;
    double total = 0;
    for (int p = 0; p < panels; ++p) {
        double mid = a + (p + 0.5) * h;
        double acc = 0;
        // Even point count: abscissa holds the positive nodes only.
        for (size_t k = 0; k < x.size(); ++k) {
            acc += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
        }
        total += acc * half;
    }
    return total;
}

}  // namespace

QuadResult integrate(const std::function<double(double)> &f, double a, double b, const QuadOptions &opt) {
    int panels = opt.min_panels;
    double prev = composite(f, a, b, panels);
    while (panels < opt.max_panels) {
        panels *= 2;
        double cur = composite(f, a, b, panels);
        double diff = std::abs(cur - prev);
        if (diff < opt.abs_tol) {
            return {cur, diff, panels};
        }
        prev = cur;
    }
    throw NumericError("quadrature did not converge with " + std::to_string(panels) + " panels");
}

}  // namespace gkp_polar
