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


#include "gkp_polar/brute_force.h"

#include <cmath>
#include <stdexcept>

#include "gkp_polar/polar.h"

namespace gkp_polar {

std::vector<double> brute_force_wi(const std::vector<std::vector<double>> &table, int alpha,
                                   const std::vector<int> &y, const std::vector<int> &prefix, int i) {
    int d = (int)table.size();
    int N = (int)y.size();
    if (N > 8 || d > 3) {
        throw std::invalid_argument("brute_force_wi is limited to N <= 8 and d <= 3");
    }
    if (i < 0 || i >= N || (int)prefix.size() < i) {
        throw std::invalid_argument("brute_force_wi: index or prefix out of range");
    }
    log2_length(N);
    int tail = N - i - 1;
    int64_t count = 1;
    for (int k = 0; k < tail; ++k) {
        count *= d;
    }
    std::vector<double> out(d, 0.0);
    std::vector<int> u(N);
    for (int k = 0; k < i; ++k) {
        u[k] = prefix[k];
    }
    for (int a = 0; a < d; ++a) {
        u[i] = a;
        for (int64_t c = 0; c < count; ++c) {
            int64_t r = c;
            for (int k = i + 1; k < N; ++k) {
                u[k] = (int)(r % d);
                r /= d;
            }
            std::vector<int> x = polar_encode(u, d, alpha);
            double prod = 1;
            for (int j = 0; j < N; ++j) {
                prod *= table[x[j]][y[j]];
            }
            out[a] += prod;
        }
        out[a] /= std::pow((double)d, N - 1);
    }
    return out;
}

}  // namespace gkp_polar
