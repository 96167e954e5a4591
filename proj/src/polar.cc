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


#include "gkp_polar/polar.h"

#include <stdexcept>
#include <string>

#include "gkp_polar/field.h"

namespace gkp_polar {

PolarCodeSpec PolarCodeSpec::open(int n, int d, int alpha) {
    PolarCodeSpec c;
    c.n = n;
    c.d = d;
    c.alpha = alpha;
    c.frozen_mask.assign(c.N(), 0);
    c.frozen_values.assign(c.N(), 0);
    return c;
}

void PolarCodeSpec::validate() const {
    if (n < 0 || n > 30) {
        throw std::invalid_argument("polar code needs 0 <= n <= 30, got " + std::to_string(n));
    }
    PrimeField f(d);
    if (f.reduce(alpha) == 0) {
        throw std::invalid_argument("kernel multiplier alpha must be nonzero mod d");
    }
    if (frozen_mask.size() != N() || frozen_values.size() != N()) {
        throw std::invalid_argument("frozen_mask and frozen_values must have length N");
    }
    for (int v : frozen_values) {
        if (v < 0 || v >= d) {
            throw std::invalid_argument("frozen values must be residues in [0, d)");
        }
    }
}

int log2_length(size_t size) {
    if (size < 1 || (size & (size - 1)) != 0) {
        throw std::domain_error("polar block length must be a power of two, got " + std::to_string(size));
    }
    int n = 0;
    while ((size_t{1} << n) < size) {
        ++n;
    }
    return n;
}

void polar_transform_inplace(int *x, int n, int d, int alpha) {
    size_t N = size_t{1} << n;
    PrimeField f(d);
    int a = f.reduce(alpha);
    for (size_t h = 1; h < N; h <<= 1) {
        for (size_t base = 0; base < N; base += 2 * h) {
            for (size_t j = base; j < base + h; ++j) {
                x[j] = f.add(x[j], f.mul(a, x[j + h]));
            }
        }
    }
}

void polar_inverse_inplace(int *x, int n, int d, int alpha) {
    PrimeField f(d);
    polar_transform_inplace(x, n, d, f.neg(f.reduce(alpha)));
}

static std::vector<int> checked_copy(const std::vector<int> &v, int d) {
    PrimeField f(d);
    std::vector<int> out(v.size());
    for (size_t k = 0; k < v.size(); ++k) {
        out[k] = f.reduce(v[k]);
    }
    return out;
}

std::vector<int> polar_encode(const std::vector<int> &u, int d, int alpha) {
    int n = log2_length(u.size());
    std::vector<int> x = checked_copy(u, d);
    polar_transform_inplace(x.data(), n, d, alpha);
    return x;
}

std::vector<int> polar_encode_inverse(const std::vector<int> &x, int d, int alpha) {
    int n = log2_length(x.size());
    std::vector<int> u = checked_copy(x, d);
    polar_inverse_inplace(u.data(), n, d, alpha);
    return u;
}

std::vector<int> polar_encode(const std::vector<int> &u, const PolarCodeSpec &code) {
    if (u.size() != code.N()) {
        throw std::domain_error("input length does not match the code length");
    }
    return polar_encode(u, code.d, code.alpha);
}

std::vector<int> polar_encode_inverse(const std::vector<int> &x, const PolarCodeSpec &code) {
    if (x.size() != code.N()) {
        throw std::domain_error("input length does not match the code length");
    }
    return polar_encode_inverse(x, code.d, code.alpha);
}

}  // namespace gkp_polar
