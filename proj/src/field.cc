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


#include "gkp_polar/field.h"

#include <stdexcept>
#include <string>

#include "gkp_polar/gkp_channel.h"

namespace gkp_polar {

PrimeField::PrimeField(int d) : d_(d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("field order must be prime, got " + std::to_string(d));
    }
}

int PrimeField::pow(int a, int64_t e) const {
    int64_t base = reduce(a);
    int64_t acc = 1 % d_;
    while (e > 0) {
        if (e & 1) {
            acc = acc * base % d_;
        }
        base = base * base % d_;
        e >>= 1;
    }
    return (int)acc;
}

int PrimeField::inv(int a) const {
    if (reduce(a) == 0) {
        throw std::domain_error("zero has no inverse");
    }
    return pow(a, d_ - 2);
}

int fadd(int a, int b, const PrimeField &f) {
    return f.add(f.reduce(a), f.reduce(b));
}

int fmul(int a, int b, const PrimeField &f) {
    return f.mul(f.reduce(a), f.reduce(b));
}

int finv(int a, const PrimeField &f) {
    return f.inv(a);
}

}  // namespace gkp_polar
