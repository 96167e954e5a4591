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


#ifndef GKP_POLAR_FIELD_H
#define GKP_POLAR_FIELD_H

#include <cstdint>

namespace gkp_polar {

/// Arithmetic in the prime field F_d on canonical residues {0, ..., d-1}.
class PrimeField {
   public:
    /// Throws std::invalid_argument unless d is prime.
    explicit PrimeField(int d);

    int d() const {
        return d_;
    }
    int add(int a, int b) const {
        int r = a + b;
        return r >= d_ ? r - d_ : r;
    }
    int sub(int a, int b) const {
        int r = a - b;
        return r < 0 ? r + d_ : r;
    }
    int neg(int a) const {
        return a == 0 ? 0 : d_ - a;
    }
    int mul(int a, int b) const {
        return (int)((int64_t)a * b % d_);
    }
    int pow(int a, int64_t e) const;
    /// a^(d-2); throws std::domain_error for a == 0.
    int inv(int a) const;
    /// Reduces an arbitrary integer to its canonical residue.
    int reduce(int64_t a) const {
        int64_t r = a % d_;
        return (int)(r < 0 ? r + d_ : r);
    }

   private:
    int d_;
};

int fadd(int a, int b, const PrimeField &f);
int fmul(int a, int b, const PrimeField &f);
int finv(int a, const PrimeField &f);

}  // namespace gkp_polar

#endif
