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


// The polar transform x = G_N u over F_d with G_N = (1 alpha; 0 1)^{(x) n}.
// Each butterfly maps (u1, u2) -> (u1 + alpha u2, u2).

#ifndef GKP_POLAR_POLAR_H
#define GKP_POLAR_POLAR_H

#include <cstdint>
#include <vector>

namespace gkp_polar {

struct PolarCodeSpec {
    int n = 0;
    int d = 2;
    int alpha = 1;
    /// frozen_mask[i] != 0 marks u_i as frozen to frozen_values[i].
    std::vector<uint8_t> frozen_mask;
    std::vector<int> frozen_values;

    size_t N() const {
        return size_t{1} << n;
    }
    /// A code with nothing frozen.
    static PolarCodeSpec open(int n, int d, int alpha);
    /// Throws std::invalid_argument on inconsistent fields.
    void validate() const;
};

/// Returns log2(size); throws std::domain_error unless size is a power of two.
int log2_length(size_t size);

std::vector<int> polar_encode(const std::vector<int> &u, int d, int alpha);
std::vector<int> polar_encode_inverse(const std::vector<int> &x, int d, int alpha);
std::vector<int> polar_encode(const std::vector<int> &u, const PolarCodeSpec &code);
std::vector<int> polar_encode_inverse(const std::vector<int> &x, const PolarCodeSpec &code);

/// In-place transforms on a raw buffer of length 2^n.
void polar_transform_inplace(int *x, int n, int d, int alpha);
void polar_inverse_inplace(int *x, int n, int d, int alpha);

}  // namespace gkp_polar

#endif
