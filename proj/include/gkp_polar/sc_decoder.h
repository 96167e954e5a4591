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


// Successive-cancellation decoding of the (1 alpha; 0 1)^{(x) n} polar
// transform over F_d.
//
// The tree is walked iteratively: one belief buffer per depth and one buffer of
// re-encoded left-child decisions per depth. Two belief representations share
// the traversal: normalized probability rows (the fast default) and LLR
// vectors updated with f_check / g_variable.

#ifndef GKP_POLAR_SC_DECODER_H
#define GKP_POLAR_SC_DECODER_H

#include <cstdint>
#include <functional>
#include <vector>

#include "gkp_polar/llr.h"
#include "gkp_polar/polar.h"

namespace gkp_polar {

/// Receives leaf i (in decoding order) and its LLR vector before the decision is made.
using LeafCallback = std::function<void(int i, const double *llr)>;

class ScDecoder {
   public:
    ScDecoder(int n, int d, int alpha);

    int n() const {
        return n_;
    }
    int d() const {
        return d_;
    }
    size_t N() const {
        return size_t{1} << n_;
    }

    /// probs holds N rows of d non-negative weights proportional to P(x_j = a).
    /// genie may be null; when given, it replaces every decision.
    void decode_probabilities(const double *probs, const uint8_t *frozen_mask, const int *frozen_values,
                              const int *genie, int *u_hat, const LeafCallback &on_leaf = {});

    /// llrs holds N LLR vectors of length d.
    void decode_llrs(const double *llrs, const uint8_t *frozen_mask, const int *frozen_values, const int *genie,
                     int *u_hat, const LeafCallback &on_leaf = {});

   private:
    template <class Kernel>
    void run(Kernel &kernel, const double *input, const uint8_t *frozen_mask, const int *frozen_values,
             const int *genie, int *u_hat, const LeafCallback &on_leaf);

    int n_;
    int d_;
    int alpha_;
    std::vector<int> perm_;  // perm_[i * d + a] = i + alpha a
    std::vector<std::vector<double>> beliefs_;
    std::vector<std::vector<int>> left_;
    std::vector<int> cur_, next_;
};

struct ScResult {
    std::vector<int> u_hat;
    std::vector<LlrVector> leaf_llrs;
};

/// LLR-domain decode of a single word.
ScResult sc_decode(const std::vector<LlrVector> &channel_llrs, const PolarCodeSpec &code,
                   const std::vector<int> *genie = nullptr);

/// Index of the amplitude-side position paired with leaf k of the phase-side decoder.
inline size_t phase_leaf_to_index(size_t k, size_t N) {
    return N - 1 - k;
}

}  // namespace gkp_polar

#endif
