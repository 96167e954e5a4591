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


#include "gkp_polar/sc_decoder.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gkp_polar/field.h"

namespace gkp_polar {

namespace {

struct ProbabilityKernel {
    int d;
    const int *perm;

    void f(const double *in, size_t m, double *out) const {
        const double *bot = in + m * d;
        for (size_t j = 0; j < m; ++j) {
            const double *t = in + j * d;
            const double *b = bot + j * d;
            double *o = out + j * d;
            double mx = 0;
            for (int i = 0; i < d; ++i) {
                const int *p = perm + i * d;
                double acc = 0;
                for (int a = 0; a < d; ++a) {
                    acc += t[p[a]] * b[a];
                }
                o[i] = acc;
                mx = std::max(mx, acc);
            }
            normalize(o, mx);
        }
    }

    void g(const double *in, const int *left, size_t m, double *out) const {
        const double *bot = in + m * d;
        for (size_t j = 0; j < m; ++j) {
            const double *t = in + j * d;
            const double *b = bot + j * d;
            const int *p = perm + left[j] * d;
            double *o = out + j * d;
            double mx = 0;
            for (int i = 0; i < d; ++i) {
                // perm[u * d + i] = u + alpha i
                o[i] = t[p[i]] * b[i];
                mx = std::max(mx, o[i]);
            }
            normalize(o, mx);
        }
    }

    void normalize(double *o, double mx) const {
        if (mx > 0 && std::isfinite(mx)) {
            double inv = 1 / mx;
            for (int i = 0; i < d; ++i) {
                o[i] *= inv;
            }
        } else {
            // Contradictory beliefs; carry no information forward.
            for (int i = 0; i < d; ++i) {
                o[i] = 1;
            }
        }
    }

    void to_llr(const double *leaf, double *llr) const {
        llr[0] = 0;
        for (int a = 1; a < d; ++a) {
            llr[a] = clamp_llr(std::log(leaf[0]) - std::log(leaf[a]));
        }
    }
};

struct LlrKernel {
    int d;
    int alpha;

    void f(const double *in, size_t m, double *out) const {
        const double *bot = in + m * d;
        for (size_t j = 0; j < m; ++j) {
            f_check(in + j * d, bot + j * d, d, alpha, out + j * d);
        }
    }

    void g(const double *in, const int *left, size_t m, double *out) const {
        const double *bot = in + m * d;
        for (size_t j = 0; j < m; ++j) {
            g_variable(in + j * d, bot + j * d, left[j], d, alpha, out + j * d);
        }
    }

    void to_llr(const double *leaf, double *llr) const {
        std::copy(leaf, leaf + d, llr);
    }
};

}  // namespace

ScDecoder::ScDecoder(int n, int d, int alpha) : n_(n), d_(d) {
    if (n < 0 || n > 30) {
        throw std::invalid_argument("decoder depth out of range");
    }
    PrimeField f(d);
    alpha_ = f.reduce(alpha);
    if (alpha_ == 0) {
        throw std::invalid_argument("kernel multiplier alpha must be nonzero mod d");
    }
    perm_.resize((size_t)d * d);
    for (int i = 0; i < d; ++i) {
        for (int a = 0; a < d; ++a) {
            perm_[i * d + a] = f.add(i, f.mul(alpha_, a));
        }
    }
    size_t N = this->N();
    beliefs_.resize(n + 1);
    left_.resize(n + 1);
    for (int k = 1; k <= n; ++k) {
        beliefs_[k].resize((N >> k) * d);
        left_[k].resize(N >> k);
    }
    cur_.resize(N);
    next_.resize(N);
}

template <class Kernel>
void ScDecoder::run(Kernel &kernel, const double *input, const uint8_t *frozen_mask, const int *frozen_values,
                    const int *genie, int *u_hat, const LeafCallback &on_leaf) {
    const int n = n_;
    const int d = d_;
    const size_t N = this->N();
    PrimeField f(d);
    auto level = [&](int k) -> const double * { return k == 0 ? input : beliefs_[k].data(); };
    std::vector<double> llr(d);

    for (size_t i = 0; i < N; ++i) {
        int start;
        if (i == 0) {
            start = 0;
        } else {
            int k = n - std::countr_zero(i);
            size_t m = N >> k;
            kernel.g(level(k - 1), left_[k].data(), m, beliefs_[k].data());
            start = k;
        }
        for (int k = start; k < n; ++k) {
            kernel.f(level(k), N >> (k + 1), beliefs_[k + 1].data());
        }

        kernel.to_llr(level(n), llr.data());
        if (on_leaf) {
            on_leaf((int)i, llr.data());
        }
        int decision;
        if (genie != nullptr) {
            decision = genie[i];
        } else if (frozen_mask != nullptr && frozen_mask[i]) {
            decision = frozen_values != nullptr ? frozen_values[i] : 0;
        } else {
            decision = hard_decision(llr.data(), d);
        }
        u_hat[i] = decision;

        // Re-encode finished right children upward; park the first left child found.
        cur_[0] = decision;
        size_t len = 1;
        size_t idx = i;
        int depth = n;
        while ((idx & 1) != 0) {
            const int *lb = left_[depth].data();
            for (size_t j = 0; j < len; ++j) {
                next_[j] = f.add(lb[j], f.mul(alpha_, cur_[j]));
                next_[j + len] = cur_[j];
            }
            std::swap(cur_, next_);
            len *= 2;
            idx >>= 1;
            --depth;
        }
        if (depth > 0) {
            std::copy(cur_.begin(), cur_.begin() + len, left_[depth].begin());
        }
    }
}

void ScDecoder::decode_probabilities(const double *probs, const uint8_t *frozen_mask, const int *frozen_values,
                                     const int *genie, int *u_hat, const LeafCallback &on_leaf) {
    ProbabilityKernel kernel{d_, perm_.data()};
    run(kernel, probs, frozen_mask, frozen_values, genie, u_hat, on_leaf);
}

void ScDecoder::decode_llrs(const double *llrs, const uint8_t *frozen_mask, const int *frozen_values,
                            const int *genie, int *u_hat, const LeafCallback &on_leaf) {
    LlrKernel kernel{d_, alpha_};
    run(kernel, llrs, frozen_mask, frozen_values, genie, u_hat, on_leaf);
}

ScResult sc_decode(const std::vector<LlrVector> &channel_llrs, const PolarCodeSpec &code,
                   const std::vector<int> *genie) {
    code.validate();
    size_t N = code.N();
    if (channel_llrs.size() != N) {
        throw std::invalid_argument("need one LLR vector per code position");
    }
    if (genie != nullptr && genie->size() != N) {
        throw std::invalid_argument("genie word must have length N");
    }
    std::vector<double> flat(N * code.d);
    for (size_t j = 0; j < N; ++j) {
        if ((int)channel_llrs[j].size() != code.d) {
            throw std::invalid_argument("LLR vector length must equal d");
        }
        std::copy(channel_llrs[j].begin(), channel_llrs[j].end(), flat.begin() + j * code.d);
    }
    ScDecoder dec(code.n, code.d, code.alpha);
    ScResult r;
    r.u_hat.resize(N);
    r.leaf_llrs.resize(N);
    dec.decode_llrs(flat.data(), code.frozen_mask.data(), code.frozen_values.data(),
                    genie ? genie->data() : nullptr, r.u_hat.data(), [&](int i, const double *l) {
                        r.leaf_llrs[i].assign(l, l + code.d);
                    });
    return r;
}

}  // namespace gkp_polar
