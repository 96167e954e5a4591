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


#include "gkp_polar/code_design.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gkp_polar/field.h"
#include "gkp_polar/parallel.h"
#include "gkp_polar/sc_decoder.h"

namespace gkp_polar {

const char *const kToolVersion = "0.1.0";

namespace {

constexpr int64_t kTrialsPerBlock = 64;

struct Accum {
    std::vector<double> sum, sumsq;
};

// Pairwise reduction in a fixed tree shape.
Accum reduce_pairwise(std::vector<Accum> parts) {
    while (parts.size() > 1) {
        std::vector<Accum> next;
        for (size_t k = 0; k + 1 < parts.size(); k += 2) {
            Accum &a = parts[k];
            const Accum &b = parts[k + 1];
            for (size_t i = 0; i < a.sum.size(); ++i) {
                a.sum[i] += b.sum[i];
                a.sumsq[i] += b.sumsq[i];
            }
            next.push_back(std::move(a));
        }
        if (parts.size() % 2 == 1) {
            next.push_back(std::move(parts.back()));
        }
        parts = std::move(next);
    }
    return std::move(parts[0]);
}

void estimate_side(const ChannelSpec &spec, int n, int alpha, Side side, int64_t M, uint64_t seed, int workers,
                   std::vector<double> &z, std::vector<double> &se) {
    spec.validate();
    if (M < 1) {
        throw std::invalid_argument("estimate_z needs at least one sample");
    }
    const int d = spec.d;
    const size_t N = size_t{1} << n;
    PrimeField field(d);
    const int kernel = side == Side::amplitude ? field.reduce(alpha) : field.neg(field.reduce(alpha));
    if (kernel == 0) {
        throw std::invalid_argument("kernel multiplier alpha must be nonzero mod d");
    }
    const uint32_t stream = (uint32_t)(2 * n + (side == Side::phase ? 1 : 0));
    const size_t blocks = (size_t)((M + kTrialsPerBlock - 1) / kTrialsPerBlock);
    std::vector<Accum> parts(blocks);

    parallel_blocks(blocks, resolve_workers(workers), [&](size_t b) {
        ScDecoder dec(n, d, kernel);
        std::vector<double> probs(N * d);
        std::vector<double> w(d);
        std::vector<int> zeros(N, 0), u_hat(N);
        Accum acc{std::vector<double>(N, 0.0), std::vector<double>(N, 0.0)};
        int64_t first = (int64_t)b * kTrialsPerBlock;
        int64_t last = std::min<int64_t>(M, first + kTrialsPerBlock);
        for (int64_t t = first; t < last; ++t) {
            std::mt19937_64 rng = trial_rng(seed, (uint64_t)t, stream, 0x7a);
            for (size_t j = 0; j < N; ++j) {
                SyndromeSample e = sample(spec, rng);
                double *row;
                if (side == Side::amplitude) {
                    residue_weights(d, spec.sigma, e.s, w.data());
                    row = probs.data() + j * d;
                } else {
                    e = phase_view(e, d);
                    // P(x = a) proportional to p2(v - a, s2) = p1(v - a, -s2).
                    residue_weights(d, spec.sigma, -e.s, w.data());
                    row = probs.data() + (N - 1 - j) * d;
                }
                for (int a = 0; a < d; ++a) {
                    row[a] = w[mod_d(e.u - a, d)];
                }
            }
            dec.decode_probabilities(probs.data(), nullptr, nullptr, zeros.data(), u_hat.data(),
                                     [&](int i, const double *l) {
                                         double v = 0;
                                         for (int a = 1; a < d; ++a) {
                                             v += std::exp(-0.5 * l[a]);
                                         }
                                         v /= d - 1;
                                         size_t idx = side == Side::amplitude ? (size_t)i : phase_leaf_to_index(i, N);
                                         acc.sum[idx] += v;
                                         acc.sumsq[idx] += v * v;
                                     });
        }
        parts[b] = std::move(acc);
    });

    Accum total = reduce_pairwise(std::move(parts));
    z.assign(N, 0.0);
    se.assign(N, 0.0);
    double m = (double)M;
    for (size_t i = 0; i < N; ++i) {
        double mean = total.sum[i] / m;
        double var = M > 1 ? std::max(0.0, (total.sumsq[i] - m * mean * mean) / (m - 1)) : 0.0;
        se[i] = std::isfinite(var) ? std::sqrt(var / m) : INFINITY;
        z[i] = std::isfinite(mean) ? std::clamp(mean, 0.0, 1.0) : 1.0;
    }
}

void check_z(const std::vector<double> &z, size_t N, const char *name) {
    if (z.size() != N) {
        throw std::invalid_argument(std::string(name) + " has the wrong length");
    }
    for (double v : z) {
        if (!(v >= 0 && v <= 1)) {
            throw std::invalid_argument(std::string(name) + " entries must lie in [0, 1]");
        }
    }
}

std::vector<uint8_t> good_positions(const std::vector<double> &z, int d, double limit) {
    std::vector<int> order(z.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return z[a] < z[b]; });
    std::vector<uint8_t> good(z.size(), 0);
    double cum = 0;
    for (int i : order) {
        cum += z[i];
        if ((d - 1) * cum > limit) {
            break;
        }
        good[i] = 1;
    }
    return good;
}

}  // namespace

double Budget::limit(size_t N) const {
    return c_e * std::pow((double)N, -beta);
}

std::vector<uint8_t> IndexSets::amplitude_frozen_mask(size_t N) const {
    std::vector<uint8_t> m(N, 0);
    for (int i : A) {
        m[i] = 1;
    }
    for (int i : E) {
        m[i] = 1;
    }
    return m;
}

std::vector<uint8_t> IndexSets::phase_frozen_mask(size_t N) const {
    std::vector<uint8_t> m(N, 0);
    for (int i : P) {
        m[i] = 1;
    }
    for (int i : E) {
        m[i] = 1;
    }
    return m;
}

ZEstimates estimate_z(const ChannelSpec &spec, const PolarCodeSpec &code, Side side, int64_t M, uint64_t seed,
                      int workers) {
    if (code.d != spec.d) {
        throw std::invalid_argument("code and channel disagree on d");
    }
    ZEstimates out;
    out.m_samples = M;
    out.seed = seed;
    if (side == Side::amplitude) {
        estimate_side(spec, code.n, code.alpha, side, M, seed, workers, out.z1, out.se1);
    } else {
        estimate_side(spec, code.n, code.alpha, side, M, seed, workers, out.z2, out.se2);
    }
    return out;
}

ZEstimates estimate_z_both(const ChannelSpec &spec, int n, int alpha, int64_t M, uint64_t seed, int workers) {
    ZEstimates out;
    out.m_samples = M;
    out.seed = seed;
    estimate_side(spec, n, alpha, Side::amplitude, M, seed, workers, out.z1, out.se1);
    estimate_side(spec, n, alpha, Side::phase, M, seed, workers, out.z2, out.se2);
    return out;
}

IndexSets classify(const std::vector<double> &z1, const std::vector<double> &z2, int d, const Budget &budget) {
    size_t N = z1.size();
    log2_length(N);
    check_z(z1, N, "z1");
    check_z(z2, N, "z2");
    if (!(budget.c_e > 0) || !std::isfinite(budget.beta)) {
        throw std::invalid_argument("budget needs c_e > 0 and finite beta");
    }
    double limit = budget.limit(N);
    auto good1 = good_positions(z1, d, limit);
    auto good2 = good_positions(z2, d, limit);
    IndexSets s;
    for (size_t i = 0; i < N; ++i) {
        int k = (int)i;
        if (good1[i] && good2[i]) {
            s.I.push_back(k);
        } else if (good2[i]) {
            s.A.push_back(k);
        } else if (good1[i]) {
            s.P.push_back(k);
        } else {
            s.E.push_back(k);
        }
    }
    return s;
}

RateAndBounds net_rate_and_bounds(const IndexSets &sets, const std::vector<double> &z1,
                                  const std::vector<double> &z2, int d) {
    size_t N = z1.size();
    if (z2.size() != N || sets.I.size() + sets.A.size() + sets.P.size() + sets.E.size() != N) {
        throw std::invalid_argument("index sets do not partition the code positions");
    }
    RateAndBounds r;
    r.rate_bits = std::log2((double)d) * ((double)sets.I.size() - (double)sets.E.size()) / (double)N;
    double s1 = 0, s2 = 0;
    for (int i : sets.I) {
        s1 += z1[i];
        s2 += z2[i];
    }
    for (int i : sets.P) {
        s1 += z1[i];
    }
    for (int i : sets.A) {
        s2 += z2[i];
    }
    r.pe1_bound = (d - 1) * s1;
    r.pe2_bound = (d - 1) * s2;
    return r;
}

DesignArtifact design_code(const ChannelSpec &spec, int alpha, int n, int64_t M, const Budget &budget,
                           uint64_t seed, int workers) {
    ZEstimates z = estimate_z_both(spec, n, alpha, M, seed, workers);
    DesignArtifact art;
    art.d = spec.d;
    art.sigma = spec.sigma;
    art.n = n;
    art.alpha = PrimeField(spec.d).reduce(alpha);
    art.m_samples = M;
    art.seed = seed;
    art.budget = budget;
    art.z1 = std::move(z.z1);
    art.z2 = std::move(z.z2);
    art.sets = classify(art.z1, art.z2, spec.d, budget);
    RateAndBounds rb = net_rate_and_bounds(art.sets, art.z1, art.z2, spec.d);
    art.rate_bits_per_mode = rb.rate_bits;
    art.pe1_bound = rb.pe1_bound;
    art.pe2_bound = rb.pe2_bound;
    return art;
}

std::vector<DesignArtifact> design_sequence(const ChannelSpec &spec, int alpha, const std::vector<int> &n_list,
                                            int64_t M, const Budget &budget, uint64_t seed, int workers) {
    for (size_t k = 1; k < n_list.size(); ++k) {
        if (n_list[k] <= n_list[k - 1]) {
            throw std::invalid_argument("block lengths must be ascending");
        }
    }
    std::vector<DesignArtifact> out;
    for (int n : n_list) {
        out.push_back(design_code(spec, alpha, n, M, budget, seed, workers));
    }
    return out;
}

int default_alpha(int d) {
    switch (d) {
        case 5:
            return 2;
        case 7:
            return 3;
        default:
            return 1;
    }
}

}  // namespace gkp_polar
