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


#include "gkp_polar/e2e_sim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkp_polar/field.h"
#include "gkp_polar/parallel.h"

namespace gkp_polar {

namespace {

constexpr int64_t kBlocksPerTask = 64;

int negate_mod(int a, int d) {
    PrimeField f(d);
    return f.neg(f.reduce(a));
}

}  // namespace

Interval wilson95(int64_t successes, int64_t trials) {
    if (trials < 1) {
        throw std::invalid_argument("Wilson interval needs at least one trial");
    }
    const double z = 1.96;
    double n = (double)trials;
    double p = (double)successes / n;
    double denom = 1 + z * z / n;
    double center = (p + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

BlockSimulator::BlockSimulator(const DesignArtifact &artifact, std::optional<double> sigma)
    : spec_{artifact.d, sigma.value_or(artifact.sigma)},
      n_(artifact.n),
      N_(artifact.N()),
      alpha_(artifact.alpha),
      amp_(artifact.n, artifact.d, artifact.alpha),
      phase_(artifact.n, artifact.d, negate_mod(artifact.alpha, artifact.d)) {
    spec_.validate();
    if (artifact.z1.size() != N_ || artifact.z2.size() != N_) {
        throw std::invalid_argument("artifact Z arrays do not match its block length");
    }
    amp_frozen_ = artifact.sets.amplitude_frozen_mask(N_);
    std::vector<uint8_t> pf = artifact.sets.phase_frozen_mask(N_);
    phase_frozen_.resize(N_);
    for (size_t k = 0; k < N_; ++k) {
        phase_frozen_[k] = pf[phase_leaf_to_index(k, N_)];
    }
    probs_.resize(N_ * spec_.d);
    w_.resize(spec_.d);
    truth_.resize(N_);
    frozen_values_.resize(N_);
    u_hat_.resize(N_);
    err_.resize(N_);
}

bool BlockSimulator::decode_side(std::mt19937_64 &rng, bool phase, SimMode mode) {
    const int d = spec_.d;
    for (size_t j = 0; j < N_; ++j) {
        SyndromeSample e = sample(spec_, rng);
        double *row;
        if (phase) {
            e = phase_view(e, d);
            residue_weights(d, spec_.sigma, -e.s, w_.data());
            row = probs_.data() + (N_ - 1 - j) * d;
        } else {
            residue_weights(d, spec_.sigma, e.s, w_.data());
            row = probs_.data() + j * d;
        }
        err_[j] = e.u;
        for (int a = 0; a < d; ++a) {
            row[a] = mode == SimMode::all_zero ? w_[mod_d(e.u - a, d)] : w_[a];
        }
    }

    if (mode == SimMode::all_zero) {
        std::fill(truth_.begin(), truth_.end(), 0);
    } else if (!phase) {
        std::copy(err_.begin(), err_.end(), truth_.begin());
        polar_inverse_inplace(truth_.data(), n_, d, alpha_);
    } else {
        // Leaf order of the phase decoder holds G(alpha) applied to the reversed error.
        std::reverse_copy(err_.begin(), err_.end(), truth_.begin());
        polar_transform_inplace(truth_.data(), n_, d, alpha_);
    }
    std::copy(truth_.begin(), truth_.end(), frozen_values_.begin());

    const std::vector<uint8_t> &frozen = phase ? phase_frozen_ : amp_frozen_;
    ScDecoder &dec = phase ? phase_ : amp_;
    dec.decode_probabilities(probs_.data(), frozen.data(), frozen_values_.data(), nullptr, u_hat_.data());
    for (size_t i = 0; i < N_; ++i) {
        if (!frozen[i] && u_hat_[i] != truth_[i]) {
            return false;
        }
    }
    return true;
}

BlockOutcome BlockSimulator::simulate_block(std::mt19937_64 &rng, SimMode mode) {
    BlockOutcome out;
    out.amp_ok = decode_side(rng, false, mode);
    out.phase_ok = decode_side(rng, true, mode);
    return out;
}

BlockOutcome simulate_block(const DesignArtifact &artifact, std::mt19937_64 &rng, SimMode mode) {
    BlockSimulator sim(artifact);
    return sim.simulate_block(rng, mode);
}

SimReport estimate_logical_error(const SimConfig &config) {
    if (config.trials < 1) {
        throw std::invalid_argument("simulation needs trials >= 1");
    }
    const int64_t T = config.trials;
    size_t tasks = (size_t)((T + kBlocksPerTask - 1) / kBlocksPerTask);
    struct Counts {
        int64_t amp = 0, phase = 0, both = 0;
    };
    std::vector<Counts> counts(tasks);
    parallel_blocks(tasks, resolve_workers(config.workers), [&](size_t b) {
        BlockSimulator sim(config.artifact, config.sigma);
        Counts c;
        int64_t first = (int64_t)b * kBlocksPerTask;
        int64_t last = std::min<int64_t>(T, first + kBlocksPerTask);
        for (int64_t t = first; t < last; ++t) {
            std::mt19937_64 rng = trial_rng(config.seed, (uint64_t)t, 0, 0xb1);
            BlockOutcome o = sim.simulate_block(rng, config.mode);
            c.amp += o.amp_ok ? 0 : 1;
            c.phase += o.phase_ok ? 0 : 1;
            c.both += (!o.amp_ok && !o.phase_ok) ? 1 : 0;
        }
        counts[b] = c;
    });
    SimReport r;
    r.trials = T;
    for (const Counts &c : counts) {
        r.amp_failures += c.amp;
        r.phase_failures += c.phase;
        r.both_failures += c.both;
    }
    r.p1_hat = (double)r.amp_failures / (double)T;
    r.p2_hat = (double)r.phase_failures / (double)T;
    r.ci95_1 = wilson95(r.amp_failures, T);
    r.ci95_2 = wilson95(r.phase_failures, T);
    return r;
}

}  // namespace gkp_polar
