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


// Block-level Monte-Carlo of the concatenated scheme: per-mode GKP correction
// followed by SC decoding of the amplitude and phase polar codes.

#ifndef GKP_POLAR_E2E_SIM_H
#define GKP_POLAR_E2E_SIM_H

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gkp_polar/code_design.h"
#include "gkp_polar/sc_decoder.h"

namespace gkp_polar {

enum class SimMode {
    /// Transmit the all-zero word; decoder beliefs are channel likelihoods and
    /// frozen positions are 0.
    all_zero,
    /// Decode the error itself from the analog syndromes, with the frozen
    /// positions set to the true logical syndrome G^{-1} u (or G^T v).
    syndrome_only,
};

struct Interval {
    double lo = 0;
    double hi = 1;
};

/// Wilson score interval at 95% (z = 1.96).
Interval wilson95(int64_t successes, int64_t trials);

struct SimConfig {
    DesignArtifact artifact;
    int64_t trials = 1;
    uint64_t seed = 0;
    SimMode mode = SimMode::all_zero;
    /// Simulate at a different noise level than the design point.
    std::optional<double> sigma;
    int workers = 0;
};

struct SimReport {
    int64_t trials = 0;
    int64_t amp_failures = 0;
    int64_t phase_failures = 0;
    int64_t both_failures = 0;
    double p1_hat = 0;
    double p2_hat = 0;
    Interval ci95_1, ci95_2;
};

struct BlockOutcome {
    bool amp_ok = true;
    bool phase_ok = true;
};

/// Reusable per-thread state for simulating blocks of one artifact.
class BlockSimulator {
   public:
    explicit BlockSimulator(const DesignArtifact &artifact, std::optional<double> sigma = std::nullopt);

    BlockOutcome simulate_block(std::mt19937_64 &rng, SimMode mode = SimMode::all_zero);

   private:
    bool decode_side(std::mt19937_64 &rng, bool phase, SimMode mode);

    ChannelSpec spec_;
    int n_;
    size_t N_;
    int alpha_;
    ScDecoder amp_, phase_;
    // Masks in decoder leaf order; `checked` marks positions whose decision counts.
    std::vector<uint8_t> amp_frozen_, amp_checked_, phase_frozen_, phase_checked_;
    std::vector<double> probs_, w_;
    std::vector<int> truth_, frozen_values_, u_hat_, err_;
};

BlockOutcome simulate_block(const DesignArtifact &artifact, std::mt19937_64 &rng, SimMode mode = SimMode::all_zero);

/// Throws std::invalid_argument when trials < 1.
SimReport estimate_logical_error(const SimConfig &config);

}  // namespace gkp_polar

#endif
