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


// Monte-Carlo construction of polar codes for the amplitude (W1) and phase (W2)
// channels, and the I/A/P/E split of code positions:
//   I  good on both sides (logical information)
//   A  frozen on the amplitude side only
//   P  frozen on the phase side only
//   E  frozen on both sides (consumes shared entanglement)

#ifndef GKP_POLAR_CODE_DESIGN_H
#define GKP_POLAR_CODE_DESIGN_H

#include <cstdint>
#include <string>
#include <vector>

#include "gkp_polar/gkp_channel.h"
#include "gkp_polar/polar.h"

namespace gkp_polar {

extern const char *const kToolVersion;

enum class Side { amplitude, phase };

struct ZEstimates {
    /// Indexed by code position (phase values already mapped back). Clipped to [0, 1].
    std::vector<double> z1, z2;
    /// Standard error of each unclipped mean.
    std::vector<double> se1, se2;
    int64_t m_samples = 0;
    uint64_t seed = 0;
};

struct Budget {
    double c_e = 0.5;
    double beta = 2.0 / 9.0;

    /// c_e N^(-beta)
    double limit(size_t N) const;
};

struct IndexSets {
    /// 0-based positions, ascending.
    std::vector<int> I, A, P, E;

    std::vector<uint8_t> amplitude_frozen_mask(size_t N) const;
    std::vector<uint8_t> phase_frozen_mask(size_t N) const;
};

struct RateAndBounds {
    double rate_bits = 0;
    double pe1_bound = 0;
    double pe2_bound = 0;
};

struct DesignArtifact {
    int d = 2;
    double sigma = 0;
    int n = 0;
    int alpha = 1;
    int64_t m_samples = 0;
    uint64_t seed = 0;
    Budget budget;
    std::string tool_version = kToolVersion;
    std::vector<double> z1, z2;
    IndexSets sets;
    double rate_bits_per_mode = 0;
    double pe1_bound = 0;
    double pe2_bound = 0;

    size_t N() const {
        return size_t{1} << n;
    }
};

/// Genie-aided Monte-Carlo estimate of Z(W^(i)) on one side. Fills z1/se1 for
/// the amplitude side and z2/se2 for the phase side. workers <= 0 resolves
/// through resolve_workers.
ZEstimates estimate_z(const ChannelSpec &spec, const PolarCodeSpec &code, Side side, int64_t M, uint64_t seed,
                      int workers = 0);

/// Both sides at once.
ZEstimates estimate_z_both(const ChannelSpec &spec, int n, int alpha, int64_t M, uint64_t seed, int workers = 0);

/// Greedy per-side freezing of the highest-Z positions until the rest meet the budget.
IndexSets classify(const std::vector<double> &z1, const std::vector<double> &z2, int d, const Budget &budget);

RateAndBounds net_rate_and_bounds(const IndexSets &sets, const std::vector<double> &z1,
                                  const std::vector<double> &z2, int d);

DesignArtifact design_code(const ChannelSpec &spec, int alpha, int n, int64_t M, const Budget &budget,
                           uint64_t seed, int workers = 0);

std::vector<DesignArtifact> design_sequence(const ChannelSpec &spec, int alpha, const std::vector<int> &n_list,
                                            int64_t M, const Budget &budget, uint64_t seed, int workers = 0);

/// Default kernel multiplier per dimension: 1 for d = 2, 2 for d = 5, 3 for d = 7, else 1.
int default_alpha(int d);

}  // namespace gkp_polar

#endif
