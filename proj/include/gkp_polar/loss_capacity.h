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

// Pure-loss bounds for concatenated square GKP codes built from Hermitian
// self-orthogonal codes over GF(d^2), d = 3 mod 4.
//
// Block lengths in the capacity sequence are far too large to store, so N is
// carried as a real number (or its logarithm) throughout.

#ifndef GKP_POLAR_LOSS_CAPACITY_H
#define GKP_POLAR_LOSS_CAPACITY_H

#include <cstdint>
#include <vector>

namespace gkp_polar {

struct LossParams {
    double eta = 0.5;

    void validate() const;
    /// eta / (1 - eta)
    double g() const;
};

struct SequencePoint {
    int d = 3;
    double logN = 0;
    double K_over_N = 0;
    double rate_bits = 0;
    double log_eps_bound = 0;
};

/// Number of nonzero a in GF(d^2)^N with Hermitian self inner product zero:
/// (d^{2N} + (d-1)(-d)^N)/d - 1. Throws std::overflow_error when d^{2N}
/// does not fit in 62 bits.
int64_t count_self_orthogonal(int d, int N);

/// SUM over z in Z^{2N} with |z|^2 = 0 mod d of exp(-pi g |z|^2 / d),
/// evaluated with complex-nome theta3 values.
double s_g(double g, int d, int N);

/// Natural log of the upper bound on 4 epsilon for an [[N, K]]_d code at
/// transmittance eta. N and K may be non-integer.
double infidelity_bound_log(int d, double N, double K, double eta);

/// Same bound parameterized by log N and K/N, for N beyond double range.
double infidelity_bound_log_scaled(int d, double logN, double K_over_N, double eta);

/// The largest K/N allowed by the rate cap with delta = 1/2, in log form:
/// log(eta/(1-eta)) + log(1 - 4.1 q1) + log(1 - N^{-1/2}), divided by log d.
double capped_k_over_n(int d, double logN, double eta);

/// N = floor(exp(d eta / (1 - eta))) for each d, with K/N at the cap.
/// Every d must be prime and 3 mod 4.
std::vector<SequencePoint> capacity_sequence(double eta, const std::vector<int> &d_list);

/// Throws std::invalid_argument unless d is a prime with d = 3 mod 4.
void require_loss_prime(int d);

}  // namespace gkp_polar

#endif
