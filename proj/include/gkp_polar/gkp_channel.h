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

// Logical noise of one square-GKP qudit under Gaussian displacement noise.
//
// A displacement e1 of the position quadrature, measured in units of the
// lattice spacing sqrt(2 pi / d), decomposes as e1 = d*l + u + s with u the
// residual logical X power and s in [-1/2, 1/2) the analog syndrome. The joint
// density is
//
//   p1(u, s) = (1/d) theta3(pi (u + s) / d, exp(-pi sigma^2 / d))
//            = 1/(sigma sqrt(d)) SUM_l exp(-(pi / (d sigma^2)) (d l + u + s)^2).
//
// The momentum side has p2(v, s2) = p1(v, -s2).

#ifndef GKP_POLAR_GKP_CHANNEL_H
#define GKP_POLAR_GKP_CHANNEL_H

#include <cstdint>
#include <random>
#include <vector>

namespace gkp_polar {

bool is_prime(int64_t n);

struct ChannelSpec {
    int d = 2;
    double sigma = 0.5;

    /// Throws std::invalid_argument unless d is prime and sigma > 0.
    void validate() const;
};

struct SyndromeSample {
    int u = 0;
    double s = 0;
};

struct FiniteEnergyParams {
    double sigma0 = 0;
    double delta_data = 0;
    double delta_anc = 0;
};

/// Canonical residue in {0, ..., d-1}.
inline int mod_d(int64_t a, int d) {
    int64_t r = a % d;
    return (int)(r < 0 ? r + d : r);
}

/// Maps s into [-1/2, 1/2).
double wrap_syndrome(double s);

double p_joint(const ChannelSpec &spec, int u, double s);
double log_p_joint(const ChannelSpec &spec, int u, double s);
double p_joint_phase(const ChannelSpec &spec, int v, double s2);
double p_syndrome(const ChannelSpec &spec, double s);
double p_cond(const ChannelSpec &spec, int u, double s);

/// Single dominant Gaussian term of p_joint.
double p_lim(const ChannelSpec &spec, int u, double s);
/// Uniform bound on |p_joint - p_lim|.
double lim_gap_bound(const ChannelSpec &spec);

/// Reference evaluation of p_joint as the Gaussian sum over |l| <= l_max.
double p_joint_gaussian_sum(const ChannelSpec &spec, int u, double s, int l_max = 20);

SyndromeSample sample(const ChannelSpec &spec, std::mt19937_64 &rng);
/// The momentum-side pair (v, s2) carrying the same displacement statistics.
SyndromeSample phase_view(const SyndromeSample &amp, int d);

/// sqrt(tanh(delta^2 / 2)), the incoherent spread induced by an envelope.
double envelope_sigma(double delta);
/// sqrt(sigma0^2 + sigma_data^2 + 2 sigma_anc^2).
double effective_sigma(const FiniteEnergyParams &fe);
/// p1 with the syndrome smeared by ancilla noise of spread envelope_sigma(fe.delta_anc).
double p_joint_finite(const ChannelSpec &spec, const FiniteEnergyParams &fe, int u, double s);

/// Relative weights w[a] = p1(a, s) * const for a = 0..d-1, computed by a
/// running product over the Gaussian sum, scaled so the
/// k = 0 term of the Gaussian sum is 1.
void residue_weights(int d, double sigma, double s, double *w);

}  // namespace gkp_polar

#endif
