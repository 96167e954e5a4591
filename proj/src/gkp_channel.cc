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


#include "gkp_polar/gkp_channel.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gkp_polar/theta.h"

namespace gkp_polar {

namespace {

constexpr double kPi = std::numbers::pi;

void check_syndrome(double s) {
    if (!(s >= -0.5 && s < 0.5)) {
        throw std::domain_error("syndrome must lie in [-1/2, 1/2), got " + std::to_string(s));
    }
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

void ChannelSpec::validate() const {
    if (!is_prime(d)) {
        throw std::invalid_argument("d must be prime, got " + std::to_string(d));
    }
    if (!(sigma > 0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("sigma must be positive, got " + std::to_string(sigma));
    }
}

double wrap_syndrome(double s) {
    double r = s - std::floor(s + 0.5);
    if (r >= 0.5) {
        r -= 1.0;
    }
    return r;
}

double p_joint(const ChannelSpec &spec, int u, double s) {
    check_syndrome(s);
    int d = spec.d;
    double x = (mod_d(u, d) + s) / d;
    return theta::theta3_t(kPi * x, spec.sigma * spec.sigma / d) / d;
}

double log_p_joint(const ChannelSpec &spec, int u, double s) {
    check_syndrome(s);
    int d = spec.d;
    double x = (mod_d(u, d) + s) / d;
    return theta::log_theta3_t(kPi * x, spec.sigma * spec.sigma / d) - std::log((double)d);
}

double p_joint_phase(const ChannelSpec &spec, int v, double s2) {
    check_syndrome(s2);
    double s1 = -s2;
    if (s1 >= 0.5) {
        // p1(v, 1/2) = p1(v + 1, -1/2).
        s1 -= 1.0;
        v += 1;
    }
    return p_joint(spec, v, s1);
}

double p_syndrome(const ChannelSpec &spec, double s) {
    check_syndrome(s);
    return theta::theta3_t(kPi * s, spec.d * spec.sigma * spec.sigma);
}

double p_cond(const ChannelSpec &spec, int u, double s) {
    return p_joint(spec, u, s) / p_syndrome(spec, s);
}

double p_lim(const ChannelSpec &spec, int u, double s) {
    check_syndrome(s);
    int d = spec.d;
    double x = (mod_d(u, d) + s) / d;
    // Centered representative: for odd d this is the centered residue; for
    // d = 2 it picks whichever of {-1, 0, 1} keeps x in [-1/2, 1/2).
    x -= std::floor(x + 0.5);
    double sig = spec.sigma;
    return std::exp(-(kPi * d / (sig * sig)) * x * x) / (sig * std::sqrt((double)d));
}

double lim_gap_bound(const ChannelSpec &spec) {
    double sig = spec.sigma;
    double q = std::exp(-spec.d * kPi / (sig * sig));
    return theta::theta2(0.0, q) / (sig * std::sqrt((double)spec.d));
}

double p_joint_gaussian_sum(const ChannelSpec &spec, int u, double s, int l_max) {
    int d = spec.d;
    double sig = spec.sigma;
    double x = mod_d(u, d) + s;
    double c = kPi / (d * sig * sig);
    double total = 0;
    for (int l = -l_max; l <= l_max; ++l) {
        double y = d * (double)l + x;
        total += std::exp(-c * y * y);
    }
    return total / (sig * std::sqrt((double)d));
}

SyndromeSample sample(const ChannelSpec &spec, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, spec.sigma * std::sqrt(spec.d / (2 * kPi)));
    double e = normal(rng);
    double k = std::floor(e + 0.5);
    SyndromeSample out;
    out.s = e - k;
    if (out.s >= 0.5) {
        out.s -= 1.0;
        k += 1.0;
    }
    out.u = mod_d((int64_t)std::fmod(k, (double)spec.d), spec.d);
    return out;
}

SyndromeSample phase_view(const SyndromeSample &amp, int d) {
    SyndromeSample out{amp.u, -amp.s};
    if (out.s >= 0.5) {
        out.s -= 1.0;
        out.u = mod_d(out.u - 1, d);
    }
    return out;
}

double envelope_sigma(double delta) {
    if (!(delta >= 0)) {
        throw std::domain_error("envelope width must be non-negative");
    }
    return std::sqrt(std::tanh(delta * delta / 2));
}

double effective_sigma(const FiniteEnergyParams &fe) {
    if (!(fe.sigma0 >= 0)) {
        throw std::domain_error("sigma0 must be non-negative");
    }
    double sd = envelope_sigma(fe.delta_data);
    double sa = envelope_sigma(fe.delta_anc);
    return std::sqrt(fe.sigma0 * fe.sigma0 + sd * sd + 2 * sa * sa);
}

double p_joint_finite(const ChannelSpec &spec, const FiniteEnergyParams &fe, int u, double s) {
    double sa = envelope_sigma(fe.delta_anc);
    ChannelSpec smeared{spec.d, std::sqrt(spec.sigma * spec.sigma + 2 * sa * sa)};
    return p_joint(smeared, u, s);
}

void residue_weights(int d, double sigma, double s, double *w) {
    double c = kPi / (d * sigma * sigma);
    for (int a = 0; a < d; ++a) {
        w[a] = 0;
    }
    // Term k is exp(-c((k + s)^2 - s^2)); successive ratios shrink by exp(-2c).
    w[0] = 1.0;
    double shrink = std::exp(-2 * c);
    double t = 1.0;
    double r = std::exp(-c * (1 + 2 * s));
    for (int a = 1 % d;;) {
        t *= r;
        r *= shrink;
        if (t < 1e-300) {
            break;
        }
        w[a] += t;
        if (++a == d) {
            a = 0;
        }
    }
    t = 1.0;
    r = std::exp(-c * (1 - 2 * s));
    for (int a = d - 1;;) {
        t *= r;
        r *= shrink;
        if (t < 1e-300) {
            break;
        }
        w[a] += t;
        if (--a < 0) {
            a = d - 1;
        }
    }
}

}  // namespace gkp_polar
