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

#include "gkp_polar/loss_capacity.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gkp_polar/errors.h"
#include "gkp_polar/gkp_channel.h"
#include "gkp_polar/theta.h"

namespace gkp_polar {

namespace {

constexpr double kPi = std::numbers::pi;

void check_eta(double eta) {
    if (!(eta > 0 && eta < 1)) {
        throw std::domain_error("eta must lie in (0, 1), got " + std::to_string(eta));
    }
}

// log(exp(a) + exp(b)) with -inf handled.
double log_add_exp(double a, double b) {
    if (a < b) {
        std::swap(a, b);
    }
    if (b == -std::numeric_limits<double>::infinity()) {
        return a;
    }
    return a + std::log1p(std::exp(b - a));
}

// log(exp(a) - 1) for a > 0.
double log_expm1(double a) {
    if (a > 30) {
        return a + std::log1p(-std::exp(-a));
    }
    return std::log(std::expm1(a));
}

}  // namespace

void LossParams::validate() const {
    check_eta(eta);
}

double LossParams::g() const {
    return eta / (1 - eta);
}

void require_loss_prime(int d) {
    if (!is_prime(d) || d % 4 != 3) {
        throw std::invalid_argument("d = " + std::to_string(d) +
                                    " is not a prime congruent to 3 mod 4");
    }
}

int64_t count_self_orthogonal(int d, int N) {
    if (!is_prime(d)) {
        throw std::invalid_argument("count_self_orthogonal: d must be prime");
    }
    if (N < 1) {
        throw std::invalid_argument("count_self_orthogonal: N must be >= 1");
    }
    const __int128 limit = (__int128)1 << 62;
    __int128 d2n = 1;
    __int128 dn = 1;
    for (int i = 0; i < N; ++i) {
        d2n *= (__int128)d * d;
        dn *= -d;
        if (d2n > limit) {
            throw std::overflow_error("count_self_orthogonal: d^(2N) exceeds 2^62 for d = " +
                                      std::to_string(d) + ", N = " + std::to_string(N));
        }
    }
    __int128 num = d2n + (__int128)(d - 1) * dn;
    if (num % d != 0) {
        throw NumericError("count_self_orthogonal: non-integral count");
    }
    return (int64_t)(num / d - 1);
}

double s_g(double g, int d, int N) {
    if (!(g > 0)) {
        throw std::domain_error("s_g: g must be positive");
    }
    if (!is_prime(d)) {
        throw std::invalid_argument("s_g: d must be prime");
    }
    if (N < 1) {
        throw std::invalid_argument("s_g: N must be >= 1");
    }
    double r = std::exp(-kPi * g / d);
    std::complex<double> total = std::pow(theta::theta3(0.0, r), 2 * N);
    for (int j = 1; j < d; ++j) {
        std::complex<double> omega = std::polar(1.0, 2 * kPi * j / d);
        total += std::pow(theta::theta3(0.0, r * omega), 2 * N);
    }
    if (std::abs(total.imag()) > 1e-10 * std::max(1.0, std::abs(total.real()))) {
        throw NumericError("s_g: imaginary residue " + std::to_string(total.imag()));
    }
    return total.real() / d;
}

double capped_k_over_n(int d, double logN, double eta) {
    check_eta(eta);
    require_loss_prime(d);
    double q1 = std::exp(-kPi * d * (1 - eta) / eta);
    if (!(4.1 * q1 < 1)) {
        throw std::domain_error("rate cap is empty: 4.1 exp(-pi d (1-eta)/eta) >= 1");
    }
    double log_margin = std::log1p(-4.1 * q1) + std::log1p(-std::exp(-0.5 * logN));
    return (std::log(eta / (1 - eta)) + log_margin) / std::log((double)d);
}

double infidelity_bound_log_scaled(int d, double logN, double K_over_N, double eta) {
    check_eta(eta);
    if (d < 2) {
        throw std::invalid_argument("infidelity_bound_log: d must be >= 2");
    }
    if (!(logN >= 0)) {
        throw std::domain_error("infidelity_bound_log: N must be >= 1");
    }
    double N = std::exp(logN);
    double ld = std::log((double)d);
    double q1 = std::exp(-kPi * d * (1 - eta) / eta);
    double q2 = std::exp(-kPi * d * eta / (1 - eta));

    // (d^{K/N} theta3(q1)^2 (1-eta)/eta)^N
    double per_mode = K_over_N * ld + 2 * std::log1p(theta::theta3_minus_one(q1)) +
                      std::log((1 - eta) / eta);
    double log_t1 = N * per_mode;

    // (1 + 1.1 d^{-(N-1)}) (1 + d (1 - 0.9/d)^{N/2}) theta3(q2)^{2N} - 1 = expm1(a)
    double a = std::log1p(1.1 * std::exp(-(N - 1) * ld)) +
               std::log1p(d * std::exp(0.5 * N * std::log1p(-0.9 / d))) +
               2 * N * std::log1p(theta::theta3_minus_one(q2));
    double log_t2 = a > 0 ? log_expm1(a) : -std::numeric_limits<double>::infinity();
    return log_add_exp(log_t1, log_t2);
}

double infidelity_bound_log(int d, double N, double K, double eta) {
    if (!(N >= 1)) {
        throw std::domain_error("infidelity_bound_log: N must be >= 1");
    }
    if (!(K >= 0 && K <= N)) {
        throw std::domain_error("infidelity_bound_log: need 0 <= K <= N");
    }
    return infidelity_bound_log_scaled(d, std::log(N), K / N, eta);
}

std::vector<SequencePoint> capacity_sequence(double eta, const std::vector<int> &d_list) {
    check_eta(eta);
    std::vector<SequencePoint> out;
    out.reserve(d_list.size());
    for (int d : d_list) {
        require_loss_prime(d);
        SequencePoint p;
        p.d = d;
        // floor() is immaterial at these sizes; below e^2 it shifts log N by < 0.2.
        double raw = d * eta / (1 - eta);
        p.logN = raw < 36 ? std::log(std::floor(std::exp(raw))) : raw;
        p.K_over_N = capped_k_over_n(d, p.logN, eta);
        p.rate_bits = p.K_over_N * std::log2((double)d);
        p.log_eps_bound = infidelity_bound_log_scaled(d, p.logN, p.K_over_N, eta);
        out.push_back(p);
    }
    return out;
}

}  // namespace gkp_polar
