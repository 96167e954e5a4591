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

#include "gkp_polar/theta.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gkp_polar/errors.h"

namespace gkp_polar::theta {

namespace {

constexpr int kMaxTerms = 1000000;
constexpr double kPi = std::numbers::pi;

double reduce_half_period(double x) {
    // x in units of the period 1; map to [-1/2, 1/2).
    return x - std::floor(x + 0.5);
}

void check_tol(double tol) {
    if (!(tol > 0)) {
        throw std::domain_error("theta: tolerance must be positive");
    }
}

}  // namespace

double dual_switch_nome() {
    return std::exp(-kPi);
}

std::complex<double> theta3(double u, std::complex<double> q, double tol) {
    check_tol(tol);
    double r = std::abs(q);
    if (!(r < 1)) {
        throw std::domain_error("theta3: nome must satisfy |q| < 1");
    }
    std::complex<double> sum = 1.0;
    if (r == 0) {
        return sum;
    }
    // q^(n^2) built as a running product: q^((n+1)^2) = q^(n^2) * q^(2n+1).
    std::complex<double> qn2 = 1.0;
    std::complex<double> step = q;
    std::complex<double> q2 = q * q;
    double mag = 1.0;
    double rstep = r;
    for (int n = 1; n <= kMaxTerms; ++n) {
        qn2 *= step;
        step *= q2;
        mag *= rstep;
        rstep *= r * r;
        sum += 2.0 * qn2 * std::cos(2.0 * n * u);
        if (2.0 * mag < tol * std::max(1.0, std::abs(sum))) {
            return sum;
        }
    }
    throw NumericError("theta3: series did not converge for |q| = " + std::to_string(r));
}

double theta3_series(double u, double q, double tol) {
    check_tol(tol);
    if (!(std::abs(q) < 1)) {
        throw std::domain_error("theta3: nome must satisfy |q| < 1");
    }
    double sum = 1.0;
    if (q == 0) {
        return sum;
    }
    double qn2 = 1.0;
    double step = q;
    double q2 = q * q;
    for (int n = 1; n <= kMaxTerms; ++n) {
        qn2 *= step;
        step *= q2;
        sum += 2.0 * qn2 * std::cos(2.0 * n * u);
        if (2.0 * std::abs(qn2) < tol * std::max(1.0, std::abs(sum))) {
            return sum;
        }
    }
    throw NumericError("theta3: series did not converge for q = " + std::to_string(q));
}

double theta3_dual(double u, double t, double tol) {
    check_tol(tol);
    if (!(t > 0)) {
        throw std::domain_error("theta3_dual: t must be positive");
    }
    double x = reduce_half_period(u / kPi);
    double sum = std::exp(-kPi * x * x / t);
    for (int l = 1; l <= kMaxTerms; ++l) {
        double a = x + l;
        double b = x - l;
        double ta = std::exp(-kPi * a * a / t);
        double tb = std::exp(-kPi * b * b / t);
        sum += ta + tb;
        if (ta + tb <= tol * sum) {
            return sum / std::sqrt(t);
        }
    }
    throw NumericError("theta3_dual: sum did not converge for t = " + std::to_string(t));
}

double theta3(double u, double q, double tol) {
    if (!(std::abs(q) < 1)) {
        throw std::domain_error("theta3: nome must satisfy |q| < 1");
    }
    if (q > dual_switch_nome()) {
        return theta3_dual(u, -std::log(q) / kPi, tol);
    }
    return theta3_series(u, q, tol);
}

double log_theta3_t(double u, double t) {
    if (!(t > 0)) {
        throw std::domain_error("log_theta3_t: t must be positive");
    }
    if (t >= 1) {
        // Here theta3 >= 1 - 2q - 2q^4 > 0.9, so the series is well conditioned.
        return std::log(theta3_series(u, std::exp(-kPi * t)));
    }
    double x = reduce_half_period(u / kPi);
    // Factor out the dominant l = 0 term exp(-pi x^2 / t).
    double x2 = x * x;
    double rel = 1.0;
    for (int l = 1; l <= kMaxTerms; ++l) {
        double a = x + l;
        double b = x - l;
        double ta = std::exp(-kPi * (a * a - x2) / t);
        double tb = std::exp(-kPi * (b * b - x2) / t);
        rel += ta + tb;
        if (ta + tb < kDefaultTol * rel) {
            return -kPi * x2 / t + std::log(rel) - 0.5 * std::log(t);
        }
    }
    throw NumericError("log_theta3: sum did not converge");
}

double theta3_t(double u, double t) {
    if (!(t > 0)) {
        throw std::domain_error("theta3_t: t must be positive");
    }
    if (t < 1) {
        return theta3_dual(u, t);
    }
    return theta3_series(u, std::exp(-kPi * t));
}

double log_theta3(double u, double q) {
    if (!(q >= 0 && q < 1)) {
        throw std::domain_error("log_theta3: nome must satisfy 0 <= q < 1");
    }
    if (q <= dual_switch_nome()) {
        return std::log(theta3_series(u, q));
    }
    return log_theta3_t(u, -std::log(q) / kPi);
}

double theta3_minus_one(double q) {
    if (!(q >= 0 && q < 1)) {
        throw std::domain_error("theta3_minus_one: nome must satisfy 0 <= q < 1");
    }
    if (q == 0) {
        return 0.0;
    }
    if (q > dual_switch_nome()) {
        // No cancellation risk: theta3 - 1 is of order 1 or larger here.
        return theta3(0.0, q) - 1.0;
    }
    double sum = 0.0;
    double qn2 = 1.0;
    double step = q;
    double q2 = q * q;
    for (int n = 1; n <= kMaxTerms; ++n) {
        qn2 *= step;
        step *= q2;
        sum += 2.0 * qn2;
        if (qn2 < kDefaultTol * sum) {
            return sum;
        }
    }
    throw NumericError("theta3_minus_one: series did not converge");
}

double theta2(double u, double q, double tol) {
    check_tol(tol);
    if (!(q >= 0 && q < 1)) {
        throw std::domain_error("theta2: nome must satisfy 0 <= q < 1");
    }
    if (q == 0) {
        return 0.0;
    }
    double sum = 0.0;
    double qpow = 1.0;     // q^(n(n+1))
    double step = q * q;   // q^(2(n+1))
    double q2 = q * q;
    for (int n = 0; n <= kMaxTerms; ++n) {
        sum += qpow * std::cos((2.0 * n + 1.0) * u);
        if (qpow < tol * std::max(1.0, std::abs(sum)) && n > 0) {
            return 2.0 * std::pow(q, 0.25) * sum;
        }
        qpow *= step;
        step *= q2;
    }
    throw NumericError("theta2: series did not converge for q = " + std::to_string(q));
}

double duality_residual(double t) {
    if (!(t > 0)) {
        throw std::domain_error("duality_residual: t must be positive");
    }
    double lhs = theta3_series(0.0, std::exp(-kPi * t));
    double rhs = theta3_series(0.0, std::exp(-kPi / t));
    return std::abs(lhs * lhs - rhs * rhs / t);
}

}  // namespace gkp_polar::theta
