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
#include <complex>
#include <numbers>
#include <random>

#include "gkp_polar/errors.h"
#include "gtest/gtest.h"

using namespace gkp_polar;

static constexpr double kPi = std::numbers::pi;

TEST(theta, zero_nome) {
    EXPECT_EQ(theta::theta3(0.7, 0.0, 1e-15), 1.0);
    EXPECT_EQ(theta::theta3(0.7, std::complex<double>(0, 0), 1e-15), std::complex<double>(1, 0));
    EXPECT_EQ(theta::theta2(0.0, 0.0), 0.0);
}

TEST(theta, hand_series) {
    // 1 + 2(0.1) + 2(0.1)^4 + 2(0.1)^9
    EXPECT_NEAR(theta::theta3(0.0, 0.1, 1e-15), 1.200200002, 1e-14);
    EXPECT_NEAR(theta::theta3_series(0.0, 0.1), 1.200200002, 1e-14);
    auto c = theta::theta3(0.0, std::complex<double>(0.1, 0), 1e-15);
    EXPECT_NEAR(c.real(), 1.200200002, 1e-14);
    EXPECT_EQ(c.imag(), 0.0);
}

TEST(theta, half_period_alternates) {
    double q = 0.3;
    double expected = 1 - 2 * q + 2 * std::pow(q, 4) - 2 * std::pow(q, 9) + 2 * std::pow(q, 16) - 2 * std::pow(q, 25);
    EXPECT_NEAR(theta::theta3(kPi / 2, q), expected, 1e-14);
    EXPECT_NEAR(theta::theta3_series(kPi / 2, q), expected, 1e-14);
}

TEST(theta, reference_values) {
    // Independent high-precision evaluations.
    EXPECT_NEAR(theta::theta3(0.3, 0.7), 2.30596574499710356782507698955, 1e-13);
    // Near q = 1 only the l = 0 dual term survives: log = -pi x^2 / t - log(t) / 2.
    double t = -std::log(0.9999) / kPi;
    double x = 1.5 / kPi;
    EXPECT_NEAR(theta::log_theta3(1.5, 0.9999), -kPi * x * x / t - 0.5 * std::log(t), 1e-9);
    EXPECT_EQ(theta::theta3_dual(kPi / 2, 2e-4), 0.0);
    EXPECT_NEAR(theta::log_theta3_t(kPi / 2, 2e-4), -kPi * 0.25 / 2e-4 + std::log(2.0) - 0.5 * std::log(2e-4), 1e-9);
    EXPECT_NEAR(theta::theta2(0.0, 0.01), 0.632518777587511692812821637691, 1e-14);
}

TEST(theta, theta2_half_period) {
    for (double q : {0.01, 0.2, 0.6}) {
        EXPECT_NEAR(theta::theta2(kPi / 2, q), 0.0, 1e-14);
    }
}

TEST(theta, domain_errors) {
    EXPECT_THROW(theta::theta3(0.0, std::complex<double>(1.0, 0)), std::domain_error);
    EXPECT_THROW(theta::theta3(0.0, std::complex<double>(0.8, 0.8)), std::domain_error);
    EXPECT_THROW(theta::theta3(0.0, 1.0), std::domain_error);
    EXPECT_THROW(theta::theta2(0.0, 1.0), std::domain_error);
    EXPECT_THROW(theta::theta2(0.0, -0.1), std::domain_error);
    EXPECT_THROW(theta::theta3(0.0, 0.5, 0.0), std::domain_error);
}

TEST(theta, slow_complex_series_reports_numeric_error) {
    std::complex<double> q = std::polar(1.0 - 1e-13, 0.3);
    EXPECT_THROW(theta::theta3(0.0, q), NumericError);
}

TEST(theta, duality_residual) {
    EXPECT_NEAR(theta::duality_residual(1.0), 0.0, 1e-15);
    EXPECT_LT(theta::duality_residual(2.0), 1e-12);
    EXPECT_NEAR(theta::duality_residual(0.5), 2 * theta::duality_residual(2.0), 1e-14);
    for (double t = 0.1; t <= 10.0; t *= 1.3) {
        EXPECT_LT(theta::duality_residual(t), 1e-10) << t;
    }
}

TEST(theta, series_and_dual_agree) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uu(-4, 4);
    std::uniform_real_distribution<double> tt(0.2, 3);
    for (int k = 0; k < 200; ++k) {
        double u = uu(rng);
        double t = tt(rng);
        double a = theta::theta3_series(u, std::exp(-kPi * t));
        double b = theta::theta3_dual(u, t);
        EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(a))) << u << " " << t;
    }
}

TEST(theta, periodic_and_conjugate) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uu(-3, 3);
    std::uniform_real_distribution<double> rr(0.0, 0.9);
    std::uniform_real_distribution<double> ph(-kPi, kPi);
    for (int k = 0; k < 100; ++k) {
        double u = uu(rng);
        std::complex<double> q = std::polar(rr(rng), ph(rng));
        auto a = theta::theta3(u, q);
        auto b = theta::theta3(u + 2 * kPi, q);
        EXPECT_LT(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(a)));
        auto c = theta::theta3(u, std::conj(q));
        EXPECT_LT(std::abs(c - std::conj(a)), 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST(theta, monotone_in_nome) {
    double prev = theta::theta3(0.0, 0.0);
    for (double q = 0.01; q < 0.999; q += 0.01) {
        double cur = theta::theta3(0.0, q);
        EXPECT_GT(cur, prev);
        prev = cur;
    }
}

TEST(theta, log_theta3_matches_direct) {
    for (double q : {0.0, 0.01, 0.2, 0.5, 0.9}) {
        for (double u : {0.0, 0.4, 1.2, 3.0}) {
            EXPECT_NEAR(theta::log_theta3(u, q), std::log(theta::theta3(u, q)), 1e-12);
        }
    }
}

TEST(theta, theta3_minus_one_small_nome) {
    EXPECT_EQ(theta::theta3_minus_one(0.0), 0.0);
    double q = 1e-20;
    EXPECT_DOUBLE_EQ(theta::theta3_minus_one(q), 2e-20);
    EXPECT_NEAR(theta::theta3_minus_one(0.1), 0.200200002, 1e-15);
    EXPECT_NEAR(theta::theta3_minus_one(0.7), theta::theta3(0.0, 0.7) - 1, 1e-13);
}
