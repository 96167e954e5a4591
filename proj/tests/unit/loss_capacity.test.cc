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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace gkp_polar;

TEST(loss_capacity, count_self_orthogonal_small) {
    EXPECT_EQ(count_self_orthogonal(3, 1), 0);
    EXPECT_EQ(count_self_orthogonal(3, 2), 32);
    for (int N = 1; N <= 3; ++N) {
        EXPECT_EQ(count_self_orthogonal(3, N), oracles::count_hermitian_isotropic(3, N)) << N;
    }
    EXPECT_EQ(count_self_orthogonal(7, 2), oracles::count_hermitian_isotropic(7, 2));
    EXPECT_EQ(count_self_orthogonal(11, 1), oracles::count_hermitian_isotropic(11, 1));
}

TEST(loss_capacity, hermitian_norm_is_sum_of_squares) {
    for (int d : {3, 7, 11}) {
        for (int x = 0; x < d; ++x) {
            for (int y = 0; y < d; ++y) {
                oracles::Gf2 p = oracles::gf2_pow({x, y}, d + 1, d);
                EXPECT_EQ(p.y, 0);
                EXPECT_EQ(p.x, (x * x + y * y) % d);
            }
        }
    }
}

TEST(loss_capacity, count_self_orthogonal_guards) {
    EXPECT_THROW(count_self_orthogonal(4, 2), std::invalid_argument);
    EXPECT_THROW(count_self_orthogonal(3, 0), std::invalid_argument);
    EXPECT_THROW(count_self_orthogonal(3, 40), std::overflow_error);
    EXPECT_NO_THROW(count_self_orthogonal(3, 19));
}

TEST(loss_capacity, s_g_hand_value) {
    // Squares mod 3 are {0, 1}, so the restricted set is (3Z)^2.
    double t = 1 + 2 * std::exp(-3 * std::numbers::pi);
    EXPECT_NEAR(s_g(1.0, 3, 1), t * t, 1e-12);
    EXPECT_NEAR(s_g(1.0, 3, 1), 1.000323, 1e-6);
}

TEST(loss_capacity, s_g_matches_enumeration) {
    for (int d : {3, 7}) {
        for (int N : {1, 2}) {
            for (double g : {0.5, 1.0, 2.0}) {
                double ref = oracles::restricted_lattice_sum(g, d, 2 * N);
                EXPECT_NEAR(s_g(g, d, N) / ref, 1.0, 1e-10) << d << " " << N << " " << g;
            }
        }
    }
}

TEST(loss_capacity, s_g_large_g_tends_to_one) {
    EXPECT_NEAR(s_g(200.0, 7, 3), 1.0, 1e-12);
    EXPECT_THROW(s_g(0.0, 3, 1), std::domain_error);
}

TEST(loss_capacity, bound_increases_with_k) {
    // Near K/N = log 3 / log 7 the first term dominates and grows strictly.
    double prev = -1e300;
    for (double K : {2300.0, 2320.0, 2340.0, 2360.0, 2400.0}) {
        double b = infidelity_bound_log(7, 4096, K, 0.75);
        EXPECT_GT(b, prev) << K;
        prev = b;
    }
    EXPECT_LE(infidelity_bound_log(7, 4096, 0, 0.75), infidelity_bound_log(7, 4096, 1000, 0.75));
    EXPECT_TRUE(std::isfinite(infidelity_bound_log(7, 4096, 0, 0.75)));
    EXPECT_THROW(infidelity_bound_log(7, 10, 11, 0.75), std::domain_error);
    EXPECT_THROW(infidelity_bound_log(7, 10, 1, 1.0), std::domain_error);
}

TEST(loss_capacity, bound_below_simplified_form_at_cap) {
    const double pi = std::numbers::pi;
    double eta = 0.75;
    for (const SequencePoint &p : capacity_sequence(eta, {3, 7, 11, 19, 23})) {
        double N = std::exp(p.logN);
        double simple = std::log(1.1 * std::exp(-std::sqrt(N)) +
                                 4.1 * N * std::exp(-pi * p.d * eta / (1 - eta)));
        EXPECT_LE(p.log_eps_bound, simple) << p.d;
    }
}

TEST(loss_capacity, sequence_at_three_quarters) {
    auto seq = capacity_sequence(0.75, {3, 7, 11, 19, 23});
    ASSERT_EQ(seq.size(), 5u);
    double cap = std::log2(3.0);
    for (size_t i = 0; i < seq.size(); ++i) {
        EXPECT_LT(seq[i].rate_bits, cap);
        EXPECT_NEAR(seq[i].rate_bits, seq[i].K_over_N * std::log2((double)seq[i].d), 1e-12);
        if (i > 0) {
            EXPECT_GT(seq[i].rate_bits, seq[i - 1].rate_bits);
            EXPECT_LT(seq[i].log_eps_bound, seq[i - 1].log_eps_bound);
        }
    }
    EXPECT_LT(cap - seq.back().rate_bits, 0.01);
    EXPECT_NEAR(seq[0].logN, std::log(std::floor(std::exp(9.0))), 1e-12);
    EXPECT_NEAR(seq[0].rate_bits, 1.2876, 1e-3);
    EXPECT_NEAR(seq[0].log_eps_bound, -17.89, 0.05);
}

TEST(loss_capacity, no_positive_rate_at_half) {
    for (const SequencePoint &p : capacity_sequence(0.5, {3, 7, 11, 19, 23, 31})) {
        EXPECT_LE(p.rate_bits, 0.0);
    }
}

TEST(loss_capacity, rejects_bad_primes) {
    EXPECT_THROW(capacity_sequence(0.75, {5}), std::invalid_argument);
    EXPECT_THROW(capacity_sequence(0.75, {9}), std::invalid_argument);
    EXPECT_THROW(capacity_sequence(1.5, {3}), std::domain_error);
}
