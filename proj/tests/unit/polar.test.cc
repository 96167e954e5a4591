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


#include "gkp_polar/polar.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace gkp_polar;

TEST(polar, two_point_kernel) {
    EXPECT_EQ(polar_encode({1, 0}, 2, 1), (std::vector<int>{1, 0}));
    EXPECT_EQ(polar_encode({0, 1}, 2, 1), (std::vector<int>{1, 1}));
    EXPECT_EQ(polar_encode({1, 1}, 2, 1), (std::vector<int>{0, 1}));
    EXPECT_EQ(polar_encode({1, 3}, 5, 2), (std::vector<int>{2, 3}));
}

TEST(polar, bad_length) {
    EXPECT_THROW(polar_encode({1, 0, 1}, 2, 1), std::domain_error);
    EXPECT_THROW(polar_encode_inverse({}, 2, 1), std::domain_error);
    auto code = PolarCodeSpec::open(3, 3, 1);
    EXPECT_THROW(polar_encode({1, 0}, code), std::domain_error);
    code.alpha = 3;
    EXPECT_THROW(code.validate(), std::invalid_argument);
}

TEST(polar, matches_dense_kernel) {
    std::mt19937_64 rng(1);
    for (int d : {2, 3, 5}) {
        for (int alpha = 1; alpha < d; ++alpha) {
            for (int n = 1; n <= 4; ++n) {
                auto g = oracles::dense_kernel(n, d, alpha);
                for (int t = 0; t < 10; ++t) {
                    std::vector<int> u(1 << n);
                    for (int &v : u) {
                        v = (int)(rng() % d);
                    }
                    EXPECT_EQ(polar_encode(u, d, alpha), oracles::apply(g, u, d));
                }
            }
        }
    }
}

TEST(polar, inverse_round_trip) {
    std::mt19937_64 rng(2);
    for (int d : {2, 5, 7}) {
        for (int t = 0; t < 1000; ++t) {
            int n = 1 + (int)(rng() % 6);
            int alpha = 1 + (int)(rng() % (d - 1));
            std::vector<int> u(1 << n);
            for (int &v : u) {
                v = (int)(rng() % d);
            }
            EXPECT_EQ(polar_encode_inverse(polar_encode(u, d, alpha), d, alpha), u);
        }
    }
}

TEST(polar, binary_kernel_is_involution) {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> u(1 << n);
        for (int &v : u) {
            v = (int)(rng() % 2);
        }
        EXPECT_EQ(polar_encode(polar_encode(u, 2, 1), 2, 1), u);
        EXPECT_EQ(polar_encode_inverse(u, 2, 1), polar_encode(u, 2, 1));
    }
}

TEST(polar, zero_word_fixed_and_linear) {
    std::vector<int> z(16, 0);
    EXPECT_EQ(polar_encode(z, 7, 3), z);
    EXPECT_EQ(polar_encode_inverse(z, 7, 3), z);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> a(16), b(16), s(16);
        for (int k = 0; k < 16; ++k) {
            a[k] = (int)(rng() % 7);
            b[k] = (int)(rng() % 7);
            s[k] = (a[k] + b[k]) % 7;
        }
        auto ea = polar_encode(a, 7, 3);
        auto eb = polar_encode(b, 7, 3);
        auto es = polar_encode(s, 7, 3);
        for (int k = 0; k < 16; ++k) {
            EXPECT_EQ(es[k], (ea[k] + eb[k]) % 7);
        }
    }
}

TEST(polar, inverse_transpose_is_reversed_negated_kernel) {
    for (int d : {2, 3, 5, 7}) {
        for (int alpha = 1; alpha < d; ++alpha) {
            for (int n = 1; n <= 4; ++n) {
                int N = 1 << n;
                auto g = oracles::dense_kernel(n, d, alpha);
                auto git = oracles::transpose(oracles::inverse(g, d));
                auto gneg = oracles::dense_kernel(n, d, d - alpha);
                for (int r = 0; r < N; ++r) {
                    for (int c = 0; c < N; ++c) {
                        EXPECT_EQ(git[r][c], gneg[N - 1 - r][N - 1 - c]);
                    }
                }
            }
        }
    }
}
