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


#include "gkp_polar/llr.h"

#include <cmath>
#include <stdexcept>

#include "gkp_polar/field.h"

namespace gkp_polar {

namespace {

// Longest alphabet handled with stack scratch.
constexpr int kMaxD = 64;

double neg_lse(const double *terms, int d) {
    double m = terms[0];
    for (int j = 1; j < d; ++j) {
        m = std::min(m, terms[j]);
    }
    double acc = 0;
    for (int j = 0; j < d; ++j) {
        acc += std::exp(m - terms[j]);
    }
    // log SUM e^{-terms}
    return -m + std::log(acc);
}

void check_pair(const LlrVector &l1, const LlrVector &l2) {
    if (l1.size() != l2.size() || l1.empty()) {
        throw std::invalid_argument("LLR vectors must be non-empty and of equal length");
    }
    PrimeField f((int)l1.size());
}

}  // namespace

void f_check(const double *l1, const double *l2, int d, int alpha, double *out) {
    if (d > kMaxD) {
        throw std::invalid_argument("alphabet too large for f_check");
    }
    double terms[kMaxD];
    double base = 0;
    for (int i = 0; i < d; ++i) {
        int idx = i;
        for (int j = 0; j < d; ++j) {
            terms[j] = l1[idx] + l2[j];
            idx += alpha;
            if (idx >= d) {
                idx -= d;
            }
        }
        double v = neg_lse(terms, d);
        if (i == 0) {
            base = v;
            out[0] = 0;
        } else {
            out[i] = clamp_llr(base - v);
        }
    }
}

void g_variable(const double *l1, const double *l2, int u, int d, int alpha, double *out) {
    out[0] = 0;
    int idx = u;
    for (int i = 1; i < d; ++i) {
        idx += alpha;
        if (idx >= d) {
            idx -= d;
        }
        out[i] = clamp_llr(l2[i] - l1[u] + l1[idx]);
    }
}

LlrVector f_check(const LlrVector &l1, const LlrVector &l2, int alpha) {
    check_pair(l1, l2);
    int d = (int)l1.size();
    LlrVector out(d);
    f_check(l1.data(), l2.data(), d, PrimeField(d).reduce(alpha), out.data());
    return out;
}

LlrVector g_variable(const LlrVector &l1, const LlrVector &l2, int u, int alpha) {
    check_pair(l1, l2);
    int d = (int)l1.size();
    PrimeField f(d);
    LlrVector out(d);
    g_variable(l1.data(), l2.data(), f.reduce(u), d, f.reduce(alpha), out.data());
    return out;
}

int hard_decision(const double *l, int d) {
    int best = 0;
    double m = 0;
    for (int i = 1; i < d; ++i) {
        if (l[i] < m) {
            m = l[i];
            best = i;
        }
    }
    return best;
}

int hard_decision(const LlrVector &l) {
    return hard_decision(l.data(), (int)l.size());
}

}  // namespace gkp_polar
