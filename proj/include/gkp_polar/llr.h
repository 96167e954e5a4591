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


// d-ary log-likelihood ratio vectors L[a] = log(P(x = 0) / P(x = a)) and the
// check/variable node updates of the (1 alpha; 0 1) kernel.
//
// Certainty is represented by kLlrInf instead of infinity so that sums and
// differences of saturated entries never produce NaN.

#ifndef GKP_POLAR_LLR_H
#define GKP_POLAR_LLR_H

#include <vector>

namespace gkp_polar {

constexpr double kLlrInf = 1e300;

using LlrVector = std::vector<double>;

inline double clamp_llr(double x) {
    return x > kLlrInf ? kLlrInf : (x < -kLlrInf ? -kLlrInf : x);
}

/// Belief on u1 from beliefs on x1 = u1 + alpha u2 (L1) and x2 = u2 (L2):
///   out[i] = log SUM_j e^{-(L1[alpha j] + L2[j])} - log SUM_j e^{-(L1[alpha j + i] + L2[j])}.
void f_check(const double *l1, const double *l2, int d, int alpha, double *out);
/// Belief on u2 given the decided u1 = u: out[i] = L2[i] - L1[u] + L1[u + alpha i].
void g_variable(const double *l1, const double *l2, int u, int d, int alpha, double *out);

LlrVector f_check(const LlrVector &l1, const LlrVector &l2, int alpha);
LlrVector g_variable(const LlrVector &l1, const LlrVector &l2, int u, int alpha);

/// 0 when every entry is >= 0, otherwise the first index of the minimum.
int hard_decision(const double *l, int d);
int hard_decision(const LlrVector &l);

}  // namespace gkp_polar

#endif
