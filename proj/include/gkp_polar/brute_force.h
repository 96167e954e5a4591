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


// Exact synthesized-channel likelihoods by exhaustive enumeration. Small
// instances only; meant as a reference for the SC decoder.

#ifndef GKP_POLAR_BRUTE_FORCE_H
#define GKP_POLAR_BRUTE_FORCE_H

#include <vector>

namespace gkp_polar {

/// W^(i)(y, u_0..u_{i-1} | u_i = a) for each a, with
///   W^(i) = d^{-(N-1)} SUM_{u_{i+1}..u_{N-1}} PROD_j W(y_j | (G_N u)_j).
/// table[x][y] is the discrete channel W(y | x) and d = table.size().
/// Refuses (std::invalid_argument) when N > 8 or d > 3.
std::vector<double> brute_force_wi(const std::vector<std::vector<double>> &table, int alpha,
                                   const std::vector<int> &y, const std::vector<int> &prefix, int i);

}  // namespace gkp_polar

#endif
