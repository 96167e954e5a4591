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

// Jacobi theta functions with real argument.
//
//   theta3(u, q) = 1 + 2 SUM_{n>=1} q^(n^2) cos(2nu)
//   theta2(u, q) = 2 q^(1/4) SUM_{n>=0} q^(n(n+1)) cos((2n+1)u)
//
// For a real nome q = exp(-pi t) the Poisson-dual representation
//
//   theta3(u, exp(-pi t)) = t^(-1/2) SUM_l exp(-pi (u/pi + l)^2 / t)
//
// has only positive terms and converges fast when t is small, so the real
// entry points switch to it for t < 1. The complex-nome overload always sums
// the q-series directly.

#ifndef GKP_POLAR_THETA_H
#define GKP_POLAR_THETA_H

#include <complex>

namespace gkp_polar::theta {

constexpr double kDefaultTol = 1e-15;

/// Nome threshold above which the real evaluators use the dual Gaussian sum.
/// Corresponds to t = 1 in q = exp(-pi t).
double dual_switch_nome();

/// theta3 for a complex nome, by direct summation of the q-series.
/// Throws std::domain_error when |q| >= 1.
std::complex<double> theta3(double u, std::complex<double> q, double tol = kDefaultTol);

/// theta3 for a real nome in (-1, 1). Uses the dual sum for q > exp(-pi).
double theta3(double u, double q, double tol = kDefaultTol);

/// The raw q-series with no modular transform. Exposed for cross-checks.
double theta3_series(double u, double q, double tol = kDefaultTol);

/// theta3(u, exp(-pi t)) through the Poisson-dual Gaussian sum. Requires t > 0.
double theta3_dual(double u, double t, double tol = kDefaultTol);

/// log theta3(u, q) for 0 <= q < 1, accurate even when theta3 underflows.
double log_theta3(double u, double q);

/// log theta3(u, exp(-pi t)) for t > 0 without forming the nome.
double log_theta3_t(double u, double t);

/// theta3(u, exp(-pi t)) for t > 0 without forming the nome.
double theta3_t(double u, double t);

/// theta3(0, q) - 1 = 2 SUM q^(n^2), without cancellation for tiny q.
/// Requires 0 <= q < 1.
double theta3_minus_one(double q);

/// theta2 for 0 <= q < 1. Throws std::domain_error for q >= 1 or q < 0.
double theta2(double u, double q, double tol = kDefaultTol);

/// |theta3(e^{-pi t})^2 - theta3(e^{-pi/t})^2 / t|, both sides summed with the
/// raw series. This is the Z^2 modular identity, used as a self-test.
double duality_residual(double t);

}  // namespace gkp_polar::theta

#endif
