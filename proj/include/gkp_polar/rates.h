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


// Achievable rates and channel functionals of the square-GKP noise model.
// Rates are reported in bits per mode; I(W) and Z(W) are in dits.

#ifndef GKP_POLAR_RATES_H
#define GKP_POLAR_RATES_H

#include "gkp_polar/gkp_channel.h"
#include "gkp_polar/quadrature.h"

namespace gkp_polar {

struct RateResult {
    double value_bits = 0;
    double quadrature_error_est = 0;
    ChannelSpec spec;
};

/// log2(1 / (sigma^2 e)).
double coherent_info_displacement(double sigma);

/// log2 d + 2 INT ds SUM_u p1(u,s) log2(p1(u,s) / p(s)).
RateResult rate_analog(const ChannelSpec &spec, const QuadOptions &opt = {});

/// log2 d - 2 H(p_u) with p_u the syndrome-averaged error distribution.
RateResult rate_no_analog(const ChannelSpec &spec, const QuadOptions &opt = {});

/// Average of rate_analog at sigma*f and sigma/f. Requires f >= 1.
RateResult rate_rect(const ChannelSpec &spec, double f, const QuadOptions &opt = {});

/// Symmetric mutual information of the amplitude channel with the syndrome as
/// part of the output, evaluated from its defining sum over inputs.
double channel_mutual_info_w1(const ChannelSpec &spec, const QuadOptions &opt = {});
/// Same for the phase channel, built from p_joint_phase.
double channel_mutual_info_w2(const ChannelSpec &spec, const QuadOptions &opt = {});

double bhattacharyya_w1(const ChannelSpec &spec, const QuadOptions &opt = {});

/// log2 of the largest integer k >= 1 with log2 k <= coherent_info_displacement.
double rate_selfdual_staircase(double sigma);

/// Root of sigma -> rate_analog(d, sigma) inside [lo, hi].
double analog_threshold(int d, double lo = 0.5, double hi = 0.7);

struct GapDiagnostics {
    /// exp(-d pi sigma^2)
    double w1_leading = 0;
    /// sqrt(d) / sigma * exp(-pi d / (9 sigma^2))
    double bound_term = 0;
    /// |rate_analog - coherent_info_displacement|
    double measured_gap = 0;
};

GapDiagnostics gap_diagnostics(const ChannelSpec &spec);

}  // namespace gkp_polar

#endif
