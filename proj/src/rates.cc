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


#include "gkp_polar/rates.h"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gkp_polar/errors.h"

namespace gkp_polar {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double logsumexp(const std::vector<double> &v) {
    double m = *std::max_element(v.begin(), v.end());
    double acc = 0;
    for (double x : v) {
        acc += std::exp(x - m);
    }
    return m + std::log(acc);
}

std::vector<double> log_p1_row(const ChannelSpec &spec, double s) {
    std::vector<double> lp(spec.d);
    for (int u = 0; u < spec.d; ++u) {
        lp[u] = log_p_joint(spec, u, s);
    }
    return lp;
}

// p2(v, s) = p1(v, -s) = p1(-v, s), which stays in the log domain.
std::vector<double> log_p2_row(const ChannelSpec &spec, double s) {
    std::vector<double> lp(spec.d);
    for (int v = 0; v < spec.d; ++v) {
        lp[v] = log_p_joint(spec, mod_d(-v, spec.d), s);
    }
    return lp;
}

double mutual_info(const ChannelSpec &spec, const QuadOptions &opt, bool phase) {
    spec.validate();
    int d = spec.d;
    double log_d = std::log((double)d);
    auto integrand = [&](double s) {
        std::vector<double> lp = phase ? log_p2_row(spec, s) : log_p1_row(spec, s);
        double total = 0;
        for (int y = 0; y < d; ++y) {
            std::vector<double> mix(d);
            for (int x = 0; x < d; ++x) {
                mix[x] = lp[mod_d(y - x, d)];
            }
            double lmix = logsumexp(mix) - log_d;
            for (int x = 0; x < d; ++x) {
                double lw = lp[mod_d(y - x, d)];
                total += std::exp(lw) * (lw - lmix);
            }
        }
        return total / (d * log_d);
    };
    return integrate(integrand, -0.5, 0.5, opt).value;
}

}  // namespace

double coherent_info_displacement(double sigma) {
    if (!(sigma > 0)) {
        throw std::domain_error("sigma must be positive");
    }
    return -std::log2(sigma * sigma * std::numbers::e);
}

RateResult rate_analog(const ChannelSpec &spec, const QuadOptions &opt) {
    spec.validate();
    auto integrand = [&](double s) {
        std::vector<double> lp = log_p1_row(spec, s);
        double lps = logsumexp(lp);
        double total = 0;
        for (double l : lp) {
            total += std::exp(l) * (l - lps);
        }
        return total;
    };
    QuadResult q = integrate(integrand, -0.5, 0.5, opt);
    RateResult r;
    r.value_bits = std::log2((double)spec.d) + 2 * q.value / kLn2;
    r.quadrature_error_est = 2 * q.error_est / kLn2;
    r.spec = spec;
    return r;
}

RateResult rate_no_analog(const ChannelSpec &spec, const QuadOptions &opt) {
    spec.validate();
    double h = 0;
    double err = 0;
    for (int u = 0; u < spec.d; ++u) {
        QuadResult q = integrate([&](double s) { return p_joint(spec, u, s); }, -0.5, 0.5, opt);
        if (q.value > 0) {
            h -= q.value * std::log2(q.value);
        }
        err += q.error_est;
    }
    RateResult r;
    r.value_bits = std::log2((double)spec.d) - 2 * h;
    r.quadrature_error_est = err;
    r.spec = spec;
    return r;
}

RateResult rate_rect(const ChannelSpec &spec, double f, const QuadOptions &opt) {
    if (!(f >= 1)) {
        throw std::domain_error("rectangular aspect f must be >= 1");
    }
    RateResult a = rate_analog({spec.d, spec.sigma * f}, opt);
    RateResult b = rate_analog({spec.d, spec.sigma / f}, opt);
    RateResult r;
    r.value_bits = 0.5 * (a.value_bits + b.value_bits);
    r.quadrature_error_est = 0.5 * (a.quadrature_error_est + b.quadrature_error_est);
    r.spec = spec;
    return r;
}

double channel_mutual_info_w1(const ChannelSpec &spec, const QuadOptions &opt) {
    return mutual_info(spec, opt, false);
}

double channel_mutual_info_w2(const ChannelSpec &spec, const QuadOptions &opt) {
    return mutual_info(spec, opt, true);
}

double bhattacharyya_w1(const ChannelSpec &spec, const QuadOptions &opt) {
    spec.validate();
    int d = spec.d;
    auto integrand = [&](double s) {
        std::vector<double> lp = log_p1_row(spec, s);
        double total = 0;
        for (int a = 1; a < d; ++a) {
            for (int y = 0; y < d; ++y) {
                total += std::exp(0.5 * (lp[y] + lp[mod_d(y - a, d)]));
            }
        }
        return total / (d - 1);
    };
    return integrate(integrand, -0.5, 0.5, opt).value;
}

double rate_selfdual_staircase(double sigma) {
    double v = 1 / (sigma * sigma * std::numbers::e);
    double k = std::floor(v);
    if (k < 1) {
        return 0;
    }
    return std::log2(k);
}

double analog_threshold(int d, double lo, double hi) {
    ChannelSpec base{d, lo};
    base.validate();
    auto f = [d](double sigma) { return rate_analog({d, sigma}).value_bits; };
    double flo = f(lo);
    double fhi = f(hi);
    if (!(flo > 0 && fhi < 0)) {
        throw NumericError("rate_analog does not change sign on the threshold bracket");
    }
    std::uintmax_t iters = 100;
    auto root = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(36),
                                                  iters);
    return 0.5 * (root.first + root.second);
}

GapDiagnostics gap_diagnostics(const ChannelSpec &spec) {
    spec.validate();
    double pi = std::numbers::pi;
    double d = spec.d;
    double sig = spec.sigma;
    GapDiagnostics g;
    g.w1_leading = std::exp(-d * pi * sig * sig);
    g.bound_term = std::sqrt(d) / sig * std::exp(-pi * d / (9 * sig * sig));
    g.measured_gap = std::abs(rate_analog(spec).value_bits - coherent_info_displacement(sig));
    return g;
}

}  // namespace gkp_polar
