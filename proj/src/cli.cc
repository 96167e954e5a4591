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

#include "gkp_polar/cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "gkp_polar/artifact_io.h"
#include "gkp_polar/code_design.h"
#include "gkp_polar/e2e_sim.h"
#include "gkp_polar/errors.h"
#include "gkp_polar/loss_capacity.h"
#include "gkp_polar/parallel.h"
#include "gkp_polar/rates.h"
#include "gkp_polar/theta.h"
#include "json.hpp"

namespace gkp_polar::cli {

const char *const kRatesHeader = "d,sigma,i_analog,i_no_analog,i_coherent,i_staircase";
const char *const kLossHeader = "d,logN,K_over_N,rate_bits,log_eps_bound";
const char *const kDesignSummaryHeader =
    "n,N,d,sigma,alpha,m_samples,seed,rate_bits,rate_analog,pe1_bound,pe2_bound,n_I,n_A,n_P,n_E,frac_polarized";
const char *const kSimulateHeader =
    "d,sigma,n,N,mode,trials,amp_failures,phase_failures,both_failures,p1_hat,p1_lo,p1_hi,p2_hat,p2_lo,p2_hi,"
    "pe1_bound,pe2_bound,p1_within_bound,p2_within_bound";

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Writes to the named file, or to `fallback` when the name is empty.
class Sink {
   public:
    Sink(const std::string &path, std::ostream &fallback) : path_(path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot write " + path);
            }
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream &os() {
        return *os_;
    }

   private:
    std::string path_;
    std::ofstream file_;
    std::ostream *os_;
};

void write_manifest(const std::string &path, const std::string &subcommand, const json &flags,
                    std::optional<uint64_t> seed, Clock::time_point start, const std::vector<std::string> &outputs) {
    json m;
    m["subcommand"] = subcommand;
    m["flags"] = flags;
    m["seed"] = seed ? json(*seed) : json(nullptr);
    m["tool_version"] = kToolVersion;
    m["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
    m["outputs"] = outputs;
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << m.dump(1) << "\n";
}

void require_primes(const std::vector<int> &ds) {
    if (ds.empty()) {
        throw UsageError("--d needs at least one value");
    }
    for (int d : ds) {
        if (!is_prime(d)) {
            throw UsageError("d = " + std::to_string(d) + " is not prime");
        }
    }
}

// ---- rates ----

struct RatesArgs {
    std::vector<int> d;
    std::string sigma;
    std::optional<double> rect;
    bool no_analog = false;
    bool staircase = false;
    std::string out;
    int workers = 0;
};

int cmd_rates(const RatesArgs &a, std::ostream &out) {
    auto start = Clock::now();
    require_primes(a.d);
    std::vector<double> grid = parse_grid(a.sigma);
    if (a.rect && !(*a.rect >= 1)) {
        throw UsageError("--rect needs f >= 1");
    }
    struct Row {
        int d;
        double sigma;
        std::vector<double> vals;
    };
    std::vector<Row> rows;
    for (int d : a.d) {
        for (double s : grid) {
            rows.push_back({d, s, {}});
        }
    }
    parallel_blocks(rows.size(), resolve_workers(a.workers), [&](size_t k) {
        Row &r = rows[k];
        ChannelSpec spec{r.d, r.sigma};
        r.vals = {rate_analog(spec).value_bits, rate_no_analog(spec).value_bits,
                  coherent_info_displacement(r.sigma), rate_selfdual_staircase(r.sigma)};
        if (a.rect) {
            r.vals.push_back(rate_rect(spec, *a.rect).value_bits);
        }
    });

    Sink sink(a.out, out);
    sink.os() << kRatesHeader << (a.rect ? ",i_rect_f" : "") << "\n";
    for (const Row &r : rows) {
        sink.os() << r.d << "," << num(r.sigma);
        for (double v : r.vals) {
            sink.os() << "," << num(v);
        }
        sink.os() << "\n";
    }
    if (!a.out.empty()) {
        json flags = {{"d", a.d},
                      {"sigma", a.sigma},
                      {"rect", a.rect ? json(*a.rect) : json(nullptr)},
                      {"no_analog", a.no_analog},
                      {"staircase", a.staircase},
                      {"workers", a.workers}};
        write_manifest(a.out + ".manifest.json", "rates", flags, std::nullopt, start, {a.out});
    }
    return kOk;
}

// ---- loss ----

struct LossArgs {
    double eta = 0;
    std::vector<int> d{3, 7, 11, 19, 23};
    std::string out;
};

int cmd_loss(const LossArgs &a, std::ostream &out) {
    auto start = Clock::now();
    if (!(a.eta > 0 && a.eta < 1)) {
        throw UsageError("--eta must lie strictly between 0 and 1");
    }
    for (int d : a.d) {
        if (!is_prime(d) || d % 4 != 3) {
            throw UsageError("d = " + std::to_string(d) +
                             " rejected: the self-orthogonal construction over GF(d^2) needs a prime d = 3 mod 4");
        }
    }
    std::vector<SequencePoint> seq = capacity_sequence(a.eta, a.d);
    Sink sink(a.out, out);
    sink.os() << kLossHeader << "\n";
    for (const SequencePoint &p : seq) {
        sink.os() << p.d << "," << num(p.logN) << "," << num(p.K_over_N) << "," << num(p.rate_bits) << ","
                  << num(p.log_eps_bound) << "\n";
    }
    if (!a.out.empty()) {
        write_manifest(a.out + ".manifest.json", "loss", {{"eta", a.eta}, {"d", a.d}}, std::nullopt, start,
                       {a.out});
    }
    return kOk;
}

// ---- design ----

struct DesignArgs {
    int d = 0;
    double sigma = 0;
    std::optional<int> alpha;
    std::vector<int> n;
    int64_t m = 10000;
    double c_e = 0.5;
    double beta = 2.0 / 9.0;
    uint64_t seed = 0;
    std::string out_dir;
    int workers = 0;
};

constexpr double kHistLo = -12;
constexpr double kHistWidth = 0.5;
constexpr int kHistBins = 24;

int cmd_design(const DesignArgs &a, std::ostream &out) {
    auto start = Clock::now();
    ChannelSpec spec{a.d, a.sigma};
    try {
        spec.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    if (a.n.empty()) {
        throw UsageError("--n needs at least one value");
    }
    for (int n : a.n) {
        if (n < 0 || n > 24) {
            throw UsageError("--n values must lie in 0..24");
        }
    }
    if (a.m < 1) {
        throw UsageError("--M must be >= 1");
    }
    int alpha = a.alpha.value_or(default_alpha(a.d));
    if (alpha % a.d == 0) {
        throw UsageError("--alpha must be nonzero mod d");
    }
    Budget budget{a.c_e, a.beta};
    std::filesystem::create_directories(a.out_dir);
    std::filesystem::path dir(a.out_dir);
    double analog = rate_analog(spec).value_bits;

    std::vector<std::string> outputs;
    std::ofstream summary(dir / "summary.csv");
    std::ofstream hist(dir / "zmax_hist.csv");
    if (!summary || !hist) {
        throw std::runtime_error("cannot write into " + a.out_dir);
    }
    summary << kDesignSummaryHeader << "\n";
    hist << "n,log10_lo,log10_hi,count\n";

    std::vector<DesignArtifact> arts = design_sequence(spec, alpha, a.n, a.m, budget, a.seed, a.workers);
    for (const DesignArtifact &art : arts) {
        std::string name = "design_d" + std::to_string(art.d) + "_n" + std::to_string(art.n) + ".json";
        write_artifact(art, (dir / name).string());
        outputs.push_back(name);

        size_t N = art.N();
        std::vector<int64_t> counts(kHistBins, 0);
        size_t polarized = 0;
        for (size_t i = 0; i < N; ++i) {
            double z = std::max(art.z1[i], art.z2[i]);
            polarized += z < 0.01 ? 1 : 0;
            double l = z > 0 ? std::log10(z) : -INFINITY;
            int b = (int)std::floor((l - kHistLo) / kHistWidth);
            counts[std::clamp(b, 0, kHistBins - 1)]++;
        }
        summary << art.n << "," << N << "," << art.d << "," << num(art.sigma) << "," << art.alpha << ","
                << art.m_samples << "," << art.seed << "," << num(art.rate_bits_per_mode) << "," << num(analog)
                << "," << num(art.pe1_bound) << "," << num(art.pe2_bound) << "," << art.sets.I.size() << ","
                << art.sets.A.size() << "," << art.sets.P.size() << "," << art.sets.E.size() << ","
                << num((double)polarized / (double)N) << "\n";
        for (int b = 0; b < kHistBins; ++b) {
            hist << art.n << "," << (b == 0 ? "-inf" : num(kHistLo + b * kHistWidth)) << ","
                 << num(kHistLo + (b + 1) * kHistWidth) << "," << counts[b] << "\n";
        }
        out << "n=" << art.n << " rate_bits=" << num(art.rate_bits_per_mode) << " pe1_bound=" << num(art.pe1_bound)
            << " pe2_bound=" << num(art.pe2_bound) << "\n";
    }
    outputs.push_back("summary.csv");
    outputs.push_back("zmax_hist.csv");
    json flags = {{"d", a.d},       {"sigma", a.sigma}, {"alpha", alpha},     {"n", a.n},
                  {"M", a.m},       {"c_e", a.c_e},     {"beta", a.beta},     {"seed", a.seed},
                  {"out_dir", a.out_dir}, {"workers", a.workers}};
    write_manifest((dir / "manifest.json").string(), "design", flags, a.seed, start, outputs);
    return kOk;
}

// ---- simulate ----

struct SimulateArgs {
    std::string artifact;
    int64_t trials = 0;
    uint64_t seed = 0;
    std::string mode = "all_zero";
    std::optional<double> sigma;
    std::string out;
    std::string json_out;
    int workers = 0;
};

int cmd_simulate(const SimulateArgs &a, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    if (a.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    if (a.sigma && !(*a.sigma > 0)) {
        throw UsageError("--sigma must be positive");
    }
    SimConfig cfg;
    if (!std::filesystem::is_regular_file(a.artifact)) {
        throw UsageError("cannot read artifact " + a.artifact);
    }
    cfg.artifact = read_artifact(a.artifact);
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.mode = a.mode == "syndrome_only" ? SimMode::syndrome_only : SimMode::all_zero;
    cfg.sigma = a.sigma;
    cfg.workers = a.workers;
    SimReport r = estimate_logical_error(cfg);
    const DesignArtifact &art = cfg.artifact;
    bool ok1 = r.ci95_1.lo <= art.pe1_bound;
    bool ok2 = r.ci95_2.lo <= art.pe2_bound;

    Sink sink(a.out, out);
    sink.os() << kSimulateHeader << "\n";
    sink.os() << art.d << "," << num(a.sigma.value_or(art.sigma)) << "," << art.n << "," << art.N() << ","
              << a.mode << "," << r.trials << "," << r.amp_failures << "," << r.phase_failures << ","
              << r.both_failures << "," << num(r.p1_hat) << "," << num(r.ci95_1.lo) << "," << num(r.ci95_1.hi)
              << "," << num(r.p2_hat) << "," << num(r.ci95_2.lo) << "," << num(r.ci95_2.hi) << ","
              << num(art.pe1_bound) << "," << num(art.pe2_bound) << "," << (ok1 ? 1 : 0) << "," << (ok2 ? 1 : 0)
              << "\n";
    err << "p1_hat " << num(r.p1_hat) << " (wilson lo " << num(r.ci95_1.lo) << ") vs bound " << num(art.pe1_bound)
        << (ok1 ? ": consistent" : ": EXCEEDS bound") << "\n";
    err << "p2_hat " << num(r.p2_hat) << " (wilson lo " << num(r.ci95_2.lo) << ") vs bound " << num(art.pe2_bound)
        << (ok2 ? ": consistent" : ": EXCEEDS bound") << "\n";

    std::vector<std::string> outputs;
    if (!a.out.empty()) {
        outputs.push_back(a.out);
    }
    if (!a.json_out.empty()) {
        json j = {{"trials", r.trials},
                  {"amp_failures", r.amp_failures},
                  {"phase_failures", r.phase_failures},
                  {"both_failures", r.both_failures},
                  {"p1_hat", r.p1_hat},
                  {"p2_hat", r.p2_hat},
                  {"ci95_1", {r.ci95_1.lo, r.ci95_1.hi}},
                  {"ci95_2", {r.ci95_2.lo, r.ci95_2.hi}},
                  {"pe1_bound", art.pe1_bound},
                  {"pe2_bound", art.pe2_bound}};
        std::ofstream f(a.json_out);
        if (!f) {
            throw std::runtime_error("cannot write " + a.json_out);
        }
        f << j.dump(1) << "\n";
        outputs.push_back(a.json_out);
    }
    if (!outputs.empty()) {
        json flags = {{"artifact", a.artifact},
                      {"trials", a.trials},
                      {"seed", a.seed},
                      {"mode", a.mode},
                      {"sigma", a.sigma ? json(*a.sigma) : json(nullptr)},
                      {"workers", a.workers}};
        write_manifest(outputs.front() + ".manifest.json", "simulate", flags, a.seed, start, outputs);
    }
    return kOk;
}

// ---- selftest ----

int cmd_selftest(uint64_t seed, std::ostream &out) {
    int failures = 0;
    auto report = [&](bool ok, const std::string &name, double value) {
        out << (ok ? "PASS " : "FAIL ") << name << " " << num(value) << "\n";
        failures += ok ? 0 : 1;
    };
    for (double t : {0.3, 0.5, 1.0, 2.0, 3.0}) {
        double r = theta::duality_residual(t);
        report(r < 1e-10, "theta_duality t=" + num(t), r);
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int primes[] = {2, 3, 5, 7, 11};
    double worst = 0;
    for (int k = 0; k < 20; ++k) {
        ChannelSpec spec{primes[rng() % 5], 0.2 + 0.6 * unit(rng)};
        int u = (int)(rng() % spec.d);
        double s = unit(rng) - 0.5;
        double a = p_joint(spec, u, s);
        double b = p_joint_gaussian_sum(spec, u, s);
        worst = std::max(worst, std::abs(a - b) / b);
    }
    report(worst < 1e-11, "p_joint_series_vs_gaussian_sum", worst);
    double t = 1 + 2 * std::exp(-3 * std::acos(-1.0));
    double sg = s_g(1.0, 3, 1);
    report(std::abs(sg - t * t) < 1e-12, "s_g_d3_N1", sg);
    report(count_self_orthogonal(3, 2) == 32, "n_self_d3_N2", (double)count_self_orthogonal(3, 2));
    double gap = std::abs(rate_analog({17, 0.5}).value_bits - coherent_info_displacement(0.5));
    report(gap < 1e-3, "rate_analog_d17_vs_coherent", gap);
    return failures == 0 ? kOk : kNumeric;
}

}  // namespace

std::vector<double> parse_grid(const std::string &spec) {
    auto to_double = [&](const std::string &s) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception &) {
            throw UsageError("bad number '" + s + "' in grid '" + spec + "'");
        }
        if (pos != s.size() || !std::isfinite(v)) {
            throw UsageError("bad number '" + s + "' in grid '" + spec + "'");
        }
        return v;
    };
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        parts.push_back(item);
    }
    std::vector<double> out;
    if (parts.size() == 1) {
        out.push_back(to_double(parts[0]));
    } else if (parts.size() == 3) {
        double start = to_double(parts[0]);
        double stop = to_double(parts[1]);
        double step = to_double(parts[2]);
        if (!(step > 0) || !(stop > start)) {
            throw UsageError("grid '" + spec + "' needs step > 0 and stop > start");
        }
        // Points within half a part in 1e9 of stop count as stop and are excluded.
        double count = std::ceil((stop - start) / step - 1e-9);
        if (count > 1e6) {
            throw UsageError("grid '" + spec + "' has too many points");
        }
        for (int k = 0; k < (int)count; ++k) {
            out.push_back(start + k * step);
        }
    } else {
        throw UsageError("grid must be 'value' or 'start:stop:step', got '" + spec + "'");
    }
    for (double v : out) {
        if (!(v > 0)) {
            throw UsageError("sigma values must be positive");
        }
    }
    return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Concatenated square-GKP / prime-field polar code toolkit"};
    app.name("gkp_polar");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    RatesArgs ra;
    auto *rates = app.add_subcommand("rates", "Rates per mode over a (d, sigma) grid, as CSV");
    rates->add_option("--d", ra.d, "Comma-separated primes")->required()->delimiter(',');
    rates->add_option("--sigma", ra.sigma, "start:stop:step (stop excluded) or a single value")->required();
    rates->add_option("--rect", ra.rect, "Also report the rectangular-lattice rate with aspect f >= 1");
    rates->add_flag("--no-analog", ra.no_analog, "Accepted for compatibility; the column is always present");
    rates->add_flag("--staircase", ra.staircase, "Accepted for compatibility; the column is always present");
    rates->add_option("--out", ra.out, "Output CSV path (default stdout)");
    rates->add_option("--workers", ra.workers, "Worker threads");

    DesignArgs da;
    auto *design = app.add_subcommand("design", "Monte-Carlo polar code design for a sequence of lengths");
    design->add_option("--d", da.d, "Prime dimension")->required();
    design->add_option("--sigma", da.sigma, "Displacement noise")->required();
    design->add_option("--alpha", da.alpha, "Kernel multiplier (default depends on d)");
    design->add_option("--n", da.n, "Comma-separated log2 block lengths, ascending")->required()->delimiter(',');
    design->add_option("--M", da.m, "Monte-Carlo samples per length")->capture_default_str();
    design->add_option("--c-e", da.c_e, "Error budget prefactor")->capture_default_str();
    design->add_option("--beta", da.beta, "Error budget exponent")->capture_default_str();
    design->add_option("--seed", da.seed, "Random seed")->required();
    design->add_option("--out-dir", da.out_dir, "Output directory")->required();
    design->add_option("--workers", da.workers, "Worker threads");

    SimulateArgs sa;
    auto *simulate = app.add_subcommand("simulate", "Block error simulation of a designed code");
    simulate->add_option("--artifact", sa.artifact, "Design JSON")->required();
    simulate->add_option("--trials", sa.trials, "Number of blocks")->required();
    simulate->add_option("--seed", sa.seed, "Random seed")->required();
    simulate->add_option("--mode", sa.mode, "all_zero or syndrome_only")
        ->check(CLI::IsMember({"all_zero", "syndrome_only"}))
        ->capture_default_str();
    simulate->add_option("--sigma", sa.sigma, "Simulate at this noise instead of the design point");
    simulate->add_option("--out", sa.out, "Output CSV path (default stdout)");
    simulate->add_option("--json", sa.json_out, "Also write the report as JSON");
    simulate->add_option("--workers", sa.workers, "Worker threads");

    LossArgs la;
    auto *loss = app.add_subcommand("loss", "Pure-loss capacity sequence, as CSV");
    loss->add_option("--eta", la.eta, "Transmittance in (0, 1)")->required();
    loss->add_option("--d", la.d, "Comma-separated primes = 3 mod 4")->delimiter(',')->capture_default_str();
    loss->add_option("--out", la.out, "Output CSV path (default stdout)");

    uint64_t selftest_seed = 0;
    auto *selftest = app.add_subcommand("selftest", "Quick numerical self-checks");
    selftest->add_option("--seed", selftest_seed, "Random seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*rates) {
            return cmd_rates(ra, out);
        }
        if (*design) {
            return cmd_design(da, out);
        }
        if (*simulate) {
            return cmd_simulate(sa, out, err);
        }
        if (*loss) {
            return cmd_loss(la, out);
        }
        if (*selftest) {
            return cmd_selftest(selftest_seed, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArtifactError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace gkp_polar::cli
