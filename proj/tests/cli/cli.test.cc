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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace gkp_polar;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "gkp_polar");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run((int)argv.size(), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p);
    return std::string((std::istreambuf_iterator<char>(f)), {});
}

std::string golden(const std::string &name) {
    return slurp(fs::path(GOLDEN_DIR) / name);
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string l;
    while (std::getline(ss, l)) {
        out.push_back(l);
    }
    return out;
}

std::vector<std::string> split(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string c;
    while (std::getline(ss, c, ',')) {
        out.push_back(c);
    }
    return out;
}

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("gkp_polar_cli_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST(cli, grid_parsing) {
    EXPECT_EQ(cli::parse_grid("0.2:0.7:0.01").size(), 50u);
    EXPECT_EQ(cli::parse_grid("0.5").size(), 1u);
    auto g = cli::parse_grid("0.1:0.4:0.1");
    ASSERT_EQ(g.size(), 3u);
    EXPECT_NEAR(g[2], 0.3, 1e-15);
    EXPECT_THROW(cli::parse_grid("0.5:0.2:0.1"), std::invalid_argument);
    EXPECT_THROW(cli::parse_grid("a:b:c"), std::invalid_argument);
    EXPECT_THROW(cli::parse_grid("0.1:0.2"), std::invalid_argument);
    EXPECT_THROW(cli::parse_grid("-0.1"), std::invalid_argument);
}

TEST(cli, rates_grid_and_header) {
    CliRun r = run({"rates", "--d", "2,5,17", "--sigma", "0.2:0.7:0.01", "--workers", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 151u);
    EXPECT_EQ(ls[0] + "\n", golden("rates_header.csv"));
    // d = 17, sigma = 0.5 sits at row 2*50 + 30.
    auto row = split(ls[1 + 2 * 50 + 30]);
    ASSERT_EQ(row[0], "17");
    EXPECT_NEAR(std::stod(row[1]), 0.5, 1e-12);
    EXPECT_NEAR(std::stod(row[2]), std::stod(row[4]), 1e-3);
}

TEST(cli, rates_rect_column_and_manifest) {
    fs::path dir = scratch("rates");
    fs::create_directories(dir);
    std::string out = (dir / "rates.csv").string();
    CliRun r = run({"rates", "--d", "3", "--sigma", "0.4", "--rect", "2", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(slurp(out))[0] + "\n", golden("rates_rect_header.csv"));
    auto m = nlohmann::json::parse(slurp(out + ".manifest.json"));
    EXPECT_EQ(m["subcommand"], "rates");
    EXPECT_EQ(m["flags"]["rect"], 2.0);
    EXPECT_TRUE(m.contains("tool_version"));
    EXPECT_TRUE(m.contains("wall_time_s"));
    fs::remove_all(dir);
}

TEST(cli, rates_usage_errors) {
    EXPECT_EQ(run({"rates", "--d", "4", "--sigma", "0.5"}).code, cli::kUsage);
    EXPECT_EQ(run({"rates", "--d", "3", "--sigma", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"rates", "--d", "3"}).code, cli::kUsage);
    EXPECT_EQ(run({"rates", "--d", "3", "--sigma", "0.4", "--rect", "0.5"}).code, cli::kUsage);
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(cli, loss_sequence) {
    CliRun r = run({"loss", "--eta", "0.75"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[0] + "\n", golden("loss_header.csv"));
    double prev = -1;
    for (size_t k = 1; k < ls.size(); ++k) {
        double rate = std::stod(split(ls[k])[3]);
        EXPECT_GT(rate, prev);
        EXPECT_LT(rate, std::log2(3.0));
        prev = rate;
    }
    EXPECT_GT(prev, std::log2(3.0) - 0.01);
}

TEST(cli, loss_rejections) {
    CliRun r = run({"loss", "--eta", "0.75", "--d", "3,5"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("3 mod 4"), std::string::npos) << r.err;
    EXPECT_EQ(run({"loss", "--eta", "1.0"}).code, cli::kUsage);
    EXPECT_EQ(run({"loss", "--eta", "0"}).code, cli::kUsage);
    EXPECT_EQ(run({"loss"}).code, cli::kUsage);
}

TEST(cli, design_is_byte_identical_and_simulates) {
    fs::path a = scratch("design_a");
    fs::path b = scratch("design_b");
    std::vector<std::string> base = {"design", "--d", "5", "--sigma", "0.4", "--n", "3,5", "--M", "300", "--seed", "17"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out-dir", a.string(), "--workers", "1"});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out-dir", b.string(), "--workers", "2"});
    CliRun ra = run(args_a);
    CliRun rb = run(args_b);
    ASSERT_EQ(ra.code, 0) << ra.err;
    ASSERT_EQ(rb.code, 0) << rb.err;
    for (const char *f : {"design_d5_n3.json", "design_d5_n5.json", "summary.csv", "zmax_hist.csv"}) {
        std::string sa = slurp(a / f);
        EXPECT_FALSE(sa.empty()) << f;
        EXPECT_EQ(sa, slurp(b / f)) << f;
    }
    auto summary = lines(slurp(a / "summary.csv"));
    ASSERT_EQ(summary.size(), 3u);
    EXPECT_EQ(summary[0] + "\n", golden("design_summary_header.csv"));
    EXPECT_LE(std::stod(split(summary[1])[7]), std::stod(split(summary[2])[7]));
    EXPECT_EQ(lines(slurp(a / "zmax_hist.csv")).size(), 1u + 2 * 24);
    auto m = nlohmann::json::parse(slurp(a / "manifest.json"));
    EXPECT_EQ(m["seed"], 17);
    EXPECT_EQ(m["flags"]["alpha"], 2);

    std::string art = (a / "design_d5_n5.json").string();
    std::string csv = (a / "sim.csv").string();
    std::string js = (a / "sim.json").string();
    CliRun rs = run({"simulate", "--artifact", art, "--trials", "200", "--seed", "3", "--out", csv, "--json", js});
    ASSERT_EQ(rs.code, 0) << rs.err;
    auto sl = lines(slurp(csv));
    ASSERT_EQ(sl.size(), 2u);
    EXPECT_EQ(sl[0] + "\n", golden("simulate_header.csv"));
    EXPECT_EQ(split(sl[1]).size(), split(sl[0]).size());
    EXPECT_NE(rs.err.find("bound"), std::string::npos);
    auto rep = nlohmann::json::parse(slurp(js));
    EXPECT_EQ(rep["trials"], 200);
    EXPECT_TRUE(fs::exists(csv + ".manifest.json"));

    CliRun rm = run({"simulate", "--artifact", art, "--trials", "200", "--seed", "3", "--mode", "syndrome_only"});
    EXPECT_EQ(rm.code, 0) << rm.err;
    EXPECT_EQ(run({"simulate", "--artifact", art, "--trials", "0", "--seed", "3"}).code, cli::kUsage);
    EXPECT_EQ(run({"simulate", "--artifact", art, "--trials", "5"}).code, cli::kUsage);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(cli, simulate_malformed_artifact) {
    fs::path dir = scratch("bad");
    fs::create_directories(dir);
    std::string p = (dir / "bad.json").string();
    std::ofstream(p) << R"({"meta": {"d": 5, "n": 1}})";
    CliRun r = run({"simulate", "--artifact", p, "--trials", "10", "--seed", "1"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("meta.sigma"), std::string::npos) << r.err;
    fs::remove_all(dir);
}

TEST(cli, design_requires_seed) {
    CliRun r = run({"design", "--d", "5", "--sigma", "0.4", "--n", "3", "--out-dir", "/tmp/unused"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_EQ(run({"design", "--d", "6", "--sigma", "0.4", "--n", "3", "--seed", "1", "--out-dir", "/tmp/x"}).code,
              cli::kUsage);
}

TEST(cli, selftest_passes) {
    CliRun r = run({"selftest", "--seed", "5"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
