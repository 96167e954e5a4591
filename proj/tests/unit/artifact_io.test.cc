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

#include "gkp_polar/artifact_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

using namespace gkp_polar;
using nlohmann::json;

namespace {

DesignArtifact sample_artifact() {
    return design_code({3, 0.43}, 1, 3, 500, Budget{}, 77, 1);
}

std::string error_of(const json &j) {
    try {
        artifact_from_json(j);
    } catch (const ArtifactError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(artifact_io, round_trip_is_exact) {
    DesignArtifact a = sample_artifact();
    DesignArtifact b = artifact_from_json(artifact_to_json(a));
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.sigma, b.sigma);
    EXPECT_EQ(a.n, b.n);
    EXPECT_EQ(a.alpha, b.alpha);
    EXPECT_EQ(a.m_samples, b.m_samples);
    EXPECT_EQ(a.seed, b.seed);
    EXPECT_EQ(a.budget.beta, b.budget.beta);
    EXPECT_EQ(a.tool_version, b.tool_version);
    EXPECT_EQ(a.z1, b.z1);
    EXPECT_EQ(a.z2, b.z2);
    EXPECT_EQ(a.sets.I, b.sets.I);
    EXPECT_EQ(a.sets.A, b.sets.A);
    EXPECT_EQ(a.sets.P, b.sets.P);
    EXPECT_EQ(a.sets.E, b.sets.E);
    EXPECT_EQ(a.rate_bits_per_mode, b.rate_bits_per_mode);
    EXPECT_EQ(a.pe2_bound, b.pe2_bound);
}

TEST(artifact_io, file_round_trip_is_byte_stable) {
    auto dir = std::filesystem::temp_directory_path();
    std::string p1 = (dir / "gkp_polar_art_a.json").string();
    std::string p2 = (dir / "gkp_polar_art_b.json").string();
    write_artifact(sample_artifact(), p1);
    write_artifact(read_artifact(p1), p2);
    std::ifstream f1(p1), f2(p2);
    std::string s1((std::istreambuf_iterator<char>(f1)), {});
    std::string s2((std::istreambuf_iterator<char>(f2)), {});
    EXPECT_FALSE(s1.empty());
    EXPECT_EQ(s1, s2);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST(artifact_io, sets_are_one_based) {
    json j = artifact_to_json(sample_artifact());
    for (const char *k : {"I", "A", "P", "E"}) {
        for (const auto &v : j["sets"][k]) {
            EXPECT_GE(v.get<int>(), 1);
            EXPECT_LE(v.get<int>(), 8);
        }
    }
}

TEST(artifact_io, errors_name_the_key) {
    json good = artifact_to_json(sample_artifact());

    json j = good;
    j["meta"].erase("sigma");
    EXPECT_NE(error_of(j).find("meta.sigma"), std::string::npos);

    j = good;
    j["meta"]["d"] = "three";
    EXPECT_NE(error_of(j).find("meta.d"), std::string::npos);

    j = good;
    j["meta"]["d"] = 4;
    EXPECT_NE(error_of(j).find("meta.d"), std::string::npos);

    j = good;
    j["z2"].erase(0);
    EXPECT_NE(error_of(j).find("z2"), std::string::npos);

    j = good;
    j["sets"]["P"].push_back(9);
    EXPECT_NE(error_of(j).find("sets.P"), std::string::npos);

    j = good;
    j["sets"]["I"].push_back(j["sets"]["E"].empty() ? 1 : j["sets"]["E"][0].get<int>());
    j["sets"]["I"].push_back(j["sets"]["I"][0]);
    EXPECT_NE(error_of(j).find("sets"), std::string::npos);

    j = good;
    j.erase("pe1_bound");
    EXPECT_NE(error_of(j).find("pe1_bound"), std::string::npos);

    EXPECT_THROW(artifact_from_json(json::array()), ArtifactError);
}

TEST(artifact_io, unreadable_file) {
    EXPECT_THROW(read_artifact("/nonexistent/gkp_polar.json"), std::runtime_error);
    std::string p = (std::filesystem::temp_directory_path() / "gkp_polar_bad.json").string();
    std::ofstream(p) << "{\"meta\": ";
    EXPECT_THROW(read_artifact(p), ArtifactError);
    std::remove(p.c_str());
}
