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

#include <fstream>
#include <sstream>

namespace gkp_polar {

using nlohmann::json;

namespace {

const json &require(const json &obj, const char *key, const std::string &path) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw ArtifactError("artifact is missing key '" + path + "'");
    }
    return obj.at(key);
}

template <class T>
T number(const json &obj, const char *key, const std::string &path) {
    const json &v = require(obj, key, path);
    if (!v.is_number()) {
        throw ArtifactError("artifact key '" + path + "' must be a number");
    }
    if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) {
            throw ArtifactError("artifact key '" + path + "' must be an integer");
        }
    }
    return v.get<T>();
}

std::vector<double> number_array(const json &obj, const char *key, size_t N) {
    const json &v = require(obj, key, key);
    if (!v.is_array() || v.size() != N) {
        throw ArtifactError("artifact key '" + std::string(key) + "' must be an array of N numbers");
    }
    std::vector<double> out;
    for (const auto &x : v) {
        if (!x.is_number()) {
            throw ArtifactError("artifact key '" + std::string(key) + "' holds a non-number");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<int> index_array(const json &sets, const char *key, size_t N) {
    std::string path = std::string("sets.") + key;
    const json &v = require(sets, key, path);
    if (!v.is_array()) {
        throw ArtifactError("artifact key '" + path + "' must be an array");
    }
    std::vector<int> out;
    for (const auto &x : v) {
        if (!x.is_number_integer() || x.get<int64_t>() < 1 || x.get<int64_t>() > (int64_t)N) {
            throw ArtifactError("artifact key '" + path + "' holds an index outside 1..N");
        }
        out.push_back(x.get<int>() - 1);
    }
    return out;
}

json one_based(const std::vector<int> &v) {
    json a = json::array();
    for (int i : v) {
        a.push_back(i + 1);
    }
    return a;
}

}  // namespace

json artifact_to_json(const DesignArtifact &art) {
    json j;
    j["meta"] = {
        {"d", art.d},
        {"sigma", art.sigma},
        {"n", art.n},
        {"alpha", art.alpha},
        {"m_samples", art.m_samples},
        {"seed", art.seed},
        {"c_e", art.budget.c_e},
        {"beta", art.budget.beta},
        {"tool_version", art.tool_version},
    };
    j["z1"] = art.z1;
    j["z2"] = art.z2;
    j["sets"] = {
        {"I", one_based(art.sets.I)},
        {"A", one_based(art.sets.A)},
        {"P", one_based(art.sets.P)},
        {"E", one_based(art.sets.E)},
    };
    j["rate_bits_per_mode"] = art.rate_bits_per_mode;
    j["pe1_bound"] = art.pe1_bound;
    j["pe2_bound"] = art.pe2_bound;
    return j;
}

DesignArtifact artifact_from_json(const json &j) {
    if (!j.is_object()) {
        throw ArtifactError("artifact must be a JSON object");
    }
    DesignArtifact art;
    const json &meta = require(j, "meta", "meta");
    art.d = number<int>(meta, "d", "meta.d");
    art.sigma = number<double>(meta, "sigma", "meta.sigma");
    art.n = number<int>(meta, "n", "meta.n");
    art.alpha = number<int>(meta, "alpha", "meta.alpha");
    art.m_samples = number<int64_t>(meta, "m_samples", "meta.m_samples");
    art.seed = number<uint64_t>(meta, "seed", "meta.seed");
    art.budget.c_e = number<double>(meta, "c_e", "meta.c_e");
    art.budget.beta = number<double>(meta, "beta", "meta.beta");
    const json &ver = require(meta, "tool_version", "meta.tool_version");
    if (!ver.is_string()) {
        throw ArtifactError("artifact key 'meta.tool_version' must be a string");
    }
    art.tool_version = ver.get<std::string>();
    if (art.n < 0 || art.n > 30) {
        throw ArtifactError("artifact key 'meta.n' is out of range");
    }
    if (!is_prime(art.d)) {
        throw ArtifactError("artifact key 'meta.d' must be prime");
    }
    if (!(art.sigma > 0)) {
        throw ArtifactError("artifact key 'meta.sigma' must be positive");
    }
    size_t N = art.N();
    art.z1 = number_array(j, "z1", N);
    art.z2 = number_array(j, "z2", N);
    const json &sets = require(j, "sets", "sets");
    art.sets.I = index_array(sets, "I", N);
    art.sets.A = index_array(sets, "A", N);
    art.sets.P = index_array(sets, "P", N);
    art.sets.E = index_array(sets, "E", N);
    std::vector<int> seen(N, 0);
    for (const auto *s : {&art.sets.I, &art.sets.A, &art.sets.P, &art.sets.E}) {
        for (int i : *s) {
            seen[i]++;
        }
    }
    for (int c : seen) {
        if (c != 1) {
            throw ArtifactError("artifact key 'sets' must partition 1..N");
        }
    }
    art.rate_bits_per_mode = number<double>(j, "rate_bits_per_mode", "rate_bits_per_mode");
    art.pe1_bound = number<double>(j, "pe1_bound", "pe1_bound");
    art.pe2_bound = number<double>(j, "pe2_bound", "pe2_bound");
    return art;
}

void write_artifact(const DesignArtifact &art, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << artifact_to_json(art).dump(1) << "\n";
}

DesignArtifact read_artifact(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ArtifactError("artifact is not valid JSON: " + std::string(e.what()));
    }
    return artifact_from_json(j);
}

}  // namespace gkp_polar
