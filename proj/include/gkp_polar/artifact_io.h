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


// JSON form of DesignArtifact:
//   meta {d, sigma, n, alpha, m_samples, seed, c_e, beta, tool_version},
//   z1, z2, sets {I, A, P, E} (1-based), rate_bits_per_mode, pe1_bound, pe2_bound.

#ifndef GKP_POLAR_ARTIFACT_IO_H
#define GKP_POLAR_ARTIFACT_IO_H

#include <stdexcept>
#include <string>

#include "gkp_polar/code_design.h"
#include "json.hpp"

namespace gkp_polar {

/// Malformed artifact; the message names the offending key.
struct ArtifactError : std::runtime_error {
    explicit ArtifactError(const std::string &what) : std::runtime_error(what) {
    }
};

nlohmann::json artifact_to_json(const DesignArtifact &art);
DesignArtifact artifact_from_json(const nlohmann::json &j);

void write_artifact(const DesignArtifact &art, const std::string &path);
DesignArtifact read_artifact(const std::string &path);

}  // namespace gkp_polar

#endif
