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


#include "gkp_polar/parallel.h"

#include <cstdlib>
#include <string>

namespace gkp_polar {

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("GKP_POLAR_WORKERS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception &) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial, uint32_t stream, uint32_t tag) {
    std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)trial, (uint32_t)(trial >> 32), stream, tag};
    return std::mt19937_64(seq);
}

}  // namespace gkp_polar
