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


// Deterministic block-parallel execution. Work is cut into fixed-size blocks
// whose results are reduced in a fixed order, so outputs never depend on the
// number of workers.

#ifndef GKP_POLAR_PARALLEL_H
#define GKP_POLAR_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

namespace gkp_polar {

/// requested > 0 wins; otherwise GKP_POLAR_WORKERS; otherwise hardware concurrency.
int resolve_workers(int requested);

/// Calls body(b) for b in [0, blocks) on up to `workers` threads.
template <class Body>
void parallel_blocks(size_t blocks, int workers, Body body) {
    size_t nthreads = std::max<size_t>(1, std::min<size_t>(blocks, (size_t)std::max(1, workers)));
    if (nthreads <= 1) {
        for (size_t b = 0; b < blocks; ++b) {
            body(b);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            try {
                for (size_t b = next++; b < blocks; b = next++) {
                    body(b);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = blocks;
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Independent generator for one trial of one stream.
std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial, uint32_t stream, uint32_t tag);

}  // namespace gkp_polar

#endif
