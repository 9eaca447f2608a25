// Copyright 2026 The gtbqc Authors
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


#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gtbqc {

/// Worker count for `jobs` independent jobs; 0 requests one per core.
inline size_t worker_count(size_t requested, size_t jobs) {
    size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return std::max<size_t>(1, std::min(n, jobs));
}

/// Calls fn(k) for k in [0, n) across workers. fn must only write state owned
/// by job k; the first exception (by worker) is rethrown after joining.
template <typename Fn>
void parallel_for(size_t n, size_t workers, Fn fn) {
    workers = worker_count(workers, n);
    if (workers == 1) {
        for (size_t k = 0; k < n; k++) {
            fn(k);
        }
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; w++) {
        threads.emplace_back([&, w] {
            try {
                for (size_t k = w; k < n; k += workers) {
                    fn(k);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace gtbqc
