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

#include "gtbqc/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gtbqc {

uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng::Rng(uint64_t seed) : engine_(mix_seed(seed, 0)) {
}

Rng Rng::substream(uint64_t seed, uint64_t index) {
    return Rng(mix_seed(seed, index + 1));
}

uint64_t Rng::next_u64() {
    return engine_();
}

double Rng::uniform() {
    return (double)(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0);
    double u2 = uniform();
    double r = std::sqrt(-2 * std::log(u1));
    double a = 2 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

size_t Rng::uniform_index(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    // Rejection sampling removes modulo bias.
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return (size_t)(x % n);
}

bool Rng::bernoulli(double p) {
    return uniform() < p;
}

}  // namespace gtbqc
