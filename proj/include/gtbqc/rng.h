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

#include <cstddef>
#include <cstdint>
#include <random>

namespace gtbqc {

/// splitmix64 finalizer. Used to derive independent substream seeds.
uint64_t mix_seed(uint64_t seed, uint64_t index);

/// Seeded random stream.
///
/// Draws use only the raw 64-bit engine output; a seed gives the same
/// sequence on every standard library. Not thread-safe.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    /// Independent stream for (seed, index), e.g. per shot or per party.
    static Rng substream(uint64_t seed, uint64_t index);

    uint64_t next_u64();
    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform();
    /// Standard normal (Box-Muller, spare value cached).
    double normal();
    /// Uniform in {0, ..., n-1}. Requires n > 0.
    size_t uniform_index(size_t n);
    bool bernoulli(double p);

   private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0;
    bool has_spare_ = false;
};

}  // namespace gtbqc
