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

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gtbqc/program.h"
#include "gtbqc/server.h"
#include "gtbqc/transcript.h"

namespace gtbqc {

/// One trap-free round as seen by an audit observer.
struct TrapFreeRound {
    size_t qubit;
    size_t gate;
    Pauli frame;
    Pauli sigma_gt;
    size_t instruction;
};

struct RunOptions {
    /// Public 1q gate set; empty selects default_gate_set(variant).
    std::vector<Unitary2> gate_set;
    /// Trap-free pair unitaries; empty selects {Z(pi k / 4)}.
    std::vector<Unitary2> v_set;
    CheatModel cheat;
    /// Stochastic variant: GT attempts per delegated gate before abort.
    size_t max_attempts = 200;
    /// Send every pair before the first instruction (haar and trapfree).
    bool batch_pairs = false;

    /// Audit hooks, not used in ordinary runs.
    std::function<void(const TrapFreeRound &)> trapfree_observer;
    /// Trap-free: send Phi_V instead of Phi_{V tau} (negative control).
    bool omit_tau = false;
    /// Haar: fixed pair unitary instead of a Haar draw (negative control).
    std::optional<Unitary2> fixed_haar_v;
};

struct RunResult {
    Transcript transcript;
    /// Frame-decoded register before output measurement vs the intended
    /// circuit applied to |0...0>.
    double fidelity = 0;
    std::vector<int> raw_bits;
    std::vector<int> decoded_bits;
    size_t gt_rounds = 0;
    /// Stochastic variant: GT attempts of each delegated gate.
    std::vector<size_t> attempts;
};

/// Adaptive stochastic recurrence: the pair after a failed attempt with pair
/// unitary v and outcome sigma is v sigma v^dagger.
Unitary2 next_stochastic_v(const Unitary2 &v, Pauli sigma);

/// Applies R(U) on each pair by CZ, stochastic GT of U on the second qubit
/// and CZ. choices[k] selects S on pairs[k]. Returns the GT attempt count.
/// ValueError when a pair is not (a, a+1) or pairs overlap.
size_t place_two_qubit_layer(StateVector &reg, const std::vector<std::pair<size_t, size_t>> &pairs,
                             const std::vector<bool> &choices, Rng &rng, size_t max_attempts = 200);

/// Each run derives the client stream (seed, 0) and the server stream
/// (seed, 1). Programs must not contain trap markers.
RunResult run_stochastic(const CircuitProgram &program, uint64_t seed, const RunOptions &options = {});
RunResult run_nonstochastic_clifford(const CircuitProgram &program, uint64_t seed, const RunOptions &options = {});
RunResult run_haar_su2(const CircuitProgram &program, uint64_t seed, const RunOptions &options = {});
RunResult run_trap_free(const CircuitProgram &program, uint64_t seed, const RunOptions &options = {});

RunResult run_variant(Variant variant, const CircuitProgram &program, uint64_t seed, const RunOptions &options = {});

/// Trap-free pair unitaries Z(pi k / 4), 0 <= k < 8.
std::vector<Unitary2> default_trapfree_v_set();

}  // namespace gtbqc
