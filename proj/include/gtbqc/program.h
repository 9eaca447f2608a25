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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtbqc/json_io.h"
#include "gtbqc/linalg.h"
#include "gtbqc/rng.h"
#include "gtbqc/state_vector.h"

namespace gtbqc {

enum class Variant { kStochastic, kClifford, kHaar, kTrapFree };

std::string variant_name(Variant v);
/// Accepts "stochastic", "clifford", "haar", "trapfree"; ConfigError otherwise.
Variant parse_variant(const std::string &name);

/// Public single-qubit gate set of a variant.
///
/// stochastic, clifford, haar: {H, H Z(pi/4), H Z(-pi/4)}.
/// trapfree: U_i = H Z(pi i / 4), 0 <= i < 8.
std::vector<Unitary2> default_gate_set(Variant v);

/// S = X(-pi/4), the entangling choice of every 2q slot.
Unitary2 entangler();
/// R(U) = CZ^dagger (1 (x) U) CZ.
Unitary4 r_gate(const Unitary2 &u);

struct GateRequest {
    enum class Kind { kIndex, kMatrix, kTrap };
    Kind kind = Kind::kIndex;
    size_t index = 0;
    Unitary2 matrix;

    static GateRequest of_index(size_t i) {
        return {Kind::kIndex, i, Unitary2()};
    }
    static GateRequest of_matrix(const Unitary2 &u) {
        return {Kind::kMatrix, 0, u};
    }
    static GateRequest trap() {
        return {Kind::kTrap, 0, Unitary2()};
    }
};

struct Layer {
    /// One request per qubit.
    std::vector<GateRequest> gates;
    /// One choice per brickwork pair of this layer; true selects S.
    std::vector<bool> entangle;
};

/// Brickwork pairs of 0-based layer l: even l pairs (0,1),(2,3),...; odd l
/// pairs (1,2),(3,4),....
std::vector<std::pair<size_t, size_t>> brickwork_pairs(size_t layer, size_t num_qubits);

struct CircuitProgram {
    size_t num_qubits = 0;
    std::vector<Layer> layers;

    /// Shape checks: request and pair counts, index ranges. ValueError.
    void validate(size_t gate_set_size) const;
    /// Qubits carrying a trap marker anywhere in the program.
    std::vector<size_t> trap_marked_qubits() const;
};

/// "gtbqc-program/1" documents. Gates are integers, {"matrix": [[...]]} or
/// "trap"; ParseError on malformed input.
CircuitProgram program_from_json(const Json &j);
Json program_to_json(const CircuitProgram &p);

/// Uniform gate indices and fair-coin entangle choices.
CircuitProgram random_program(size_t num_qubits, size_t num_layers, size_t gate_set_size, Rng &rng);

/// Matrix of one request; ValueError for trap markers or bad indices.
Unitary2 resolve_gate(const GateRequest &g, const std::vector<Unitary2> &gate_set);

/// Intended circuit applied to |0...0>: each layer's gates, then R(S) on the
/// pairs whose choice is S.
StateVector direct_simulate(const CircuitProgram &p, const std::vector<Unitary2> &gate_set);

}  // namespace gtbqc
