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
#include <vector>

#include "gtbqc/program.h"
#include "gtbqc/protocols.h"

namespace gtbqc {

struct TrapRecord {
    size_t qubit;
    /// Ideal computational-basis outcome; nullopt when the trap's final state
    /// is not a basis state.
    std::optional<int> predicted_bit;
};

struct TrapLedger {
    std::vector<TrapRecord> traps;

    Json to_json() const;
};

struct TrapPlacement {
    CircuitProgram program;
    TrapLedger ledger;
};

/// Marks round(density * num_qubits) random qubits as traps, in addition to
/// qubits carrying trap markers. Trap qubits get gates from the Clifford
/// subset of gate_set, with the last (up to three) gates chosen so the trap
/// ends in a basis state when possible, and identity on all their 2q slots.
/// ValueError for density outside [0, 1]; ConfigError when gate_set has no
/// Clifford element.
TrapPlacement insert_traps(const CircuitProgram &program, double density, const std::vector<Unitary2> &gate_set,
                           Rng &rng);

struct TrapOutcome {
    size_t qubit;
    enum class Status { kPass, kFail, kUnchecked } status;
};

struct TrapReport {
    std::vector<TrapOutcome> outcomes;
    bool detected = false;

    Json to_json() const;
};

/// Compares the transcript's decoded output bits against the ledger.
/// ValueError on a ledger/transcript mismatch.
TrapReport check_traps(const Transcript &transcript, const TrapLedger &ledger);

struct DetectionEstimate {
    size_t runs = 0;
    size_t detected = 0;
    double rate = 0;
    /// Wilson 95% interval.
    double ci_low = 0;
    double ci_high = 0;
    double mean_fidelity = 0;

    Json to_json() const;
};

/// Wilson score interval at 95% confidence.
std::pair<double, double> wilson_interval(size_t successes, size_t trials);

/// Monte-Carlo detection rate: each run draws a fresh trap placement and
/// protocol seed from (seed, run).
DetectionEstimate estimate_detection(Variant variant, const CircuitProgram &program, double density,
                                     const RunOptions &options, size_t runs, uint64_t seed);

}  // namespace gtbqc
