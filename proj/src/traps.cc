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


#include "gtbqc/traps.h"

#include <algorithm>
#include <cmath>

#include "gtbqc/errors.h"

namespace gtbqc {

namespace {

constexpr double kDeterministicTol = 1e-10;

std::optional<int> deterministic_bit(const StateVector &s) {
    double p0 = std::norm(s.amplitude(0));
    if (p0 >= 1 - kDeterministicTol) {
        return 0;
    }
    if (p0 <= kDeterministicTol) {
        return 1;
    }
    return std::nullopt;
}

}  // namespace

Json TrapLedger::to_json() const {
    Json out = Json::array();
    for (const auto &t : traps) {
        out.push_back(Json{{"qubit", t.qubit},
                           {"predicted_bit", t.predicted_bit.has_value() ? Json(*t.predicted_bit) : Json()}});
    }
    return out;
}

TrapPlacement insert_traps(const CircuitProgram &program, double density, const std::vector<Unitary2> &gate_set,
                           Rng &rng) {
    if (!(density >= 0 && density <= 1)) {
        throw ValueError("trap density must lie in [0, 1]");
    }
    std::vector<size_t> clifford;
    for (size_t k = 0; k < gate_set.size(); k++) {
        if (clifford_index(gate_set[k]).has_value()) {
            clifford.push_back(k);
        }
    }
    size_t n = program.num_qubits;
    std::vector<bool> is_trap(n, false);
    for (size_t q : program.trap_marked_qubits()) {
        is_trap[q] = true;
    }
    std::vector<size_t> free;
    for (size_t q = 0; q < n; q++) {
        if (!is_trap[q]) {
            free.push_back(q);
        }
    }
    auto extra = std::min(free.size(), (size_t)std::llround(density * (double)n));
    for (size_t k = 0; k < extra; k++) {
        size_t pick = k + rng.uniform_index(free.size() - k);
        std::swap(free[k], free[pick]);
        is_trap[free[k]] = true;
    }

    TrapPlacement out{program, {}};
    if (std::none_of(is_trap.begin(), is_trap.end(), [](bool b) { return b; })) {
        return out;
    }
    if (clifford.empty()) {
        throw ConfigError("gate set has no Clifford element to build traps from");
    }
    size_t layers = program.layers.size();
    size_t tail = std::min<size_t>(layers, 3);
    for (size_t q = 0; q < n; q++) {
        if (!is_trap[q]) {
            continue;
        }
        StateVector s(1);
        for (size_t l = 0; l + tail < layers; l++) {
            size_t g = clifford[rng.uniform_index(clifford.size())];
            out.program.layers[l].gates[q] = GateRequest::of_index(g);
            s.apply_1q(0, gate_set[g]);
        }
        size_t combos = 1;
        for (size_t k = 0; k < tail; k++) {
            combos *= clifford.size();
        }
        std::vector<size_t> good;
        for (size_t c = 0; c < combos; c++) {
            StateVector t = s;
            for (size_t k = 0, code = c; k < tail; k++, code /= clifford.size()) {
                t.apply_1q(0, gate_set[clifford[code % clifford.size()]]);
            }
            if (deterministic_bit(t).has_value()) {
                good.push_back(c);
            }
        }
        size_t chosen = good.empty() ? rng.uniform_index(combos) : good[rng.uniform_index(good.size())];
        for (size_t k = 0, code = chosen; k < tail; k++, code /= clifford.size()) {
            size_t g = clifford[code % clifford.size()];
            out.program.layers[layers - tail + k].gates[q] = GateRequest::of_index(g);
            s.apply_1q(0, gate_set[g]);
        }
        out.ledger.traps.push_back({q, deterministic_bit(s)});
    }
    for (size_t l = 0; l < layers; l++) {
        auto pairs = brickwork_pairs(l, n);
        for (size_t k = 0; k < pairs.size(); k++) {
            if (is_trap[pairs[k].first] || is_trap[pairs[k].second]) {
                out.program.layers[l].entangle[k] = false;
            }
        }
    }
    return out;
}

Json TrapReport::to_json() const {
    Json traps = Json::array();
    for (const auto &o : outcomes) {
        const char *status = o.status == TrapOutcome::Status::kPass   ? "pass"
                             : o.status == TrapOutcome::Status::kFail ? "fail"
                                                                      : "unchecked";
        traps.push_back(Json{{"qubit", o.qubit}, {"status", status}});
    }
    return Json{{"traps", traps}, {"detected", detected}};
}

TrapReport check_traps(const Transcript &transcript, const TrapLedger &ledger) {
    const Json &outcome = transcript.outcome();
    if (!outcome.contains("decoded_bits") || !outcome["decoded_bits"].is_array()) {
        throw ValueError("ledger/transcript mismatch: transcript has no decoded output");
    }
    auto bits = outcome["decoded_bits"].get<std::vector<int>>();
    TrapReport report;
    for (const auto &t : ledger.traps) {
        if (t.qubit >= bits.size()) {
            throw ValueError("ledger/transcript mismatch: trap qubit " + std::to_string(t.qubit) +
                             " not in the output");
        }
        auto status = TrapOutcome::Status::kUnchecked;
        if (t.predicted_bit.has_value()) {
            status = bits[t.qubit] == *t.predicted_bit ? TrapOutcome::Status::kPass : TrapOutcome::Status::kFail;
        }
        report.detected |= status == TrapOutcome::Status::kFail;
        report.outcomes.push_back({t.qubit, status});
    }
    return report;
}

Json DetectionEstimate::to_json() const {
    return Json{{"runs", runs},         {"detected", detected}, {"rate", rate},
                {"ci95", {ci_low, ci_high}}, {"mean_fidelity", mean_fidelity}};
}

std::pair<double, double> wilson_interval(size_t successes, size_t trials) {
    if (trials == 0) {
        return {0, 1};
    }
    constexpr double z = 1.959963984540054;
    double n = (double)trials;
    double p = (double)successes / n;
    double denom = 1 + z * z / n;
    double centre = (p + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

DetectionEstimate estimate_detection(Variant variant, const CircuitProgram &program, double density,
                                     const RunOptions &options, size_t runs, uint64_t seed) {
    auto gate_set = options.gate_set.empty() ? default_gate_set(variant) : options.gate_set;
    DetectionEstimate est;
    double fidelity_sum = 0;
    for (size_t r = 0; r < runs; r++) {
        uint64_t run_seed = mix_seed(seed, r);
        Rng placement_rng = Rng::substream(run_seed, 2);
        auto placement = insert_traps(program, density, gate_set, placement_rng);
        auto result = run_variant(variant, placement.program, run_seed, options);
        if (check_traps(result.transcript, placement.ledger).detected) {
            est.detected++;
        }
        fidelity_sum += result.fidelity;
    }
    est.runs = runs;
    est.rate = runs ? (double)est.detected / (double)runs : 0;
    std::tie(est.ci_low, est.ci_high) = wilson_interval(est.detected, runs);
    est.mean_fidelity = runs ? fidelity_sum / (double)runs : 0;
    return est;
}

}  // namespace gtbqc
