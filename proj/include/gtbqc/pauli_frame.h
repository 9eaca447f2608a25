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
#include <span>
#include <string>
#include <vector>

#include "gtbqc/linalg.h"

namespace gtbqc {

/// Two-qubit Pauli operator phase * (first (x) second), phase = i^k.
struct PauliPair {
    Pauli first = Pauli::I;
    Pauli second = Pauli::I;
    uint8_t phase_exponent = 0;

    static PauliPair from_ops(const PauliOp &a, const PauliOp &b);
    /// All 16 unphased pairs, first label major.
    static std::vector<PauliPair> all();

    Complex phase() const;
    Unitary4 unitary() const;
    PauliPair operator*(const PauliPair &other) const;
    bool operator==(const PauliPair &other) const = default;
    std::string str() const;
};

/// Per-qubit Pauli correction. The identity frame is all-I.
class PauliFrame {
   public:
    explicit PauliFrame(size_t num_qubits = 0) : entries_(num_qubits) {
    }

    size_t size() const {
        return entries_.size();
    }
    const PauliOp &operator[](size_t q) const {
        return entries_.at(q);
    }
    PauliOp &operator[](size_t q) {
        return entries_.at(q);
    }
    /// entry(q) <- p * entry(q).
    void apply_left(size_t q, const PauliOp &p) {
        entries_.at(q) = p * entries_.at(q);
    }
    /// Conjugates the (a, b) entries through CZ.
    void push_through_cz(size_t a, size_t b);
    bool is_identity() const;

   private:
    std::vector<PauliOp> entries_;
};

/// q with CZ p = q CZ, phases exact.
PauliPair push_through_cz(const PauliPair &p);

// Two-qubit commutation -------------------------------------------------------

/// W (in) = phase * (out) W, indices into the element set.
struct TwoQubitWitness {
    size_t in_first, in_second;
    size_t out_first, out_second;
    Complex phase;
};

struct TwoQubitClosureReport {
    bool holds = false;
    std::vector<TwoQubitWitness> witnesses;
    /// First (first, second) input pair with no image, when !holds.
    std::optional<std::pair<size_t, size_t>> counterexample;
};

/// Exhaustive check of W (E (x) E) subset-of (E (x) E) W up to phase for a
/// finite element set E.
TwoQubitClosureReport check_two_qubit_closure(const Unitary4 &w, std::span<const Unitary2> elements);

/// The same check over E = {I, X, Y, Z}; witness indices are Pauli labels.
TwoQubitClosureReport check_two_qubit_commutation(const Unitary4 &w);

// One-qubit commutation -------------------------------------------------------

/// v_set[v] sigma = phase * sigma' v_set[v_prime].
struct OneQubitWitness {
    size_t v;
    Pauli sigma;
    size_t v_prime;
    Pauli sigma_prime;
    Complex phase;
};

struct OneQubitCommutationReport {
    bool holds = false;
    /// Indexed v * 4 + sigma when holds.
    std::vector<OneQubitWitness> witnesses;
    std::optional<std::pair<size_t, Pauli>> counterexample;

    const OneQubitWitness &lookup(size_t v, Pauli sigma) const {
        return witnesses.at(v * 4 + (size_t)sigma);
    }
};

OneQubitCommutationReport check_one_qubit_commutation(std::span<const Unitary2> v_set);

// Rotations -----------------------------------------------------------------

enum class Axis { Z, X };

struct RotationCommutation {
    PauliOp sigma;
    double theta;
};

/// rot(axis, theta) sigma = sigma rot(axis, theta'), theta' = +-theta.
RotationCommutation rotation_commute(const PauliOp &sigma, double theta, Axis axis);

// Trap-free substitution table ------------------------------------------------

/// U[u_prime] V sigma = phase * sigma' U[i], with V = v_set[v_index] the
/// element phase-equal to U[j]^dagger U[i].
struct SubstitutionEntry {
    size_t v_index;
    size_t u_prime;
    Pauli sigma_prime;
    Complex phase;
};

class SubstitutionTable {
   public:
    SubstitutionTable() = default;
    SubstitutionTable(size_t num_u, std::vector<SubstitutionEntry> entries)
        : num_u_(num_u), entries_(std::move(entries)) {
    }

    size_t num_u() const {
        return num_u_;
    }
    /// Entry for intended gate i, random choice j, combined by-product sigma.
    const SubstitutionEntry &lookup(size_t i, size_t j, Pauli sigma) const {
        return entries_.at((i * num_u_ + j) * 4 + (size_t)sigma);
    }
    const std::vector<SubstitutionEntry> &entries() const {
        return entries_;
    }

   private:
    size_t num_u_ = 0;
    std::vector<SubstitutionEntry> entries_;
};

/// Exhaustive search. For each (i, sigma) a single sigma' is used for all j,
/// preferring the Hadamard image of sigma, so j -> u' is injective. Throws
/// NoSolutionError naming the offending (U, sigma) when no sigma' works for
/// every j, or naming (i, j) when U_j^dagger U_i is not in v_set.
SubstitutionTable build_substitution_table(std::span<const Unitary2> u_set, std::span<const Unitary2> v_set);

}  // namespace gtbqc
