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
#include <span>
#include <vector>

#include "gtbqc/linalg.h"

namespace gtbqc {

/// Pure state of n qubits.
///
/// Qubit 0 is the most significant bit of the basis index, so |q0 q1 ...>
/// reads left to right and kron(A, B) applied to (a, b) acts with A on a.
class StateVector {
   public:
    static constexpr size_t kDefaultMaxQubits = 16;

    /// |0...0> on num_qubits qubits.
    explicit StateVector(size_t num_qubits = 0, size_t max_qubits = kDefaultMaxQubits);

    /// Validates length 2^n and unit norm (within kEqualityTol).
    static StateVector from_amplitudes(std::vector<Complex> amplitudes, size_t max_qubits = kDefaultMaxQubits);
    /// Same, but rescales a nonzero vector to unit norm first.
    static StateVector normalized(std::vector<Complex> amplitudes, size_t max_qubits = kDefaultMaxQubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t max_qubits() const {
        return max_qubits_;
    }
    size_t dimension() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex amplitude(size_t index) const {
        return amplitudes_[index];
    }
    double norm() const;

    void apply_1q(size_t qubit, const Unitary2 &u);
    /// Applies w with its first tensor factor on pair.first.
    void apply_2q(size_t first, size_t second, const Unitary4 &w);

    /// this (x) other; other's qubits are appended after this state's.
    StateVector tensor(const StateVector &other) const;

    /// Moves qubit `from` to position `to`, shifting the qubits in between.
    void move_qubit(size_t from, size_t to);

    /// <bra|_{qubits} |this>: amplitudes over the remaining qubits (in
    /// ascending order), unnormalized. bra has length 2^qubits.size() and is
    /// indexed with qubits[0] as the most significant bit.
    std::vector<Complex> contract(std::span<const size_t> qubits, std::span<const Complex> bra) const;

    /// Applies an arbitrary (not necessarily unitary) matrix on `qubits`.
    void apply_matrix(std::span<const size_t> qubits, const MatX &m);
    void renormalize();

   private:
    size_t bit(size_t qubit) const {
        return num_qubits_ - 1 - qubit;
    }
    void check_qubit(size_t qubit) const;

    size_t num_qubits_;
    size_t max_qubits_;
    std::vector<Complex> amplitudes_;
};

/// |Phi_V> = (1 (x) V)|Phi+>.
StateVector prepare_phi_v(const Unitary2 &v);

StateVector apply_1q(StateVector s, size_t qubit, const Unitary2 &u);
StateVector apply_2q(StateVector s, size_t first, size_t second, const Unitary4 &w);

enum class MeasuredQubits { kRemove, kKeep };

/// Bell state associated with a by-product label:
/// I -> Phi+, X -> Psi+, Y -> Psi-, Z -> Phi-. Equal to (1 (x) sigma)|Phi+>
/// up to phase, which makes the teleported qubit carry V sigma |psi>.
std::array<Complex, 4> bell_state(Pauli label);

struct BellOutcome {
    Pauli sigma;
    double probability;
    StateVector state;
};

/// Projective Bell-basis measurement on (q1, q2) with Born sampling.
BellOutcome bell_measure(const StateVector &s, size_t q1, size_t q2, Rng &rng,
                         MeasuredQubits mode = MeasuredQubits::kRemove);

/// Orthonormal single-site basis.
class MeasurementBasis {
   public:
    /// Throws ValueError if the vectors are not orthonormal within
    /// kEqualityTol or do not share one dimension.
    explicit MeasurementBasis(std::vector<VecX> outcomes);

    static MeasurementBasis computational(size_t dim = 2);
    /// {|theta+->} with |theta+-> = (|0> +- e^{i theta}|1>)/sqrt(2).
    static MeasurementBasis theta(double theta);

    size_t dimension() const {
        return (size_t)outcomes_.front().size();
    }
    size_t size() const {
        return outcomes_.size();
    }
    const VecX &outcome(size_t k) const {
        return outcomes_[k];
    }
    const std::vector<VecX> &outcomes() const {
        return outcomes_;
    }

   private:
    std::vector<VecX> outcomes_;
};

struct BasisOutcome {
    size_t outcome;
    double probability;
    StateVector state;
};

/// Born-rule measurement of one qubit; the qubit is left in the outcome
/// state (kKeep) or removed (kRemove).
BasisOutcome measure_basis(const StateVector &s, size_t qubit, const MeasurementBasis &basis, Rng &rng,
                           MeasuredQubits mode = MeasuredQubits::kKeep);

/// Outcome probabilities of measure_basis without sampling.
std::vector<double> basis_probabilities(const StateVector &s, size_t qubit, const MeasurementBasis &basis);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
   public:
    /// Validates the invariants (tolerance kEqualityTol, eigenvalue floor
    /// -kEqualityTol).
    explicit DensityMatrix(MatX entries);

    const MatX &matrix() const {
        return entries_;
    }
    size_t dimension() const {
        return (size_t)entries_.rows();
    }

   private:
    MatX entries_;
};

/// Partial trace keeping `keep` (nonempty); kept qubits appear in the given
/// order.
DensityMatrix reduced_density(const StateVector &s, std::span<const size_t> keep);

/// |<a|b>|^2.
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);

/// (1/2) sum |eigenvalues(a - b)|.
double trace_distance(const MatX &a, const MatX &b);

}  // namespace gtbqc
