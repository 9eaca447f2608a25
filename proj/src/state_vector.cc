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

#include "gtbqc/state_vector.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtbqc/rng.h"

namespace gtbqc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

size_t sample_index(std::span<const double> probabilities, Rng &rng) {
    double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    double u = rng.uniform() * total;
    size_t last_nonzero = 0;
    for (size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] <= 0) {
            continue;
        }
        last_nonzero = k;
        if (u < probabilities[k]) {
            return k;
        }
        u -= probabilities[k];
    }
    return last_nonzero;
}

void check_distinct(std::span<const size_t> qubits) {
    for (size_t a = 0; a < qubits.size(); a++) {
        for (size_t b = a + 1; b < qubits.size(); b++) {
            if (qubits[a] == qubits[b]) {
                throw ValueError("duplicate qubit index " + std::to_string(qubits[a]));
            }
        }
    }
}

}  // namespace

StateVector::StateVector(size_t num_qubits, size_t max_qubits)
    : num_qubits_(num_qubits), max_qubits_(max_qubits) {
    if (num_qubits > max_qubits) {
        throw ValueError("state of " + std::to_string(num_qubits) + " qubits exceeds the maximum of " +
                         std::to_string(max_qubits));
    }
    amplitudes_.assign((size_t)1 << num_qubits, Complex(0));
    amplitudes_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes, size_t max_qubits) {
    size_t n = 0;
    while (((size_t)1 << n) < amplitudes.size()) {
        n++;
    }
    if (amplitudes.empty() || ((size_t)1 << n) != amplitudes.size()) {
        throw ValueError("amplitude count must be a power of two");
    }
    StateVector s(n, max_qubits);
    s.amplitudes_ = std::move(amplitudes);
    if (std::abs(s.norm() - 1) > kEqualityTol) {
        throw ValueError("amplitudes are not normalized");
    }
    return s;
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes, size_t max_qubits) {
    double n2 = 0;
    for (auto a : amplitudes) {
        n2 += std::norm(a);
    }
    if (n2 == 0) {
        throw ValueError("cannot normalize the zero vector");
    }
    double inv = 1 / std::sqrt(n2);
    for (auto &a : amplitudes) {
        a *= inv;
    }
    return from_amplitudes(std::move(amplitudes), max_qubits);
}

double StateVector::norm() const {
    double n2 = 0;
    for (auto a : amplitudes_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

void StateVector::check_qubit(size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw ValueError("qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits_) +
                         " qubits");
    }
}

void StateVector::apply_1q(size_t qubit, const Unitary2 &u) {
    check_qubit(qubit);
    size_t stride = (size_t)1 << bit(qubit);
    const auto &m = u.matrix();
    for (size_t base = 0; base < amplitudes_.size(); base++) {
        if (base & stride) {
            continue;
        }
        Complex a0 = amplitudes_[base];
        Complex a1 = amplitudes_[base | stride];
        amplitudes_[base] = m(0, 0) * a0 + m(0, 1) * a1;
        amplitudes_[base | stride] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

void StateVector::apply_2q(size_t first, size_t second, const Unitary4 &w) {
    size_t qubits[2] = {first, second};
    apply_matrix(qubits, MatX(w.matrix()));
}

void StateVector::apply_matrix(std::span<const size_t> qubits, const MatX &m) {
    for (size_t q : qubits) {
        check_qubit(q);
    }
    check_distinct(qubits);
    size_t k = qubits.size();
    size_t sub_dim = (size_t)1 << k;
    if ((size_t)m.rows() != sub_dim || (size_t)m.cols() != sub_dim) {
        throw ValueError("matrix dimension does not match the qubit count");
    }
    std::vector<size_t> offsets(sub_dim, 0);
    size_t mask = 0;
    for (size_t sub = 0; sub < sub_dim; sub++) {
        for (size_t t = 0; t < k; t++) {
            if ((sub >> (k - 1 - t)) & 1) {
                offsets[sub] |= (size_t)1 << bit(qubits[t]);
            }
        }
    }
    for (size_t t = 0; t < k; t++) {
        mask |= (size_t)1 << bit(qubits[t]);
    }
    std::vector<Complex> in(sub_dim);
    for (size_t base = 0; base < amplitudes_.size(); base++) {
        if (base & mask) {
            continue;
        }
        for (size_t s = 0; s < sub_dim; s++) {
            in[s] = amplitudes_[base | offsets[s]];
        }
        for (size_t r = 0; r < sub_dim; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < sub_dim; c++) {
                acc += m(r, c) * in[c];
            }
            amplitudes_[base | offsets[r]] = acc;
        }
    }
}

void StateVector::renormalize() {
    double n = norm();
    if (n == 0) {
        throw ValueError("cannot renormalize a zero state");
    }
    for (auto &a : amplitudes_) {
        a /= n;
    }
}

StateVector StateVector::tensor(const StateVector &other) const {
    StateVector out(num_qubits_ + other.num_qubits_, std::max(max_qubits_, other.max_qubits_));
    size_t db = other.amplitudes_.size();
    for (size_t i = 0; i < amplitudes_.size(); i++) {
        for (size_t j = 0; j < db; j++) {
            out.amplitudes_[i * db + j] = amplitudes_[i] * other.amplitudes_[j];
        }
    }
    return out;
}

void StateVector::move_qubit(size_t from, size_t to) {
    check_qubit(from);
    check_qubit(to);
    if (from == to) {
        return;
    }
    std::vector<size_t> order(num_qubits_);
    std::iota(order.begin(), order.end(), 0);
    order.erase(order.begin() + (std::ptrdiff_t)from);
    order.insert(order.begin() + (std::ptrdiff_t)to, from);
    // order[new_position] = old qubit.
    std::vector<Complex> out(amplitudes_.size());
    for (size_t idx = 0; idx < amplitudes_.size(); idx++) {
        size_t dst = 0;
        for (size_t p = 0; p < num_qubits_; p++) {
            size_t v = (idx >> bit(order[p])) & 1;
            dst |= v << bit(p);
        }
        out[dst] = amplitudes_[idx];
    }
    amplitudes_ = std::move(out);
}

std::vector<Complex> StateVector::contract(std::span<const size_t> qubits, std::span<const Complex> bra) const {
    for (size_t q : qubits) {
        check_qubit(q);
    }
    check_distinct(qubits);
    size_t k = qubits.size();
    if (bra.size() != ((size_t)1 << k)) {
        throw ValueError("contract: bra dimension does not match the qubit count");
    }
    std::vector<bool> measured(num_qubits_, false);
    for (size_t q : qubits) {
        measured[q] = true;
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < num_qubits_; q++) {
        if (!measured[q]) {
            rest.push_back(q);
        }
    }
    std::vector<Complex> out((size_t)1 << rest.size(), Complex(0));
    for (size_t idx = 0; idx < amplitudes_.size(); idx++) {
        if (amplitudes_[idx] == Complex(0)) {
            continue;
        }
        size_t sub = 0;
        for (size_t t = 0; t < k; t++) {
            sub = (sub << 1) | ((idx >> bit(qubits[t])) & 1);
        }
        size_t r = 0;
        for (size_t q : rest) {
            r = (r << 1) | ((idx >> bit(q)) & 1);
        }
        out[r] += std::conj(bra[sub]) * amplitudes_[idx];
    }
    return out;
}

StateVector prepare_phi_v(const Unitary2 &v) {
    std::vector<Complex> amps{kInvSqrt2, 0, 0, kInvSqrt2};
    auto s = StateVector::from_amplitudes(std::move(amps));
    s.apply_1q(1, v);
    return s;
}

StateVector apply_1q(StateVector s, size_t qubit, const Unitary2 &u) {
    s.apply_1q(qubit, u);
    return s;
}

StateVector apply_2q(StateVector s, size_t first, size_t second, const Unitary4 &w) {
    s.apply_2q(first, second, w);
    return s;
}

std::array<Complex, 4> bell_state(Pauli label) {
    constexpr double h = kInvSqrt2;
    switch (label) {
        case Pauli::I:
            return {h, 0, 0, h};
        case Pauli::X:
            return {0, h, h, 0};
        case Pauli::Y:
            return {0, h, -h, 0};
        case Pauli::Z:
            return {h, 0, 0, -h};
    }
    return {};
}

BellOutcome bell_measure(const StateVector &s, size_t q1, size_t q2, Rng &rng, MeasuredQubits mode) {
    if (q1 == q2) {
        throw ValueError("bell_measure: qubits must be distinct");
    }
    size_t qubits[2] = {q1, q2};
    std::array<std::vector<Complex>, 4> branches;
    std::array<double, 4> probabilities{};
    for (Pauli p : kAllPaulis) {
        auto bell = bell_state(p);
        branches[(int)p] = s.contract(qubits, bell);
        double p2 = 0;
        for (auto a : branches[(int)p]) {
            p2 += std::norm(a);
        }
        probabilities[(int)p] = p2;
    }
    auto k = sample_index(probabilities, rng);
    auto sigma = (Pauli)k;
    double prob = probabilities[k];
    if (prob <= 0) {
        throw ValueError("bell_measure: zero-probability branch");
    }
    if (mode == MeasuredQubits::kRemove) {
        return {sigma, prob, StateVector::normalized(std::move(branches[k]), s.max_qubits())};
    }
    auto bell = bell_state(sigma);
    Eigen::Vector4cd b(bell[0], bell[1], bell[2], bell[3]);
    StateVector kept = s;
    kept.apply_matrix(qubits, MatX(b * b.adjoint()));
    kept.renormalize();
    return {sigma, prob, std::move(kept)};
}

MeasurementBasis::MeasurementBasis(std::vector<VecX> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) {
        throw ValueError("measurement basis is empty");
    }
    auto dim = outcomes_.front().size();
    if (dim == 0) {
        throw ValueError("measurement basis vectors are empty");
    }
    for (size_t a = 0; a < outcomes_.size(); a++) {
        if (outcomes_[a].size() != dim) {
            throw ValueError("measurement basis vectors differ in dimension");
        }
        for (size_t b = a; b < outcomes_.size(); b++) {
            Complex ip = outcomes_[a].dot(outcomes_[b]);
            double expected = a == b ? 1 : 0;
            if (std::abs(ip - expected) > kEqualityTol) {
                throw ValueError("degenerate measurement basis: vectors are not orthonormal");
            }
        }
    }
}

MeasurementBasis MeasurementBasis::computational(size_t dim) {
    std::vector<VecX> out;
    for (size_t k = 0; k < dim; k++) {
        out.push_back(VecX::Unit((Eigen::Index)dim, (Eigen::Index)k));
    }
    return MeasurementBasis(std::move(out));
}

MeasurementBasis MeasurementBasis::theta(double theta) {
    if (!std::isfinite(theta)) {
        throw ValueError("measurement angle must be finite");
    }
    Complex e = std::exp(Complex(0, theta));
    VecX plus(2), minus(2);
    plus << kInvSqrt2, kInvSqrt2 * e;
    minus << kInvSqrt2, -kInvSqrt2 * e;
    return MeasurementBasis({plus, minus});
}

std::vector<double> basis_probabilities(const StateVector &s, size_t qubit, const MeasurementBasis &basis) {
    if (basis.dimension() != 2) {
        throw ValueError("state vectors hold qubits; basis dimension must be 2");
    }
    size_t qubits[1] = {qubit};
    std::vector<double> out;
    for (const auto &m : basis.outcomes()) {
        Complex bra[2] = {m(0), m(1)};
        double p = 0;
        for (auto a : s.contract(qubits, bra)) {
            p += std::norm(a);
        }
        out.push_back(p);
    }
    return out;
}

BasisOutcome measure_basis(const StateVector &s, size_t qubit, const MeasurementBasis &basis, Rng &rng,
                           MeasuredQubits mode) {
    auto probabilities = basis_probabilities(s, qubit, basis);
    size_t k = sample_index(probabilities, rng);
    const auto &m = basis.outcome(k);
    size_t qubits[1] = {qubit};
    if (mode == MeasuredQubits::kRemove) {
        Complex bra[2] = {m(0), m(1)};
        return {k, probabilities[k], StateVector::normalized(s.contract(qubits, bra), s.max_qubits())};
    }
    StateVector kept = s;
    kept.apply_matrix(qubits, MatX(m * m.adjoint()));
    kept.renormalize();
    return {k, probabilities[k], std::move(kept)};
}

DensityMatrix::DensityMatrix(MatX entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
        throw ValueError("density matrix must be square and nonempty");
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kEqualityTol) {
        throw ValueError("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace() - Complex(1)) > kEqualityTol) {
        throw ValueError("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<MatX> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kEqualityTol) {
        throw ValueError("density matrix is not positive semidefinite");
    }
}

DensityMatrix reduced_density(const StateVector &s, std::span<const size_t> keep) {
    if (keep.empty()) {
        throw ValueError("reduced_density: keep set is empty");
    }
    check_distinct(keep);
    size_t n = s.num_qubits();
    std::vector<bool> kept(n, false);
    for (size_t q : keep) {
        if (q >= n) {
            throw ValueError("reduced_density: qubit index out of range");
        }
        kept[q] = true;
    }
    size_t k = keep.size();
    MatX psi = MatX::Zero((Eigen::Index)1 << k, (Eigen::Index)1 << (n - k));
    for (size_t idx = 0; idx < s.dimension(); idx++) {
        size_t a = 0;
        for (size_t q : keep) {
            a = (a << 1) | ((idx >> (n - 1 - q)) & 1);
        }
        size_t r = 0;
        for (size_t q = 0; q < n; q++) {
            if (!kept[q]) {
                r = (r << 1) | ((idx >> (n - 1 - q)) & 1);
            }
        }
        psi((Eigen::Index)a, (Eigen::Index)r) = s.amplitude(idx);
    }
    MatX rho = psi * psi.adjoint();
    // Symmetrize away rounding so the Hermitian check is exact.
    rho = (rho + rho.adjoint()) * 0.5;
    return DensityMatrix(std::move(rho));
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ValueError("fidelity: qubit counts differ");
    }
    Complex ip = 0;
    for (size_t k = 0; k < a.dimension(); k++) {
        ip += std::conj(a.amplitude(k)) * b.amplitude(k);
    }
    return std::min(1.0, std::norm(ip));
}

double trace_distance(const MatX &a, const MatX &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValueError("trace_distance: dimension mismatch");
    }
    MatX d = a - b;
    d = (d + d.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<MatX> solver(d, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace gtbqc
