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

#include "gtbqc/pauli_frame.h"

#include <sstream>

namespace gtbqc {

PauliPair PauliPair::from_ops(const PauliOp &a, const PauliOp &b) {
    return PauliPair{a.label, b.label, (uint8_t)((a.phase_exponent + b.phase_exponent) & 3)};
}

std::vector<PauliPair> PauliPair::all() {
    std::vector<PauliPair> out;
    for (Pauli a : kAllPaulis) {
        for (Pauli b : kAllPaulis) {
            out.push_back(PauliPair{a, b, 0});
        }
    }
    return out;
}

Complex PauliPair::phase() const {
    return PauliOp(Pauli::I, phase_exponent).phase();
}

Unitary4 PauliPair::unitary() const {
    return kron(PauliOp(first, phase_exponent).unitary(), pauli_matrix(second));
}

PauliPair PauliPair::operator*(const PauliPair &other) const {
    PauliOp a = PauliOp(first) * PauliOp(other.first);
    PauliOp b = PauliOp(second) * PauliOp(other.second);
    PauliPair out = from_ops(a, b);
    out.phase_exponent = (out.phase_exponent + phase_exponent + other.phase_exponent) & 3;
    return out;
}

std::string PauliPair::str() const {
    std::string s = PauliOp(Pauli::I, phase_exponent).str();
    s.pop_back();
    return s + pauli_char(first) + pauli_char(second);
}

namespace {

// Images of single-factor Paulis under conjugation by CZ.
PauliPair cz_image_first(Pauli p) {
    switch (p) {
        case Pauli::X:
            return {Pauli::X, Pauli::Z, 0};
        case Pauli::Y:
            return {Pauli::Y, Pauli::Z, 0};
        default:
            return {p, Pauli::I, 0};
    }
}

PauliPair cz_image_second(Pauli p) {
    switch (p) {
        case Pauli::X:
            return {Pauli::Z, Pauli::X, 0};
        case Pauli::Y:
            return {Pauli::Z, Pauli::Y, 0};
        default:
            return {Pauli::I, p, 0};
    }
}

}  // namespace

PauliPair push_through_cz(const PauliPair &p) {
    // p = phase (a (x) I)(I (x) b) and conjugation is a homomorphism.
    PauliPair out = cz_image_first(p.first) * cz_image_second(p.second);
    out.phase_exponent = (out.phase_exponent + p.phase_exponent) & 3;
    return out;
}

void PauliFrame::push_through_cz(size_t a, size_t b) {
    PauliPair in = PauliPair::from_ops(entries_.at(a), entries_.at(b));
    PauliPair out = gtbqc::push_through_cz(in);
    entries_[a] = PauliOp(out.first, out.phase_exponent);
    entries_[b] = PauliOp(out.second);
}

bool PauliFrame::is_identity() const {
    for (const auto &e : entries_) {
        if (e.label != Pauli::I) {
            return false;
        }
    }
    return true;
}

TwoQubitClosureReport check_two_qubit_closure(const Unitary4 &w, std::span<const Unitary2> elements) {
    TwoQubitClosureReport report;
    size_t n = elements.size();
    std::vector<MatX> products(n * n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            products[a * n + b] = kron(elements[a], elements[b]).matrix();
        }
    }
    const MatX wm = w.matrix();
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            MatX lhs = wm * products[a * n + b];
            bool found = false;
            for (size_t c = 0; c < n && !found; c++) {
                for (size_t d = 0; d < n && !found; d++) {
                    auto phase = relative_phase(lhs, products[c * n + d] * wm);
                    if (phase.has_value()) {
                        report.witnesses.push_back({a, b, c, d, *phase});
                        found = true;
                    }
                }
            }
            if (!found) {
                report.holds = false;
                report.counterexample = std::make_pair(a, b);
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

TwoQubitClosureReport check_two_qubit_commutation(const Unitary4 &w) {
    std::vector<Unitary2> paulis;
    for (Pauli p : kAllPaulis) {
        paulis.push_back(pauli_matrix(p));
    }
    return check_two_qubit_closure(w, paulis);
}

OneQubitCommutationReport check_one_qubit_commutation(std::span<const Unitary2> v_set) {
    OneQubitCommutationReport report;
    for (size_t v = 0; v < v_set.size(); v++) {
        for (Pauli sigma : kAllPaulis) {
            MatX lhs = v_set[v].matrix() * pauli_matrix(sigma).matrix();
            bool found = false;
            for (size_t w = 0; w < v_set.size() && !found; w++) {
                for (Pauli sp : kAllPaulis) {
                    auto phase = relative_phase(lhs, MatX(pauli_matrix(sp).matrix() * v_set[w].matrix()));
                    if (phase.has_value()) {
                        report.witnesses.push_back({v, sigma, w, sp, *phase});
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                report.holds = false;
                report.witnesses.clear();
                report.counterexample = std::make_pair(v, sigma);
                return report;
            }
        }
    }
    report.holds = true;
    return report;
}

RotationCommutation rotation_commute(const PauliOp &sigma, double theta, Axis axis) {
    Pauli same = axis == Axis::Z ? Pauli::Z : Pauli::X;
    bool commutes = sigma.label == Pauli::I || sigma.label == same;
    return {sigma, commutes ? theta : -theta};
}

namespace {

// Hadamard image of sigma first, then the remaining labels in order.
std::vector<Pauli> sigma_prime_preference(Pauli sigma) {
    static constexpr Pauli kHadamardImage[4] = {Pauli::I, Pauli::Z, Pauli::Y, Pauli::X};
    std::vector<Pauli> out{kHadamardImage[(size_t)sigma]};
    for (Pauli p : kAllPaulis) {
        if (p != out.front()) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

SubstitutionTable build_substitution_table(std::span<const Unitary2> u_set, std::span<const Unitary2> v_set) {
    if (u_set.empty() || v_set.empty()) {
        throw ValueError("build_substitution_table: sets must be nonempty");
    }
    size_t n = u_set.size();
    std::vector<size_t> v_index(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            Unitary2 wanted = u_set[j].adjoint() * u_set[i];
            bool found = false;
            for (size_t k = 0; k < v_set.size() && !found; k++) {
                if (phase_equal(v_set[k], wanted)) {
                    v_index[i * n + j] = k;
                    found = true;
                }
            }
            if (!found) {
                std::stringstream msg;
                msg << "no V in the set equals U_" << j << "^dagger U_" << i << " = "
                    << format_matrix(wanted.matrix());
                throw NoSolutionError(msg.str());
            }
        }
    }
    // One sigma' per (i, sigma) for every j keeps j -> u' injective.
    std::vector<SubstitutionEntry> entries(n * n * 4);
    for (size_t i = 0; i < n; i++) {
        for (Pauli sigma : kAllPaulis) {
            bool solved = false;
            for (Pauli sp : sigma_prime_preference(sigma)) {
                MatX rhs = pauli_matrix(sp).matrix() * u_set[i].matrix();
                std::vector<SubstitutionEntry> column;
                for (size_t j = 0; j < n; j++) {
                    MatX tail = v_set[v_index[i * n + j]].matrix() * pauli_matrix(sigma).matrix();
                    for (size_t up = 0; up < n; up++) {
                        auto phase = relative_phase(MatX(u_set[up].matrix() * tail), rhs);
                        if (phase.has_value()) {
                            column.push_back({v_index[i * n + j], up, sp, *phase});
                            break;
                        }
                    }
                    if (column.size() != j + 1) {
                        break;
                    }
                }
                if (column.size() == n) {
                    for (size_t j = 0; j < n; j++) {
                        entries[(i * n + j) * 4 + (size_t)sigma] = column[j];
                    }
                    solved = true;
                    break;
                }
            }
            if (!solved) {
                std::stringstream msg;
                msg << "no U' and sigma' solve U' V sigma = sigma' U for every j with U = U_" << i << " "
                    << format_matrix(u_set[i].matrix()) << ", sigma = " << pauli_char(sigma);
                throw NoSolutionError(msg.str());
            }
        }
    }
    return SubstitutionTable(n, std::move(entries));
}

}  // namespace gtbqc
