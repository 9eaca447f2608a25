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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtbqc/errors.h"

namespace gtbqc {

class Rng;

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

/// Entrywise tolerance for (projective) equality of gates and states.
inline constexpr double kEqualityTol = 1e-10;
/// Tolerance on |U^dagger U - 1| for accepting a matrix as unitary.
inline constexpr double kUnitarityTol = 1e-12;

/// Max-norm of U^dagger U - 1.
double unitarity_defect(const MatX &m);

/// Fixed-size unitary matrix. Unitarity is checked on construction.
template <int N>
class Unitary {
   public:
    using Matrix = Eigen::Matrix<Complex, N, N>;

    Unitary() : m_(Matrix::Identity()) {
    }
    explicit Unitary(const Matrix &m) : m_(m) {
        double defect = unitarity_defect(m_);
        if (!(defect <= kUnitarityTol)) {
            throw ValueError("matrix is not unitary (defect " + std::to_string(defect) + ")");
        }
    }

    static Unitary identity() {
        return Unitary();
    }

    const Matrix &matrix() const {
        return m_;
    }
    Complex operator()(int row, int col) const {
        return m_(row, col);
    }
    Unitary adjoint() const {
        return Unitary(m_.adjoint(), Trusted{});
    }
    Unitary operator*(const Unitary &other) const {
        return Unitary(m_ * other.m_, Trusted{});
    }
    Unitary scaled(Complex phase) const {
        return Unitary(m_ * phase);
    }
    Complex determinant() const {
        return m_.determinant();
    }
    bool operator==(const Unitary &other) const {
        return m_ == other.m_;
    }

   private:
    struct Trusted {};
    // Products and adjoints of unitaries are unitary; skipping the check
    // keeps long frame updates from accumulating spurious failures.
    Unitary(const Matrix &m, Trusted) : m_(m) {
    }

    Matrix m_;
};

using Unitary2 = Unitary<2>;
using Unitary4 = Unitary<4>;

Unitary4 kron(const Unitary2 &a, const Unitary2 &b);

/// Relative phase c with a = c*b (|c| = 1) within kEqualityTol, if any.
std::optional<Complex> relative_phase(const MatX &a, const MatX &b);

/// True iff a = c*b for some unit complex c, entrywise within kEqualityTol.
/// Throws ValueError on dimension mismatch.
bool phase_equal(const MatX &a, const MatX &b);

template <int N>
bool phase_equal(const Unitary<N> &a, const Unitary<N> &b) {
    return phase_equal(MatX(a.matrix()), MatX(b.matrix()));
}

// Pauli group ---------------------------------------------------------------

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kAllPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Element of the single-qubit Pauli group: i^phase_exponent * label.
struct PauliOp {
    Pauli label = Pauli::I;
    uint8_t phase_exponent = 0;  // 0..3 -> +1, +i, -1, -i

    PauliOp() = default;
    PauliOp(Pauli label, uint8_t phase_exponent = 0) : label(label), phase_exponent(phase_exponent & 3) {
    }

    Complex phase() const;
    Mat2 matrix() const;
    Unitary2 unitary() const;
    /// Exact group product; matrix(a*b) == matrix(a)*matrix(b).
    PauliOp operator*(const PauliOp &other) const;
    bool operator==(const PauliOp &other) const = default;
    std::string str() const;
};

inline PauliOp pauli_mul(const PauliOp &a, const PauliOp &b) {
    return a * b;
}

/// Matrix of a bare Pauli label.
Unitary2 pauli_matrix(Pauli p);

/// Phase exponent k with phase == i^k, if phase is a fourth root of unity.
std::optional<uint8_t> quarter_phase_exponent(Complex phase);

/// Finds (label, exact phase) with m == phase*label, if m is a phased Pauli.
std::optional<PauliOp> identify_pauli(const MatX &m);

// Gates ---------------------------------------------------------------------

Unitary2 hadamard();
/// diag(1, i), the square root of Z.
Unitary2 sqrt_z();
/// exp(i theta Z / 2). Throws ValueError on non-finite theta.
Unitary2 z_rotation(double theta);
/// exp(i theta X / 2). Throws ValueError on non-finite theta.
Unitary2 x_rotation(double theta);
/// diag(1, e^{i phi}).
Unitary2 z_phase(double phi);

Unitary4 cz_gate();
Unitary4 cnot_gate();
/// diag(1, 1, 1, e^{i phi}).
Unitary4 controlled_phase(double phi);

/// W^dagger (1 (x) U) W.
Unitary4 spread_operator(const Unitary4 &w, const Unitary2 &u);

/// (1/2) tr(v1^dagger v2), the overlap of the two gate-carrying pair states.
Complex overlap_phi(const Unitary2 &v1, const Unitary2 &v2);

/// Haar-random element of SU(2) (uniform unit quaternion).
Unitary2 haar_su2(Rng &rng);

/// Closure of {H, sqrt(Z)} modulo global phase, in breadth-first order
/// starting with the identity. Always 24 elements.
const std::vector<Unitary2> &clifford_group_1q();

/// Index into clifford_group_1q() of the element phase-equal to u, if any.
std::optional<size_t> clifford_index(const Unitary2 &u);

std::string format_matrix(const MatX &m);

}  // namespace gtbqc
