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

#include "gtbqc/linalg.h"

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

#include "gtbqc/rng.h"

namespace gtbqc {

namespace {

constexpr Complex kI(0, 1);

void require_finite(double theta, const char *name) {
    if (!std::isfinite(theta)) {
        throw ValueError(std::string(name) + ": angle must be finite");
    }
}

}  // namespace

double unitarity_defect(const MatX &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    MatX d = m.adjoint() * m - MatX::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

Unitary4 kron(const Unitary2 &a, const Unitary2 &b) {
    Mat4 m;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            m.block<2, 2>(2 * r, 2 * c) = a(r, c) * b.matrix();
        }
    }
    return Unitary4(m);
}

std::optional<Complex> relative_phase(const MatX &a, const MatX &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValueError("phase_equal: dimension mismatch");
    }
    Eigen::Index r = 0, c = 0;
    double largest = b.cwiseAbs().maxCoeff(&r, &c);
    if (largest == 0) {
        return std::nullopt;
    }
    Complex phase = a(r, c) / b(r, c);
    if (std::abs(std::abs(phase) - 1) > kEqualityTol) {
        return std::nullopt;
    }
    phase /= std::abs(phase);
    if ((a - phase * b).cwiseAbs().maxCoeff() > kEqualityTol) {
        return std::nullopt;
    }
    return phase;
}

bool phase_equal(const MatX &a, const MatX &b) {
    return relative_phase(a, b).has_value();
}

char pauli_char(Pauli p) {
    return "IXYZ"[(int)p];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw ValueError(std::string("not a Pauli label: ") + c);
    }
}

Complex PauliOp::phase() const {
    static const Complex phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return phases[phase_exponent & 3];
}

Mat2 PauliOp::matrix() const {
    return phase() * pauli_matrix(label).matrix();
}

Unitary2 PauliOp::unitary() const {
    return Unitary2(matrix());
}

PauliOp PauliOp::operator*(const PauliOp &other) const {
    uint8_t k = phase_exponent + other.phase_exponent;
    auto a = (uint8_t)label;
    auto b = (uint8_t)other.label;
    if (a == 0) {
        return PauliOp(other.label, k);
    }
    if (b == 0) {
        return PauliOp(label, k);
    }
    if (a == b) {
        return PauliOp(Pauli::I, k);
    }
    // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
    auto c = (Pauli)(a ^ b);
    bool cyclic = (b + 3 - a) % 3 == 1;
    return PauliOp(c, k + (cyclic ? 1 : 3));
}

std::string PauliOp::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    return std::string(prefixes[phase_exponent & 3]) + pauli_char(label);
}

Unitary2 pauli_matrix(Pauli p) {
    Mat2 m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -kI, kI, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return Unitary2(m);
}

std::optional<uint8_t> quarter_phase_exponent(Complex phase) {
    for (uint8_t k = 0; k < 4; k++) {
        if (std::abs(phase - PauliOp(Pauli::I, k).phase()) < kEqualityTol) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<PauliOp> identify_pauli(const MatX &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        return std::nullopt;
    }
    for (Pauli p : kAllPaulis) {
        auto phase = relative_phase(m, MatX(pauli_matrix(p).matrix()));
        if (!phase.has_value()) {
            continue;
        }
        auto k = quarter_phase_exponent(*phase);
        if (!k.has_value()) {
            return std::nullopt;
        }
        return PauliOp(p, *k);
    }
    return std::nullopt;
}

Unitary2 hadamard() {
    Mat2 m;
    m << 1, 1, 1, -1;
    return Unitary2(m / std::sqrt(2.0));
}

Unitary2 sqrt_z() {
    Mat2 m;
    m << 1, 0, 0, kI;
    return Unitary2(m);
}

Unitary2 z_rotation(double theta) {
    require_finite(theta, "z_rotation");
    Mat2 m;
    m << std::exp(kI * (theta / 2)), 0, 0, std::exp(-kI * (theta / 2));
    return Unitary2(m);
}

Unitary2 x_rotation(double theta) {
    require_finite(theta, "x_rotation");
    Mat2 m;
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    m << c, kI * s, kI * s, c;
    return Unitary2(m);
}

Unitary2 z_phase(double phi) {
    require_finite(phi, "z_phase");
    Mat2 m;
    m << 1, 0, 0, std::exp(kI * phi);
    return Unitary2(m);
}

Unitary4 cz_gate() {
    return controlled_phase(std::numbers::pi);
}

Unitary4 cnot_gate() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return Unitary4(m);
}

Unitary4 controlled_phase(double phi) {
    require_finite(phi, "controlled_phase");
    Mat4 m = Mat4::Identity();
    m(3, 3) = std::exp(kI * phi);
    if (phi == std::numbers::pi) {
        m(3, 3) = -1;
    }
    return Unitary4(m);
}

Unitary4 spread_operator(const Unitary4 &w, const Unitary2 &u) {
    return w.adjoint() * kron(Unitary2::identity(), u) * w;
}

Complex overlap_phi(const Unitary2 &v1, const Unitary2 &v2) {
    return 0.5 * (v1.matrix().adjoint() * v2.matrix()).trace();
}

Unitary2 haar_su2(Rng &rng) {
    // A normalized Gaussian 4-vector is uniform on S^3, which is Haar on SU(2).
    double q[4];
    double norm2;
    do {
        norm2 = 0;
        for (double &x : q) {
            x = rng.normal();
            norm2 += x * x;
        }
    } while (norm2 < 1e-24);
    double inv = 1 / std::sqrt(norm2);
    Complex a(q[0] * inv, q[1] * inv);
    Complex b(q[2] * inv, q[3] * inv);
    Mat2 m;
    m << a, -std::conj(b), b, std::conj(a);
    return Unitary2(m);
}

const std::vector<Unitary2> &clifford_group_1q() {
    static const std::vector<Unitary2> group = [] {
        std::vector<Unitary2> found{Unitary2::identity()};
        std::deque<Unitary2> frontier{Unitary2::identity()};
        const Unitary2 generators[2] = {hadamard(), sqrt_z()};
        while (!frontier.empty()) {
            Unitary2 cur = frontier.front();
            frontier.pop_front();
            for (const auto &g : generators) {
                Unitary2 next = g * cur;
                bool seen = false;
                for (const auto &f : found) {
                    if (phase_equal(f, next)) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) {
                    found.push_back(next);
                    frontier.push_back(next);
                }
            }
        }
        return found;
    }();
    return group;
}

std::optional<size_t> clifford_index(const Unitary2 &u) {
    const auto &group = clifford_group_1q();
    for (size_t k = 0; k < group.size(); k++) {
        if (phase_equal(group[k], u)) {
            return k;
        }
    }
    return std::nullopt;
}

std::string format_matrix(const MatX &m) {
    std::stringstream out;
    out.precision(6);
    out << "[";
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        out << (r ? "; " : "");
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out << (c ? ", " : "") << m(r, c).real();
            if (m(r, c).imag() != 0) {
                out << (m(r, c).imag() < 0 ? "-" : "+") << std::abs(m(r, c).imag()) << "i";
            }
        }
    }
    out << "]";
    return out.str();
}

}  // namespace gtbqc
