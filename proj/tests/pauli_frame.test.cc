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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace gtbqc;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Unitary2> trapfree_u() {
    std::vector<Unitary2> out;
    for (int i = 0; i < 8; i++) {
        out.push_back(hadamard() * z_rotation(kPi * i / 4));
    }
    return out;
}

std::vector<Unitary2> trapfree_v() {
    std::vector<Unitary2> out;
    for (int k = 0; k < 8; k++) {
        out.push_back(z_rotation(kPi * k / 4));
    }
    return out;
}

// Numeric oracle: CZ p CZ^dagger as a phased Pauli pair.
MatX conjugate_through_cz(const PauliPair &p) {
    MatX cz = cz_gate().matrix();
    return cz * p.unitary().matrix() * cz.adjoint();
}

}  // namespace

TEST(push_through_cz, examples) {
    ASSERT_EQ(push_through_cz({Pauli::Z, Pauli::I, 0}), (PauliPair{Pauli::Z, Pauli::I, 0}));
    ASSERT_EQ(push_through_cz({Pauli::X, Pauli::I, 0}), (PauliPair{Pauli::X, Pauli::Z, 0}));
    PauliPair yx{Pauli::Y, Pauli::X, 0};
    PauliPair got = push_through_cz(yx);
    ASSERT_LT((conjugate_through_cz(yx) - got.unitary().matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(push_through_cz, exhaustive_against_conjugation_oracle) {
    for (auto p : PauliPair::all()) {
        for (uint8_t k = 0; k < 4; k++) {
            p.phase_exponent = k;
            MatX expected = conjugate_through_cz(p);
            ASSERT_LT((expected - push_through_cz(p).unitary().matrix()).cwiseAbs().maxCoeff(), 1e-15) << p.str();
        }
    }
}

TEST(push_through_cz, is_a_homomorphism) {
    for (const auto &p : PauliPair::all()) {
        for (const auto &q : PauliPair::all()) {
            ASSERT_EQ(push_through_cz(p * q), push_through_cz(p) * push_through_cz(q));
        }
    }
}

TEST(pauli_frame, cz_update_matches_pair_rule) {
    PauliFrame frame(3);
    frame.apply_left(0, PauliOp(Pauli::X));
    frame.apply_left(2, PauliOp(Pauli::Y, 1));
    frame.push_through_cz(0, 1);
    ASSERT_EQ(frame[0], PauliOp(Pauli::X));
    ASSERT_EQ(frame[1], PauliOp(Pauli::Z));
    ASSERT_FALSE(frame.is_identity());
    ASSERT_TRUE(PauliFrame(4).is_identity());
}

TEST(two_qubit_commutation, examples) {
    ASSERT_TRUE(check_two_qubit_commutation(cz_gate()).holds);
    ASSERT_TRUE(check_two_qubit_commutation(cnot_gate()).holds);
    auto report = check_two_qubit_commutation(controlled_phase(kPi / 2));
    ASSERT_FALSE(report.holds);
    ASSERT_TRUE(report.counterexample.has_value());
}

TEST(two_qubit_commutation, witnesses_multiply_out) {
    auto report = check_two_qubit_commutation(cz_gate());
    ASSERT_EQ(report.witnesses.size(), 16u);
    MatX w = cz_gate().matrix();
    for (const auto &wit : report.witnesses) {
        MatX in = kron(pauli_matrix((Pauli)wit.in_first), pauli_matrix((Pauli)wit.in_second)).matrix();
        MatX out = kron(pauli_matrix((Pauli)wit.out_first), pauli_matrix((Pauli)wit.out_second)).matrix();
        ASSERT_LT((w * in - wit.phase * out * w).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(one_qubit_commutation, examples) {
    std::vector<Unitary2> v{hadamard(), hadamard() * z_rotation(kPi / 4), hadamard() * z_rotation(-kPi / 4)};
    ASSERT_TRUE(check_one_qubit_commutation(v).holds);
    std::vector<Unitary2> id{Unitary2::identity()};
    ASSERT_TRUE(check_one_qubit_commutation(id).holds);
    std::vector<Unitary2> lone{hadamard() * z_rotation(kPi / 4)};
    ASSERT_FALSE(check_one_qubit_commutation(lone).holds);
    ASSERT_TRUE(check_one_qubit_commutation(clifford_group_1q()).holds);
}

TEST(rotation_commute, examples) {
    for (double theta : {0.4, -1.3}) {
        for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
            for (Axis axis : {Axis::Z, Axis::X}) {
                auto r = rotation_commute(PauliOp(p), theta, axis);
                auto rot = [&](double t) { return axis == Axis::Z ? z_rotation(t) : x_rotation(t); };
                MatX lhs = (rot(theta) * pauli_matrix(p)).matrix();
                MatX rhs = (pauli_matrix(p) * rot(r.theta)).matrix();
                ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-14);
            }
        }
    }
    ASSERT_DOUBLE_EQ(rotation_commute(PauliOp(Pauli::X), 0.7, Axis::Z).theta, -0.7);
    ASSERT_DOUBLE_EQ(rotation_commute(PauliOp(Pauli::Z), 0.7, Axis::Z).theta, 0.7);
}

TEST(substitution_table, trapfree_entries) {
    auto u = trapfree_u();
    auto v = trapfree_v();
    auto table = build_substitution_table(u, v);
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = 0; j < 8; j++) {
            size_t shifted = (j + 16 - 2 * i) % 8;
            const auto &z = table.lookup(i, j, Pauli::Z);
            ASSERT_EQ(z.u_prime, j);
            ASSERT_EQ(z.sigma_prime, Pauli::X);
            const auto &x = table.lookup(i, j, Pauli::X);
            ASSERT_EQ(x.u_prime, shifted);
            ASSERT_EQ(x.sigma_prime, Pauli::Z);
            const auto &y = table.lookup(i, j, Pauli::Y);
            ASSERT_EQ(y.u_prime, shifted);
            ASSERT_EQ(y.sigma_prime, Pauli::Y);
            for (Pauli sigma : kAllPaulis) {
                const auto &e = table.lookup(i, j, sigma);
                ASSERT_TRUE(phase_equal(v[e.v_index], u[j].adjoint() * u[i]));
                MatX lhs = (u[e.u_prime] * v[e.v_index] * pauli_matrix(sigma)).matrix();
                MatX rhs = (pauli_matrix(e.sigma_prime) * u[i]).matrix();
                ASSERT_LT((lhs - e.phase * rhs).cwiseAbs().maxCoeff(), 1e-12);
            }
        }
    }
}

TEST(substitution_table, communicated_index_is_uniform) {
    auto table = build_substitution_table(trapfree_u(), trapfree_v());
    for (size_t i = 0; i < 8; i++) {
        for (Pauli sigma : kAllPaulis) {
            std::array<int, 8> counts{};
            for (size_t j = 0; j < 8; j++) {
                counts[table.lookup(i, j, sigma).u_prime]++;
            }
            for (int c : counts) {
                ASSERT_EQ(c, 1);
            }
        }
    }
}

TEST(substitution_table, missing_v_throws) {
    auto u = trapfree_u();
    std::vector<Unitary2> v{Unitary2::identity()};
    ASSERT_THROW(build_substitution_table(u, v), NoSolutionError);
    std::vector<Unitary2> empty;
    ASSERT_THROW(build_substitution_table(empty, v), ValueError);
}
