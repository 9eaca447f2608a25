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


#include "gtbqc/audit.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "gtbqc/errors.h"
#include "gtbqc/protocols.h"

using namespace gtbqc;

namespace {

constexpr double kPi = std::numbers::pi;

CircuitProgram trapfree_program(std::vector<size_t> first, std::vector<size_t> second, bool entangle) {
    CircuitProgram p;
    p.num_qubits = 2;
    Layer a, b;
    for (size_t k = 0; k < 2; k++) {
        a.gates.push_back(GateRequest::of_index(first[k]));
        b.gates.push_back(GateRequest::of_index(second[k]));
    }
    a.entangle = {entangle};
    p.layers = {a, b};
    return p;
}

Unitary4 local_dressing(Rng &rng, const Unitary4 &g) {
    return kron(haar_su2(rng), haar_su2(rng)) * g * kron(haar_su2(rng), haar_su2(rng));
}

}  // namespace

TEST(mixing_check, exact_for_examples_and_random) {
    ASSERT_LT(mixing_check(Unitary2::identity()), 1e-12);
    ASSERT_LT(mixing_check(hadamard() * z_rotation(kPi / 4)), 1e-12);
    Rng rng(3);
    for (int k = 0; k < 1000; k++) {
        ASSERT_LT(mixing_check(haar_su2(rng)), 1e-12);
    }
}

TEST(ks_statistic, examples) {
    ASSERT_DOUBLE_EQ(ks_statistic({1, 2, 3}, {1, 2, 3}), 0);
    ASSERT_DOUBLE_EQ(ks_statistic({0, 0}, {1, 1}), 1);
    ASSERT_DOUBLE_EQ(ks_statistic({1, 2, 3, 4}, {3, 4, 5, 6}), 0.5);
    ASSERT_THROW(ks_statistic({}, {1}), ValueError);
}

TEST(haar_invariance_check, identical_gates_and_negative_control) {
    ASSERT_THROW(haar_invariance_check(Unitary2::identity(), hadamard(), 100), InsufficientSamplesError);
    HaarInvarianceOptions options;
    options.threshold = 0.07;
    auto same = haar_invariance_check(hadamard(), hadamard(), 10000, options);
    ASSERT_TRUE(same.pass) << same.max_distance();
    auto diff = haar_invariance_check(Unitary2::identity(), hadamard(), 10000, options);
    ASSERT_TRUE(diff.pass) << diff.max_distance();
    HaarInvarianceOptions fixed = options;
    fixed.fixed_v = Unitary2::identity();
    auto control = haar_invariance_check(Unitary2::identity(), hadamard(), 10000, fixed);
    ASSERT_FALSE(control.pass);
    ASSERT_GT(control.max_distance(), 0.3);
}

TEST(view_indistinguishability, trapfree_views_match) {
    auto a = trapfree_program({0, 3}, {5, 7}, true);
    auto b = trapfree_program({6, 1}, {2, 2}, false);
    ViewOptions options;
    options.tv_threshold = 0.07;
    auto r = view_indistinguishability(a, b, Variant::kTrapFree, 10000, options);
    ASSERT_EQ(r.slots.size(), 6u);
    ASSERT_TRUE(r.pass) << r.max_classical_tv << " " << r.max_quantum_distance << " " << r.max_mixing_deviation;
    ASSERT_LT(r.max_quantum_distance, 1e-12);
    ASSERT_LT(r.max_mixing_deviation, 1e-12);
}

TEST(view_indistinguishability, omitting_tau_is_detected) {
    auto a = trapfree_program({0, 3}, {5, 7}, true);
    auto b = trapfree_program({6, 1}, {2, 2}, false);
    ViewOptions options;
    options.tv_threshold = 0.07;
    options.omit_tau = true;
    auto r = view_indistinguishability(a, b, Variant::kTrapFree, 10000, options);
    ASSERT_FALSE(r.pass);
    ASSERT_GT(r.max_quantum_distance, 0.1);
}

TEST(view_indistinguishability, rejects_bad_inputs) {
    auto a = trapfree_program({0, 3}, {5, 7}, true);
    CircuitProgram c = a;
    c.layers.pop_back();
    ASSERT_THROW(view_indistinguishability(a, c, Variant::kTrapFree, 100000), ValueError);
    ASSERT_THROW(view_indistinguishability(a, a, Variant::kHaar, 100000), ConfigError);
    ASSERT_THROW(view_indistinguishability(a, a, Variant::kTrapFree, 50000), InsufficientSamplesError);
}

TEST(trapfree_index_bijective, default_table) {
    auto table = build_substitution_table(default_gate_set(Variant::kTrapFree), default_trapfree_v_set());
    ASSERT_TRUE(trapfree_index_bijective(table));
}

TEST(entangling_certificate, examples) {
    auto id = entangling_certificate(r_gate(Unitary2::identity()));
    ASSERT_EQ(id.schmidt_rank, 1u);
    ASSERT_FALSE(id.entangling);
    ASSERT_TRUE(id.identity_class);
    auto cz = entangling_certificate(cz_gate());
    ASSERT_EQ(cz.schmidt_rank, 2u);
    ASSERT_TRUE(cz.cnot_class);
    ASSERT_TRUE(entangling_certificate(cnot_gate()).cnot_class);
    auto rx = entangling_certificate(r_gate(x_rotation(-kPi / 2)));
    ASSERT_TRUE(rx.cnot_class);
}

TEST(entangling_certificate, entangler_is_not_cnot_class) {
    auto s = entangling_certificate(r_gate(entangler()));
    ASSERT_TRUE(s.entangling);
    ASSERT_FALSE(s.cnot_class);
    ASSERT_NEAR(std::abs(s.g1 - Complex(0.5)), 0, 1e-12);
    ASSERT_NEAR(std::abs(s.g2 - Complex(2)), 0, 1e-12);
}

TEST(entangling_certificate, invariant_under_local_dressing) {
    Rng rng(8);
    for (const Unitary4 &g : {cz_gate(), r_gate(entangler()), controlled_phase(0.7)}) {
        auto base = entangling_certificate(g);
        for (int k = 0; k < 100; k++) {
            auto c = entangling_certificate(local_dressing(rng, g));
            ASSERT_EQ(c.schmidt_rank, base.schmidt_rank);
            ASSERT_NEAR(std::abs(c.g1 - base.g1), 0, 1e-10);
            ASSERT_NEAR(std::abs(c.g2 - base.g2), 0, 1e-10);
        }
    }
}

TEST(audit_report_json, schema_and_pass) {
    auto empty = audit_report_json({});
    ASSERT_EQ(empty["schema"], "gtbqc-audit/1");
    ASSERT_TRUE(empty["pass"].get<bool>());
    auto one = audit_report_json({{"mixing", 1e-16, 1e-12, true}, {"x", 1, 0.5, false}});
    ASSERT_FALSE(one["pass"].get<bool>());
    ASSERT_EQ(one["checks"].size(), 2u);
}
