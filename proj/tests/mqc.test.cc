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


#include "gtbqc/mqc.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "gtbqc/errors.h"

using namespace gtbqc;

namespace {

constexpr double kPi = std::numbers::pi;

// Cluster chain on n qubits built gate by gate.
StateVector brute_force_cluster(size_t n) {
    StateVector s(n);
    for (size_t q = 0; q < n; q++) {
        s.apply_1q(q, hadamard());
    }
    for (size_t q = 0; q + 1 < n; q++) {
        s.apply_2q(q, q + 1, cz_gate());
    }
    return s;
}

MatX theta_operator(double theta, size_t k = 0) {
    return measured_operator(cluster_tensors(), MeasurementBasis::theta(theta).outcome(k));
}

}  // namespace

TEST(mps, cluster_amplitudes_match_brute_force) {
    auto t = cluster_tensors();
    for (size_t n = 1; n <= 8; n++) {
        StateVector s = brute_force_cluster(n);
        std::vector<Complex> amps(size_t{1} << n);
        for (size_t idx = 0; idx < amps.size(); idx++) {
            std::vector<size_t> config(n);
            for (size_t q = 0; q < n; q++) {
                config[q] = (idx >> (n - 1 - q)) & 1;
            }
            amps[idx] = mps_amplitude(t, config);
        }
        StateVector from_mps = StateVector::normalized(amps);
        ASSERT_NEAR(std::abs(fidelity_up_to_phase(s, from_mps) - 1), 0, 1e-12) << n;
    }
}

TEST(mps, json_roundtrip_and_rejections) {
    auto t = cluster_tensors();
    auto back = mps_from_json(mps_to_json(t));
    ASSERT_EQ(back.site_dim, 2u);
    ASSERT_TRUE(back.matrices[1].isApprox(t.matrices[1]));
    Json j = mps_to_json(t);
    j["site_matrices"] = Json::array();
    ASSERT_THROW(mps_from_json(j), ConfigError);
    Json bad = mps_to_json(t);
    bad["bond_dim"] = 3;
    ASSERT_THROW(mps_from_json(bad), ParseError);
    ASSERT_THROW(mps_from_json(Json{{"schema", "other"}}), ParseError);
}

TEST(mps, amplitude_rejects_out_of_range_config) {
    ASSERT_THROW(mps_amplitude(cluster_tensors(), {0, 2}), ValueError);
}

TEST(measured_operator, theta_plus_is_hadamard_phase) {
    for (double theta : {0.0, kPi / 4, 1.1, -2.0}) {
        Mat2 expected = (hadamard() * z_phase(-theta)).matrix();
        ASSERT_TRUE(phase_equal(*projective_unitary(theta_operator(theta)), MatX(expected))) << theta;
    }
}

TEST(byproduct_of, wrong_outcome_gives_x) {
    auto t = cluster_tensors();
    for (double theta : {0.0, kPi / 4, 0.7}) {
        MatX e = byproduct_of(t, MeasurementBasis::theta(theta).outcome(1), theta_operator(theta));
        ASSERT_TRUE(phase_equal(e, MatX(pauli_matrix(Pauli::X).matrix())));
    }
    ASSERT_THROW(byproduct_of(t, MeasurementBasis::theta(0).outcome(0), MatX::Ones(2, 2)), ValueError);
}

TEST(byproduct_set, validates_identity_and_closure) {
    ASSERT_THROW(ByproductSet({MatX(pauli_matrix(Pauli::X).matrix())}), ValueError);
    std::vector<MatX> not_closed{MatX::Identity(2, 2), MatX(hadamard().matrix()), MatX(sqrt_z().matrix())};
    ASSERT_THROW(ByproductSet{not_closed}, ValueError);
    auto paulis = ByproductSet::paulis();
    ASSERT_EQ(paulis.find(MatX(Complex(0, 1) * pauli_matrix(Pauli::Y).matrix())), 2u);
    ASSERT_FALSE(paulis.find(MatX(hadamard().matrix())).has_value());
}

TEST(check_manageable, cluster_with_paulis) {
    auto t = cluster_tensors();
    std::vector<MatX> us;
    for (double a : discrete_oneway_angles()) {
        us.push_back(theta_operator(a));
    }
    auto r = check_manageable(t, ByproductSet::paulis(), us, oneway_measurements(), cz_gate().matrix());
    ASSERT_TRUE(r.holds) << r.counterexample;
    ASSERT_EQ(r.witnesses.size(), us.size() * 4);
    ASSERT_NE(r.lookup(0, 3), nullptr);
}

TEST(check_manageable, trivial_set_fails) {
    std::vector<MatX> us{theta_operator(kPi / 4)};
    auto r = check_manageable(cluster_tensors(), ByproductSet({MatX::Identity(2, 2)}), us, oneway_measurements(),
                              cz_gate().matrix());
    ASSERT_FALSE(r.holds);
    ASSERT_FALSE(r.one_site_holds);
    ASSERT_FALSE(r.counterexample.empty());
}

TEST(check_manageable, two_site_condition) {
    std::vector<MatX> us{theta_operator(0)};
    auto paulis = ByproductSet::paulis();
    auto cz = check_manageable(cluster_tensors(), paulis, us, oneway_measurements(), cz_gate().matrix());
    ASSERT_TRUE(cz.two_site_holds);
    // A non-Clifford entangler does not normalize the Pauli group.
    MatX w = controlled_phase(kPi / 4).matrix();
    auto cp = check_manageable(cluster_tensors(), paulis, us, oneway_measurements(), w);
    ASSERT_FALSE(cp.two_site_holds);
}

TEST(check_blind_criterion, table_covers_every_v) {
    std::vector<size_t> targets{0, 1, 2, 3, 4, 5, 6, 7};
    auto r = check_blind_criterion(cluster_tensors(), oneway_v_set(), oneway_measurements(), targets,
                                   ByproductSet::paulis());
    ASSERT_TRUE(r.holds) << r.counterexample;
    ASSERT_TRUE(r.every_v);
    // Each (target, sigma, V) has two solutions: beta and beta + pi.
    ASSERT_EQ(r.entries.size(), 2u * 8 * 4 * 8);
    // sigma = I: beta = alpha + gamma (mod pi).
    for (size_t a = 0; a < 8; a++) {
        for (size_t g = 0; g < 8; g++) {
            auto m = r.measurements_for(a, Pauli::I, g);
            ASSERT_EQ(m, (std::vector<size_t>{(a + g) % 4, (a + g) % 4 + 4}));
        }
    }
}

TEST(check_blind_criterion, literal_minus_gamma_rule_fails) {
    auto paulis = ByproductSet::paulis();
    auto meas = oneway_measurements();
    auto vs = oneway_v_set();
    size_t a = 2, g = 1;
    size_t j = (a + 8 - g) % 8;
    MatX ai = theta_operator(kPi * (double)a / 4).adjoint();
    VecX phi = vs[g].matrix().adjoint() * meas[j].outcome(0);
    ASSERT_FALSE(paulis.find(measured_operator(cluster_tensors(), phi) * ai).has_value());
}

TEST(check_blind_criterion, rejects_bad_inputs) {
    std::vector<size_t> targets{9};
    ASSERT_THROW(check_blind_criterion(cluster_tensors(), oneway_v_set(), oneway_measurements(), targets,
                                       ByproductSet::paulis()),
                 ValueError);
}

TEST(measurement_substitution, equivalent_statistics) {
    auto meas = oneway_measurements();
    Rng rng(5);
    for (int trial = 0; trial < 20; trial++) {
        Unitary2 u = haar_su2(rng);
        StateVector s(1);
        s.apply_1q(0, u);
        size_t i = rng.uniform_index(8), j = rng.uniform_index(8);
        MatX v = measurement_substitution(meas[i], meas[j]);
        ASSERT_LT(unitarity_defect(v), 1e-12);
        auto direct = basis_probabilities(s, 0, meas[i]);
        StateVector moved = s;
        moved.apply_1q(0, Unitary2(Mat2(v)));
        auto substituted = basis_probabilities(moved, 0, meas[j]);
        // Sampled distributions agree within total variation 0.03.
        const int shots = 20000;
        int hits_direct = 0, hits_sub = 0;
        for (int k = 0; k < shots; k++) {
            hits_direct += rng.uniform() < direct[0];
            hits_sub += rng.uniform() < substituted[0];
        }
        ASSERT_NEAR(direct[0], substituted[0], 1e-12);
        ASSERT_LE(std::abs(hits_direct - hits_sub) / (double)shots, 0.03);
    }
    ASSERT_THROW(measurement_substitution(meas[0], MeasurementBasis::computational(4)), ValueError);
}

class OnewayModes : public ::testing::TestWithParam<OnewayOptions::Mode> {};

TEST_P(OnewayModes, output_matches_pauli_corrected_pattern) {
    OnewayOptions options;
    options.mode = GetParam();
    Rng rng(17);
    auto angles = discrete_oneway_angles();
    for (uint64_t seed = 0; seed < 25; seed++) {
        std::vector<double> pattern;
        size_t len = 1 + rng.uniform_index(5);
        for (size_t k = 0; k < len; k++) {
            pattern.push_back(options.mode == OnewayOptions::Mode::kContinuous ? rng.uniform() * 6
                                                                               : angles[rng.uniform_index(4)]);
        }
        auto r = run_blind_oneway(pattern, seed, options);
        ASSERT_TRUE(r.byproduct.has_value());
        ASSERT_NEAR(r.output_fidelity, 1, 1e-10);
        MatX e = r.realized * r.intended.adjoint();
        ASSERT_TRUE(phase_equal(*projective_unitary(e), MatX(pauli_matrix(*r.byproduct).matrix())));
        ASSERT_EQ(r.server_angles.size(), pattern.size());
    }
}

INSTANTIATE_TEST_SUITE_P(mqc, OnewayModes,
                         ::testing::Values(OnewayOptions::Mode::kTable, OnewayOptions::Mode::kStochastic,
                                           OnewayOptions::Mode::kContinuous));

TEST(run_blind_oneway, deterministic_and_server_view_hides_angles) {
    std::vector<double> pattern{kPi / 4, kPi / 2, -kPi / 4};
    auto a = run_blind_oneway(pattern, 99);
    auto b = run_blind_oneway(pattern, 99);
    ASSERT_EQ(a.transcript.to_jsonl(), b.transcript.to_jsonl());
    ASSERT_EQ(a.transcript.server_view_jsonl().find("output_fidelity"), std::string::npos);
    // Server angles are uniform over 8 values regardless of the pattern.
    std::vector<int> counts(8);
    for (uint64_t seed = 0; seed < 800; seed++) {
        auto r = run_blind_oneway({kPi / 4}, seed);
        counts[(size_t)std::lround(r.server_angles[0] / (kPi / 4)) % 8]++;
    }
    for (int c : counts) {
        ASSERT_NEAR(c, 100, 40);
    }
}

TEST(run_blind_oneway, rejects_bad_patterns) {
    ASSERT_THROW(run_blind_oneway({}, 1), ValueError);
    ASSERT_THROW(run_blind_oneway({0.3}, 1), ValueError);
    ASSERT_THROW(run_blind_oneway({NAN}, 1), ValueError);
}
