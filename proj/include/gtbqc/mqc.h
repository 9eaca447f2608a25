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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtbqc/json_io.h"
#include "gtbqc/linalg.h"
#include "gtbqc/rng.h"
#include "gtbqc/state_vector.h"
#include "gtbqc/transcript.h"

namespace gtbqc {

/// Translation-invariant MPS tensors: D matrices A(i) of size d x d and
/// boundary vectors <L|, |R>.
struct MPSTensorSet {
    size_t site_dim = 0;
    size_t bond_dim = 0;
    std::vector<MatX> matrices;
    VecX left;
    VecX right;

    /// Shape and finiteness checks; ValueError.
    void validate() const;
};

/// 1D cluster tensors A(0) = |+><0|, A(1) = |-><1|, <L| = (1, 0), |R> = |+>.
MPSTensorSet cluster_tensors();

/// "gtbqc-mps/1": {site_dim, bond_dim, matrices, left, right}. Site-dependent
/// tensors ("site_matrices") are rejected with ConfigError.
MPSTensorSet mps_from_json(const Json &j);
Json mps_to_json(const MPSTensorSet &t);

/// <L| A(i_N) ... A(i_1) |R> with config[0] = i_1.
Complex mps_amplitude(const MPSTensorSet &t, const std::vector<size_t> &config);

/// A[phi] = sum_i conj(phi_i) A(i).
MatX measured_operator(const MPSTensorSet &t, const VecX &phi);

/// A[phi_l] ... A[phi_1]; outcomes[0] acts first.
MatX correlation_sequence(const MPSTensorSet &t, const std::vector<VecX> &outcomes);

/// m rescaled to a unitary, if it is a nonzero multiple of one.
std::optional<MatX> projective_unitary(const MatX &m);

/// E = A[phi_actual] u_intended^dagger, rescaled to a unitary. ValueError
/// when A[phi_actual] is not proportional to a unitary.
MatX byproduct_of(const MPSTensorSet &t, const VecX &phi_actual, const MatX &u_intended);

/// Finite by-product set, compared up to phase and scale.
class ByproductSet {
   public:
    /// ValueError unless the set contains the identity and is closed under
    /// multiplication up to phase.
    explicit ByproductSet(std::vector<MatX> elements);
    static ByproductSet paulis();

    const std::vector<MatX> &elements() const {
        return elements_;
    }
    /// Index of the element proportional to m.
    std::optional<size_t> find(const MatX &m) const;

   private:
    std::vector<MatX> elements_;
};

struct ManageabilityWitness {
    size_t u_index;
    size_t e_index;
    size_t measurement;
};

struct ManageabilityReport {
    bool holds = false;
    bool one_site_holds = false;
    bool two_site_holds = false;
    /// For every (U_j, E): the measurement M_i with A[phi_i] E U_j^dagger in
    /// the by-product set for all outcomes.
    std::vector<ManageabilityWitness> witnesses;
    std::string counterexample;

    const ManageabilityWitness *lookup(size_t u_index, size_t e_index) const;
};

/// Exhaustive check of A[phi_i] E U_j^dagger in E-set (for some M_i, all
/// outcomes) and W (E (x) E) subset-of (E (x) E) W.
ManageabilityReport check_manageable(const MPSTensorSet &t, const ByproductSet &e_set,
                                     const std::vector<MatX> &u_set, const std::vector<MeasurementBasis> &meas_set,
                                     const MatX &w);

struct BlindEntry {
    size_t target;
    Pauli sigma;
    size_t v_index;
    size_t measurement;
};

struct BlindCriterionReport {
    /// Every (target, sigma) has some valid (M_j, V).
    bool holds = false;
    /// Every (target, sigma, V) has a valid M_j, so V may be drawn uniformly
    /// before sigma is known.
    bool every_v = false;
    std::vector<BlindEntry> entries;
    std::string counterexample;

    /// Valid measurements for (target, sigma, v).
    std::vector<size_t> measurements_for(size_t target, Pauli sigma, size_t v_index) const;
};

/// Exhaustive search for A[sigma V^dagger phi_j] A[phi_i]^dagger in E-set for
/// all outcomes phi_j of M_j and phi_i of the target.
BlindCriterionReport check_blind_criterion(const MPSTensorSet &t, const std::vector<Unitary2> &v_set,
                                           const std::vector<MeasurementBasis> &meas_set,
                                           const std::vector<size_t> &targets, const ByproductSet &e_set);

/// V_ij = sum_k |m_jk><m_ik|. ValueError on dimension or count mismatch.
MatX measurement_substitution(const MeasurementBasis &m_i, const MeasurementBasis &m_j);

/// The discrete one-way angle set {pi, pi/2, pi/4, -pi/4}.
std::vector<double> discrete_oneway_angles();
/// M_{k pi/4}, 0 <= k < 8.
std::vector<MeasurementBasis> oneway_measurements();
/// V_gamma = Z(-gamma), gamma = k pi/4, 0 <= k < 8.
std::vector<Unitary2> oneway_v_set();

struct OnewayOptions {
    enum class Mode { kTable, kStochastic, kContinuous };
    Mode mode = Mode::kTable;
    size_t max_attempts = 200;
};

struct OnewayResult {
    Transcript transcript;
    /// Correlation-space operator realized by the measured sites.
    MatX realized;
    /// Intended product A[alpha_N+] ... A[alpha_1+].
    MatX intended;
    /// Pauli E with realized ~ E intended, if any.
    std::optional<Pauli> byproduct;
    /// Output qubit vs realized |R>, a check of the bookkeeping against the
    /// physical cluster simulation.
    double output_fidelity = 0;
    /// Measurement angles the server saw.
    std::vector<double> server_angles;
};

/// Blind one-way computation on a (pattern.size() + 1)-qubit cluster; the
/// last qubit is the unmeasured output. Discrete modes require angles in
/// discrete_oneway_angles() (ValueError otherwise).
OnewayResult run_blind_oneway(const std::vector<double> &pattern, uint64_t seed, const OnewayOptions &options = {});

}  // namespace gtbqc
