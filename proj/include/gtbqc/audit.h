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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtbqc/json_io.h"
#include "gtbqc/linalg.h"
#include "gtbqc/pauli_frame.h"
#include "gtbqc/program.h"
#include "gtbqc/state_vector.h"

namespace gtbqc {

/// Max-norm deviation of (1/4) sum_tau |Phi_{V tau}><Phi_{V tau}| from 1/4.
double mixing_check(const Unitary2 &v);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Smallest sample count accepted for a distance threshold (10^5 at 0.02,
/// scaling as 1 / threshold^2).
size_t min_samples(double threshold);

struct HaarFeatureDistance {
    std::string feature;
    double ks;
};

struct HaarInvarianceReport {
    size_t samples = 0;
    double threshold = 0;
    std::vector<HaarFeatureDistance> distances;
    bool pass = false;

    double max_distance() const;
};

struct HaarInvarianceOptions {
    double threshold = 0.02;
    uint64_t seed = 1;
    /// Replace the Haar pair unitary with this fixed one (negative control).
    std::optional<Unitary2> fixed_v;
    size_t workers = 0;
};

/// Runs the haar variant on the one-gate programs u1 and u1_alt and compares
/// the first delegated correction matrices R_1 through |tr R|, |R_00| and
/// |R_01|. Throws InsufficientSamplesError below min_samples(threshold).
HaarInvarianceReport haar_invariance_check(const Unitary2 &u1, const Unitary2 &u1_alt, size_t n_samples,
                                           const HaarInvarianceOptions &options = {});

struct SlotView {
    /// Total variation between the instruction-index distributions.
    double classical_tv = 0;
    /// Trace distance between the slot averages of the server's posterior
    /// pair state, conditioned on the slot's classical record.
    double quantum_distance = 0;
    /// Trace distance of each program's slot average from 1/4.
    double mixing_deviation = 0;
};

struct ViewReport {
    size_t runs = 0;
    double tv_threshold = 0;
    double quantum_threshold = 0;
    std::vector<SlotView> slots;
    double max_classical_tv = 0;
    double max_quantum_distance = 0;
    double max_mixing_deviation = 0;
    bool pass = false;
};

struct ViewOptions {
    double tv_threshold = 0.02;
    double quantum_threshold = 1e-12;
    uint64_t seed = 1;
    /// Drop the pair Pauli tau (negative control).
    bool omit_tau = false;
    size_t workers = 0;
};

/// Runs both programs n_runs times on the honest trap-free variant and
/// compares the server views slot by slot. Throws ValueError if the public
/// shapes differ, ConfigError for variants other than trapfree.
ViewReport view_indistinguishability(const CircuitProgram &program_a, const CircuitProgram &program_b,
                                     Variant variant, size_t n_runs, const ViewOptions &options = {});

/// For every intended gate i and by-product sigma, j -> u' is a bijection.
bool trapfree_index_bijective(const SubstitutionTable &table);

struct EntanglingCertificate {
    size_t schmidt_rank = 0;
    std::vector<double> schmidt_coefficients;
    Complex g1;
    Complex g2;
    bool entangling = false;
    bool cnot_class = false;
    bool identity_class = false;
};

/// Operator-Schmidt rank and Makhlin invariants (G1, G2) of g.
EntanglingCertificate entangling_certificate(const Unitary4 &g);

/// One entry of a gtbqc-audit/1 report.
struct AuditCheck {
    std::string name;
    double statistic = 0;
    double threshold = 0;
    bool pass = false;
    Json details = Json::object();
};

Json audit_report_json(const std::vector<AuditCheck> &checks);

}  // namespace gtbqc
