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

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include <Eigen/SVD>

#include "gtbqc/errors.h"
#include "gtbqc/parallel.h"
#include "gtbqc/protocols.h"

namespace gtbqc {

namespace {

constexpr const char *kAuditSchema = "gtbqc-audit/1";

Mat4 pair_density(const Unitary2 &v) {
    StateVector pair = prepare_phi_v(v);
    Eigen::Vector4cd psi;
    for (size_t k = 0; k < 4; k++) {
        psi((Eigen::Index)k) = pair.amplitude(k);
    }
    return psi * psi.adjoint();
}

CircuitProgram one_gate_program(const Unitary2 &u) {
    CircuitProgram p;
    p.num_qubits = 1;
    p.layers.push_back({{GateRequest::of_matrix(u)}, {}});
    return p;
}

Unitary2 first_correction(const Transcript &t) {
    for (const auto &line : t.lines()) {
        if (line["kind"] == "apply_matrix") {
            return unitary2_from_json(line["payload"]["matrix"]);
        }
    }
    throw ProtocolAbort("haar run sent no correction matrix");
}

}  // namespace

double mixing_check(const Unitary2 &v) {
    Mat4 avg = Mat4::Zero();
    for (Pauli tau : kAllPaulis) {
        avg += 0.25 * pair_density(v * pauli_matrix(tau));
    }
    return (avg - 0.25 * Mat4::Identity()).cwiseAbs().maxCoeff();
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw ValueError("ks_statistic needs two nonempty samples");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            i++;
        }
        while (j < b.size() && b[j] <= x) {
            j++;
        }
        d = std::max(d, std::abs((double)i / (double)a.size() - (double)j / (double)b.size()));
    }
    return d;
}

size_t min_samples(double threshold) {
    if (!(threshold > 0)) {
        throw ValueError("threshold must be positive");
    }
    return (size_t)std::ceil(1e5 * (0.02 / threshold) * (0.02 / threshold));
}

double HaarInvarianceReport::max_distance() const {
    double m = 0;
    for (const auto &d : distances) {
        m = std::max(m, d.ks);
    }
    return m;
}

HaarInvarianceReport haar_invariance_check(const Unitary2 &u1, const Unitary2 &u1_alt, size_t n_samples,
                                           const HaarInvarianceOptions &options) {
    size_t need = min_samples(options.threshold);
    if (n_samples < need) {
        throw InsufficientSamplesError("haar_invariance_check: " + std::to_string(n_samples) +
                                       " samples, threshold needs at least " + std::to_string(need));
    }
    RunOptions run_options;
    run_options.fixed_haar_v = options.fixed_v;
    const CircuitProgram programs[2] = {one_gate_program(u1), one_gate_program(u1_alt)};
    std::vector<Unitary2> corrections(2 * n_samples);
    parallel_for(corrections.size(), options.workers, [&](size_t k) {
        size_t which = k / n_samples;
        uint64_t seed = mix_seed(mix_seed(options.seed, which), k % n_samples);
        corrections[k] = first_correction(run_haar_su2(programs[which], seed, run_options).transcript);
    });

    using Feature = double (*)(const Unitary2 &);
    const std::pair<const char *, Feature> features[] = {
        {"abs_trace", [](const Unitary2 &r) { return std::abs(r.matrix().trace()); }},
        {"abs_r00", [](const Unitary2 &r) { return std::abs(r(0, 0)); }},
        {"abs_r01", [](const Unitary2 &r) { return std::abs(r(0, 1)); }},
    };
    HaarInvarianceReport report;
    report.samples = n_samples;
    report.threshold = options.threshold;
    for (const auto &[name, f] : features) {
        std::vector<double> a, b;
        for (size_t k = 0; k < n_samples; k++) {
            a.push_back(f(corrections[k]));
            b.push_back(f(corrections[n_samples + k]));
        }
        report.distances.push_back({name, ks_statistic(std::move(a), std::move(b))});
    }
    report.pass = report.max_distance() < options.threshold;
    return report;
}

ViewReport view_indistinguishability(const CircuitProgram &program_a, const CircuitProgram &program_b,
                                     Variant variant, size_t n_runs, const ViewOptions &options) {
    if (variant != Variant::kTrapFree) {
        throw ConfigError("view_indistinguishability supports the trapfree variant, got " + variant_name(variant));
    }
    if (program_a.num_qubits != program_b.num_qubits || program_a.layers.size() != program_b.layers.size()) {
        throw ValueError("programs differ in public shape (qubit or layer count)");
    }
    for (size_t l = 0; l < program_a.layers.size(); l++) {
        if (program_a.layers[l].entangle.size() != program_b.layers[l].entangle.size()) {
            throw ValueError("programs differ in public shape at layer " + std::to_string(l));
        }
    }
    size_t need = min_samples(options.tv_threshold);
    if (n_runs < need) {
        throw InsufficientSamplesError("view_indistinguishability: " + std::to_string(n_runs) +
                                       " runs, threshold needs at least " + std::to_string(need));
    }

    const auto gates = default_gate_set(Variant::kTrapFree);
    const auto v_set = default_trapfree_v_set();
    const SubstitutionTable table = build_substitution_table(gates, v_set);
    const size_t num_u = gates.size();

    // Exact posterior of the received pair given (i, F, sigma_gt, u').
    std::map<std::tuple<size_t, Pauli, Pauli, size_t>, Mat4> posterior;
    for (size_t i = 0; i < num_u; i++) {
        for (Pauli f : kAllPaulis) {
            for (Pauli s : kAllPaulis) {
                std::vector<Mat4> sums(num_u, Mat4::Zero());
                std::vector<size_t> counts(num_u, 0);
                for (size_t j = 0; j < num_u; j++) {
                    for (Pauli tau : kAllPaulis) {
                        if (options.omit_tau && tau != Pauli::I) {
                            continue;
                        }
                        Pauli label = (PauliOp(tau) * PauliOp(s) * PauliOp(f)).label;
                        size_t u = table.lookup(i, j, label).u_prime;
                        const Unitary2 &v = v_set[table.lookup(i, j, Pauli::I).v_index];
                        sums[u] += pair_density(v * pauli_matrix(tau));
                        counts[u]++;
                    }
                }
                for (size_t u = 0; u < num_u; u++) {
                    if (counts[u]) {
                        posterior[{i, f, s, u}] = sums[u] / (double)counts[u];
                    }
                }
            }
        }
    }

    std::vector<std::vector<TrapFreeRound>> rounds(2 * n_runs);
    const CircuitProgram *programs[2] = {&program_a, &program_b};
    parallel_for(rounds.size(), options.workers, [&](size_t k) {
        size_t which = k / n_runs;
        RunOptions run_options;
        run_options.omit_tau = options.omit_tau;
        auto &out = rounds[k];
        run_options.trapfree_observer = [&out](const TrapFreeRound &r) { out.push_back(r); };
        run_trap_free(*programs[which], mix_seed(mix_seed(options.seed, which), k % n_runs), run_options);
    });

    size_t num_slots = rounds[0].size();
    for (const auto &r : rounds) {
        if (r.size() != num_slots) {
            throw ValueError("runs differ in slot count; programs do not share a public shape");
        }
    }
    struct SlotAccumulator {
        std::vector<double> index_counts;
        std::map<std::pair<Pauli, size_t>, std::pair<Mat4, size_t>> by_record;
        Mat4 total = Mat4::Zero();
    };
    std::vector<SlotAccumulator> acc[2];
    for (int w = 0; w < 2; w++) {
        acc[w].assign(num_slots, SlotAccumulator{std::vector<double>(num_u, 0.0), {}, Mat4::Zero()});
        for (size_t run = 0; run < n_runs; run++) {
            for (size_t s = 0; s < num_slots; s++) {
                const auto &r = rounds[w * n_runs + run][s];
                auto &a = acc[w][s];
                a.index_counts[r.instruction] += 1;
                const Mat4 &rho = posterior.at({r.gate, r.frame, r.sigma_gt, r.instruction});
                auto &cell = a.by_record[{r.sigma_gt, r.instruction}];
                if (cell.second == 0) {
                    cell.first = Mat4::Zero();
                }
                cell.first += rho;
                cell.second++;
                a.total += rho;
            }
        }
    }

    ViewReport report;
    report.runs = n_runs;
    report.tv_threshold = options.tv_threshold;
    report.quantum_threshold = options.quantum_threshold;
    const MatX quarter = MatX::Identity(4, 4) / 4.0;
    for (size_t s = 0; s < num_slots; s++) {
        SlotView view;
        for (size_t u = 0; u < num_u; u++) {
            view.classical_tv += 0.5 * std::abs(acc[0][s].index_counts[u] - acc[1][s].index_counts[u]) / (double)n_runs;
        }
        for (const auto &[key, cell] : acc[0][s].by_record) {
            auto other = acc[1][s].by_record.find(key);
            if (other == acc[1][s].by_record.end()) {
                continue;
            }
            double d = trace_distance(MatX(cell.first / (double)cell.second),
                                      MatX(other->second.first / (double)other->second.second));
            view.quantum_distance = std::max(view.quantum_distance, d);
        }
        for (int w = 0; w < 2; w++) {
            view.mixing_deviation =
                std::max(view.mixing_deviation, trace_distance(MatX(acc[w][s].total / (double)n_runs), quarter));
        }
        report.max_classical_tv = std::max(report.max_classical_tv, view.classical_tv);
        report.max_quantum_distance = std::max(report.max_quantum_distance, view.quantum_distance);
        report.max_mixing_deviation = std::max(report.max_mixing_deviation, view.mixing_deviation);
        report.slots.push_back(view);
    }
    report.pass = report.max_classical_tv < options.tv_threshold &&
                  report.max_quantum_distance < options.quantum_threshold &&
                  report.max_mixing_deviation < options.quantum_threshold;
    return report;
}

bool trapfree_index_bijective(const SubstitutionTable &table) {
    size_t n = table.num_u();
    for (size_t i = 0; i < n; i++) {
        for (Pauli s : kAllPaulis) {
            std::vector<bool> seen(n, false);
            for (size_t j = 0; j < n; j++) {
                size_t u = table.lookup(i, j, s).u_prime;
                if (u >= n || seen[u]) {
                    return false;
                }
                seen[u] = true;
            }
        }
    }
    return true;
}

EntanglingCertificate entangling_certificate(const Unitary4 &g) {
    const Mat4 &u = g.matrix();
    Mat4 realigned;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (int c = 0; c < 2; c++) {
                for (int d = 0; d < 2; d++) {
                    realigned(2 * a + c, 2 * b + d) = u(2 * a + b, 2 * c + d);
                }
            }
        }
    }
    Eigen::JacobiSVD<Mat4> svd(realigned);
    EntanglingCertificate cert;
    for (Eigen::Index k = 0; k < 4; k++) {
        double s = svd.singularValues()(k);
        cert.schmidt_coefficients.push_back(s);
        if (s > kEqualityTol) {
            cert.schmidt_rank++;
        }
    }
    const double h = 1 / std::sqrt(2.0);
    const Complex i(0, 1);
    Mat4 q;
    q << h, 0, 0, i * h, 0, i * h, h, 0, 0, i * h, -h, 0, h, 0, 0, -i * h;
    Mat4 ub = q.adjoint() * u * q;
    Mat4 m = ub.transpose() * ub;
    Complex det = u.determinant();
    Complex tr = m.trace();
    cert.g1 = tr * tr / (16.0 * det);
    cert.g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
    cert.entangling = cert.schmidt_rank > 1;
    cert.cnot_class = std::abs(cert.g1) < kEqualityTol && std::abs(cert.g2 - 1.0) < kEqualityTol;
    cert.identity_class = std::abs(cert.g1 - 1.0) < kEqualityTol && std::abs(cert.g2 - 3.0) < kEqualityTol;
    return cert;
}

Json audit_report_json(const std::vector<AuditCheck> &checks) {
    Json list = Json::array();
    bool all = true;
    for (const auto &c : checks) {
        list.push_back(Json{{"name", c.name},
                            {"statistic", c.statistic},
                            {"threshold", c.threshold},
                            {"pass", c.pass},
                            {"details", c.details}});
        all = all && c.pass;
    }
    return Json{{"schema", kAuditSchema}, {"checks", list}, {"pass", all}};
}

}  // namespace gtbqc
