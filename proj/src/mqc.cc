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

#include "gtbqc/errors.h"
#include "gtbqc/protocols.h"
#include "gtbqc/server.h"

namespace gtbqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char *kMpsSchema = "gtbqc-mps/1";

MatX dense_kron(const MatX &a, const MatX &b) {
    MatX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

VecX vector_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("vector must be a nonempty array");
    }
    VecX v((Eigen::Index)j.size());
    for (size_t k = 0; k < j.size(); k++) {
        v((Eigen::Index)k) = complex_from_json(j[k]);
    }
    return v;
}

Json vector_to_json(const VecX &v) {
    Json out = Json::array();
    for (Eigen::Index k = 0; k < v.size(); k++) {
        out.push_back(complex_to_json(v(k)));
    }
    return out;
}

// Wraps to [0, 2 pi).
double wrap_angle(double a) {
    double w = std::fmod(a, 2 * kPi);
    return w < 0 ? w + 2 * kPi : w;
}

// Index k with angle ~ k pi / 4 (mod 2 pi), if any.
std::optional<size_t> eighth_index(double angle) {
    double k = wrap_angle(angle) / (kPi / 4);
    double r = std::round(k);
    if (std::abs(k - r) > 1e-9) {
        return std::nullopt;
    }
    return (size_t)r % 8;
}

// Measurement angle realizing A[alpha+] behind by-product e.
double adjusted_angle(double alpha, Pauli e) {
    switch (e) {
        case Pauli::I:
            return alpha;
        case Pauli::Z:
            return alpha + kPi;
        case Pauli::X:
            return -alpha;
        case Pauli::Y:
            return kPi - alpha;
    }
    return alpha;
}

// Angle beta such that measuring M_beta after V_gamma sigma realizes M_target.
double analytic_beta(double target, Pauli sigma, double gamma) {
    switch (sigma) {
        case Pauli::I:
            return target + gamma;
        case Pauli::Z:
            return target + gamma - kPi;
        case Pauli::X:
            return gamma - target;
        case Pauli::Y:
            return gamma - target + kPi;
    }
    return target;
}

}  // namespace

void MPSTensorSet::validate() const {
    if (site_dim == 0 || bond_dim == 0) {
        throw ValueError("MPS dimensions must be positive");
    }
    if (matrices.size() != site_dim) {
        throw ValueError("MPS needs one matrix per site state");
    }
    auto d = (Eigen::Index)bond_dim;
    for (const auto &m : matrices) {
        if (m.rows() != d || m.cols() != d) {
            throw ValueError("MPS matrix has the wrong shape");
        }
        if (!m.allFinite()) {
            throw ValueError("MPS matrix has non-finite entries");
        }
    }
    if (left.size() != d || right.size() != d || !left.allFinite() || !right.allFinite()) {
        throw ValueError("MPS boundary vectors have the wrong size or non-finite entries");
    }
}

MPSTensorSet cluster_tensors() {
    const double h = 1 / std::sqrt(2.0);
    MPSTensorSet t;
    t.site_dim = 2;
    t.bond_dim = 2;
    MatX a0(2, 2), a1(2, 2);
    a0 << h, 0, h, 0;
    a1 << 0, h, 0, -h;
    t.matrices = {a0, a1};
    t.left = VecX(2);
    t.left << 1, 0;
    t.right = VecX(2);
    t.right << h, h;
    return t;
}

MPSTensorSet mps_from_json(const Json &j) {
    if (!j.is_object() || j.value("schema", "") != kMpsSchema) {
        throw ParseError(std::string("MPS file must have schema \"") + kMpsSchema + "\"");
    }
    if (j.contains("site_matrices")) {
        throw ConfigError("site-dependent tensors are not supported; give one translation-invariant set");
    }
    MPSTensorSet t;
    try {
        t.site_dim = j.at("site_dim").get<size_t>();
        t.bond_dim = j.at("bond_dim").get<size_t>();
        for (const auto &m : j.at("matrices")) {
            t.matrices.push_back(matrix_from_json(m));
        }
        t.left = vector_from_json(j.at("left"));
        t.right = vector_from_json(j.at("right"));
    } catch (const Json::exception &e) {
        throw ParseError(std::string("MPS file: ") + e.what());
    }
    try {
        t.validate();
    } catch (const ValueError &e) {
        throw ParseError(std::string("MPS file: ") + e.what());
    }
    return t;
}

Json mps_to_json(const MPSTensorSet &t) {
    Json matrices = Json::array();
    for (const auto &m : t.matrices) {
        matrices.push_back(matrix_to_json(m));
    }
    return Json{{"schema", kMpsSchema},
                {"site_dim", t.site_dim},
                {"bond_dim", t.bond_dim},
                {"matrices", matrices},
                {"left", vector_to_json(t.left)},
                {"right", vector_to_json(t.right)}};
}

Complex mps_amplitude(const MPSTensorSet &t, const std::vector<size_t> &config) {
    VecX v = t.right;
    for (size_t i : config) {
        if (i >= t.site_dim) {
            throw ValueError("MPS configuration index " + std::to_string(i) + " out of range");
        }
        v = t.matrices[i] * v;
    }
    return t.left.transpose() * v;
}

MatX measured_operator(const MPSTensorSet &t, const VecX &phi) {
    if ((size_t)phi.size() != t.site_dim) {
        throw ValueError("outcome vector dimension does not match the site dimension");
    }
    MatX out = MatX::Zero((Eigen::Index)t.bond_dim, (Eigen::Index)t.bond_dim);
    for (size_t i = 0; i < t.site_dim; i++) {
        out += std::conj(phi((Eigen::Index)i)) * t.matrices[i];
    }
    return out;
}

MatX correlation_sequence(const MPSTensorSet &t, const std::vector<VecX> &outcomes) {
    MatX out = MatX::Identity((Eigen::Index)t.bond_dim, (Eigen::Index)t.bond_dim);
    for (const auto &phi : outcomes) {
        out = measured_operator(t, phi) * out;
    }
    return out;
}

std::optional<MatX> projective_unitary(const MatX &m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        return std::nullopt;
    }
    double scale = std::sqrt((m.adjoint() * m).trace().real() / (double)m.rows());
    if (!(scale > kEqualityTol)) {
        return std::nullopt;
    }
    MatX u = m / scale;
    if (unitarity_defect(u) > kEqualityTol) {
        return std::nullopt;
    }
    return u;
}

MatX byproduct_of(const MPSTensorSet &t, const VecX &phi_actual, const MatX &u_intended) {
    auto u = projective_unitary(u_intended);
    if (!u.has_value()) {
        throw ValueError("intended operator is not proportional to a unitary");
    }
    auto a = projective_unitary(measured_operator(t, phi_actual));
    if (!a.has_value()) {
        throw ValueError("measured operator is singular or not proportional to a unitary");
    }
    return *a * u->adjoint();
}

ByproductSet::ByproductSet(std::vector<MatX> elements) {
    for (auto &e : elements) {
        auto u = projective_unitary(e);
        if (!u.has_value()) {
            throw ValueError("by-product elements must be proportional to unitaries");
        }
        elements_.push_back(*u);
    }
    if (elements_.empty()) {
        throw ValueError("by-product set is empty");
    }
    auto dim = elements_.front().rows();
    for (const auto &e : elements_) {
        if (e.rows() != dim) {
            throw ValueError("by-product elements differ in dimension");
        }
    }
    if (!find(MatX::Identity(dim, dim)).has_value()) {
        throw ValueError("by-product set must contain the identity");
    }
    for (const auto &a : elements_) {
        for (const auto &b : elements_) {
            if (!find(a * b).has_value()) {
                throw ValueError("by-product set is not closed under multiplication");
            }
        }
    }
}

ByproductSet ByproductSet::paulis() {
    std::vector<MatX> out;
    for (Pauli p : kAllPaulis) {
        out.push_back(pauli_matrix(p).matrix());
    }
    return ByproductSet(out);
}

std::optional<size_t> ByproductSet::find(const MatX &m) const {
    auto u = projective_unitary(m);
    if (!u.has_value()) {
        return std::nullopt;
    }
    for (size_t k = 0; k < elements_.size(); k++) {
        if (elements_[k].rows() == u->rows() && phase_equal(*u, elements_[k])) {
            return k;
        }
    }
    return std::nullopt;
}

const ManageabilityWitness *ManageabilityReport::lookup(size_t u_index, size_t e_index) const {
    for (const auto &w : witnesses) {
        if (w.u_index == u_index && w.e_index == e_index) {
            return &w;
        }
    }
    return nullptr;
}

ManageabilityReport check_manageable(const MPSTensorSet &t, const ByproductSet &e_set,
                                     const std::vector<MatX> &u_set, const std::vector<MeasurementBasis> &meas_set,
                                     const MatX &w) {
    t.validate();
    ManageabilityReport report;
    report.one_site_holds = true;
    const auto &es = e_set.elements();
    for (size_t j = 0; j < u_set.size() && report.one_site_holds; j++) {
        for (size_t e = 0; e < es.size(); e++) {
            std::optional<size_t> found;
            for (size_t i = 0; i < meas_set.size() && !found; i++) {
                bool all = true;
                for (const auto &phi : meas_set[i].outcomes()) {
                    if (!e_set.find(measured_operator(t, phi) * es[e] * u_set[j].adjoint()).has_value()) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    found = i;
                }
            }
            if (!found.has_value()) {
                report.one_site_holds = false;
                report.counterexample = "no measurement manages by-product " + std::to_string(e) + " " +
                                        format_matrix(es[e]) + " before U_" + std::to_string(j) + " " +
                                        format_matrix(u_set[j]);
                break;
            }
            report.witnesses.push_back({j, e, *found});
        }
    }
    report.two_site_holds = true;
    for (size_t a = 0; a < es.size() && report.two_site_holds; a++) {
        for (size_t b = 0; b < es.size(); b++) {
            MatX lhs = w * dense_kron(es[a], es[b]);
            bool found = false;
            for (size_t c = 0; c < es.size() && !found; c++) {
                for (size_t d = 0; d < es.size() && !found; d++) {
                    found = relative_phase(lhs, dense_kron(es[c], es[d]) * w).has_value();
                }
            }
            if (!found) {
                report.two_site_holds = false;
                if (report.counterexample.empty()) {
                    report.counterexample = "W (E_" + std::to_string(a) + " (x) E_" + std::to_string(b) +
                                            ") has no image in E (x) E W";
                }
                break;
            }
        }
    }
    report.holds = report.one_site_holds && report.two_site_holds;
    return report;
}

std::vector<size_t> BlindCriterionReport::measurements_for(size_t target, Pauli sigma, size_t v_index) const {
    std::vector<size_t> out;
    for (const auto &e : entries) {
        if (e.target == target && e.sigma == sigma && e.v_index == v_index) {
            out.push_back(e.measurement);
        }
    }
    return out;
}

BlindCriterionReport check_blind_criterion(const MPSTensorSet &t, const std::vector<Unitary2> &v_set,
                                           const std::vector<MeasurementBasis> &meas_set,
                                           const std::vector<size_t> &targets, const ByproductSet &e_set) {
    t.validate();
    if (t.site_dim != 2) {
        throw ValueError("blind criterion needs qubit sites");
    }
    std::vector<std::vector<MatX>> a_dagger(meas_set.size());
    for (size_t m = 0; m < meas_set.size(); m++) {
        if (meas_set[m].dimension() != 2) {
            throw ValueError("measurements must act on qubit sites");
        }
        for (const auto &phi : meas_set[m].outcomes()) {
            a_dagger[m].push_back(measured_operator(t, phi).adjoint());
        }
    }
    BlindCriterionReport report;
    report.holds = true;
    report.every_v = true;
    for (size_t target : targets) {
        if (target >= meas_set.size()) {
            throw ValueError("target measurement index out of range");
        }
        for (Pauli sigma : kAllPaulis) {
            bool any = false;
            for (size_t v = 0; v < v_set.size(); v++) {
                Mat2 pre = pauli_matrix(sigma).matrix() * v_set[v].matrix().adjoint();
                bool any_for_v = false;
                for (size_t j = 0; j < meas_set.size(); j++) {
                    bool all = true;
                    for (const auto &phi_j : meas_set[j].outcomes()) {
                        MatX a = measured_operator(t, VecX(pre * phi_j));
                        for (const auto &ai : a_dagger[target]) {
                            if (!e_set.find(a * ai).has_value()) {
                                all = false;
                                break;
                            }
                        }
                        if (!all) {
                            break;
                        }
                    }
                    if (all) {
                        report.entries.push_back({target, sigma, v, j});
                        any_for_v = true;
                    }
                }
                any |= any_for_v;
                if (!any_for_v) {
                    report.every_v = false;
                }
            }
            if (!any) {
                report.holds = false;
                if (report.counterexample.empty()) {
                    report.counterexample = "no (M_j, V) for target " + std::to_string(target) + ", sigma " +
                                            std::string(1, pauli_char(sigma));
                }
            }
        }
    }
    report.every_v = report.every_v && report.holds;
    return report;
}

MatX measurement_substitution(const MeasurementBasis &m_i, const MeasurementBasis &m_j) {
    if (m_i.dimension() != m_j.dimension() || m_i.size() != m_j.size()) {
        throw ValueError("measurement_substitution: bases differ in dimension or outcome count");
    }
    auto dim = (Eigen::Index)m_i.dimension();
    MatX v = MatX::Zero(dim, dim);
    for (size_t k = 0; k < m_i.size(); k++) {
        v += m_j.outcome(k) * m_i.outcome(k).adjoint();
    }
    return v;
}

std::vector<double> discrete_oneway_angles() {
    return {kPi, kPi / 2, kPi / 4, -kPi / 4};
}

std::vector<MeasurementBasis> oneway_measurements() {
    std::vector<MeasurementBasis> out;
    for (int k = 0; k < 8; k++) {
        out.push_back(MeasurementBasis::theta(kPi * k / 4));
    }
    return out;
}

std::vector<Unitary2> oneway_v_set() {
    std::vector<Unitary2> out;
    for (int k = 0; k < 8; k++) {
        out.push_back(z_rotation(-kPi * k / 4));
    }
    return out;
}

namespace {

const BlindCriterionReport &oneway_table() {
    static const BlindCriterionReport table = [] {
        std::vector<size_t> targets{0, 1, 2, 3, 4, 5, 6, 7};
        auto r = check_blind_criterion(cluster_tensors(), oneway_v_set(), oneway_measurements(), targets,
                                       ByproductSet::paulis());
        if (!r.every_v) {
            throw ConfigError("one-way blind criterion table is incomplete: " + r.counterexample);
        }
        return r;
    }();
    return table;
}

const char *mode_name(OnewayOptions::Mode m) {
    switch (m) {
        case OnewayOptions::Mode::kTable:
            return "table";
        case OnewayOptions::Mode::kStochastic:
            return "stochastic";
        case OnewayOptions::Mode::kContinuous:
            return "continuous";
    }
    return "";
}

}  // namespace

OnewayResult run_blind_oneway(const std::vector<double> &pattern, uint64_t seed, const OnewayOptions &options) {
    if (pattern.empty()) {
        throw ValueError("one-way pattern is empty");
    }
    if (pattern.size() + 1 > StateVector::kDefaultMaxQubits - 2) {
        throw ValueError("one-way pattern too long for the simulator");
    }
    bool discrete = options.mode != OnewayOptions::Mode::kContinuous;
    for (double a : pattern) {
        if (!std::isfinite(a)) {
            throw ValueError("pattern angles must be finite");
        }
        if (discrete) {
            bool allowed = false;
            for (double b : discrete_oneway_angles()) {
                allowed |= eighth_index(a) == eighth_index(b);
            }
            if (!allowed) {
                throw ValueError("angle " + std::to_string(a) + " is not in the discrete set {pi, pi/2, +-pi/4}");
            }
        }
    }

    const MPSTensorSet tensors = cluster_tensors();
    const ByproductSet paulis = ByproductSet::paulis();
    const auto meas = oneway_measurements();
    const auto v_set = oneway_v_set();
    size_t n = pattern.size();

    Rng rng = Rng::substream(seed, 0);
    Transcript transcript(Json{{"variant", "mqc-oneway"},
                               {"mode", mode_name(options.mode)},
                               {"seed", seed},
                               {"client_stream", mix_seed(seed, 0)},
                               {"server_stream", mix_seed(seed, 1)},
                               {"num_qubits", n + 1}});
    Server server(n + 1, {}, CheatModel{}, Rng::substream(seed, 1));
    Channel channel(server, transcript);
    channel.send(messages::prepare_cluster());

    auto gt = [&](size_t q) {
        channel.send(messages::gt(q));
        return pauli_from_char(channel.receive("bell").payload["sigma"].get<std::string>().at(0));
    };

    OnewayResult result;
    result.realized = MatX::Identity(2, 2);
    result.intended = MatX::Identity(2, 2);
    Pauli e = Pauli::I;
    for (size_t site = 0; site < n; site++) {
        result.intended =
            measured_operator(tensors, MeasurementBasis::theta(pattern[site]).outcome(0)) * result.intended;
        double target = adjusted_angle(pattern[site], e);
        VecX projected;
        double beta = 0;
        if (options.mode == OnewayOptions::Mode::kStochastic) {
            auto ti = eighth_index(target);
            size_t j = rng.uniform_index(meas.size());
            MatX vij = measurement_substitution(meas[*ti], meas[j]);
            Unitary2 v{Mat2(vij)};
            Unitary2 cur = v;
            for (size_t attempt = 1;; attempt++) {
                if (attempt > options.max_attempts) {
                    throw ProtocolAbort("stochastic GT exceeded the attempt cap");
                }
                channel.send(messages::pair(prepare_phi_v(cur)));
                Pauli sigma = gt(site);
                if (sigma == Pauli::I) {
                    break;
                }
                cur = next_stochastic_v(cur, sigma);
            }
            beta = kPi * (double)j / 4;
            channel.send(messages::measure_angle(site, beta));
            auto k = channel.receive("measure_outcome").payload["outcome"].get<size_t>();
            projected = v.matrix().adjoint() * meas[j].outcome(k);
        } else {
            Unitary2 v;
            size_t g = 0;
            double gamma = 0;
            if (options.mode == OnewayOptions::Mode::kTable) {
                g = rng.uniform_index(v_set.size());
                v = v_set[g];
            } else {
                gamma = rng.uniform() * 2 * kPi;
                v = z_rotation(-gamma);
            }
            channel.send(messages::pair(prepare_phi_v(v)));
            Pauli sigma = gt(site);
            MeasurementBasis basis = MeasurementBasis::computational();
            if (options.mode == OnewayOptions::Mode::kTable) {
                auto candidates = oneway_table().measurements_for(*eighth_index(target), sigma, g);
                size_t j = candidates[rng.uniform_index(candidates.size())];
                beta = kPi * (double)j / 4;
                basis = meas[j];
            } else {
                beta = wrap_angle(analytic_beta(target, sigma, gamma));
                basis = MeasurementBasis::theta(beta);
            }
            channel.send(messages::measure_angle(site, beta));
            auto k = channel.receive("measure_outcome").payload["outcome"].get<size_t>();
            projected = pauli_matrix(sigma).matrix() * v.matrix().adjoint() * basis.outcome(k);
        }
        result.server_angles.push_back(beta);
        result.realized = measured_operator(tensors, projected) * result.realized;
        auto found = paulis.find(result.realized * result.intended.adjoint());
        if (!found.has_value()) {
            throw ProtocolAbort("realized operator left the Pauli frame at site " + std::to_string(site));
        }
        e = kAllPaulis[*found];
    }
    result.byproduct = e;

    // Harness-side check of the output qubit against the bookkeeping.
    size_t keep[1] = {n};
    DensityMatrix rho = reduced_density(server.register_state(), keep);
    VecX expected = result.realized * tensors.right;
    expected.normalize();
    result.output_fidelity = (expected.adjoint() * rho.matrix() * expected)(0, 0).real();
    channel.send(messages::done());

    transcript.set_outcome(Json{{"byproduct", std::string(1, pauli_char(e))},
                                {"output_fidelity", result.output_fidelity},
                                {"server_angles", result.server_angles}});
    result.transcript = std::move(transcript);
    return result;
}

}  // namespace gtbqc
