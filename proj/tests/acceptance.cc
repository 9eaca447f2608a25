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


// Acceptance suite: one PASS/FAIL line per criterion. Arguments select
// criteria by number; none runs all. Exit status 0 iff every selected
// criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "cli.h"
#include "gtbqc/audit.h"
#include "gtbqc/mqc.h"
#include "gtbqc/pauli_frame.h"
#include "gtbqc/protocols.h"

using namespace gtbqc;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Verdict gate_teleportation() {
    Rng rng(101);
    const int trials = 10000;
    double worst = 1;
    int counts[4] = {};
    for (int t = 0; t < trials; t++) {
        Unitary2 v = haar_su2(rng);
        StateVector reg(1);
        reg.apply_1q(0, haar_su2(rng));
        StateVector expected = reg;
        Pauli sigma = gt_procedure(reg, 0, prepare_phi_v(v), rng);
        counts[(size_t)sigma]++;
        expected.apply_1q(0, v * pauli_matrix(sigma));
        worst = std::min(worst, fidelity_up_to_phase(reg, expected));
    }
    bool freq_ok = true;
    std::string freqs;
    for (int c : counts) {
        double f = (double)c / trials;
        freq_ok &= std::abs(f - 0.25) <= 0.02;
        freqs += fmt(" %.4f", f);
    }
    return {worst >= 1 - 1e-10 && freq_ok, fmt("min fidelity 1-%.1e, sigma frequencies", 1 - worst) + freqs};
}

Verdict stochastic_statistics() {
    Rng programs(202);
    std::vector<double> attempts;
    for (uint64_t seed = 0; attempts.size() < 100000; seed++) {
        auto p = random_program(4, 6, 3, programs);
        auto r = run_stochastic(p, seed);
        attempts.insert(attempts.end(), r.attempts.begin(), r.attempts.end());
    }
    double mean = 0, var = 0;
    for (double a : attempts) {
        mean += a;
    }
    mean /= (double)attempts.size();
    for (double a : attempts) {
        var += (a - mean) * (a - mean);
    }
    var /= (double)(attempts.size() - 1);
    bool ok = mean >= 3.9 && mean <= 4.1 && var >= 11.3 && var <= 12.7;
    return {ok, fmt("%zu delegated gates, mean attempts %.4f, variance %.3f", attempts.size(), mean, var)};
}

Verdict criterion_checkers() {
    auto two = check_two_qubit_commutation(cz_gate());
    auto gates = default_gate_set(Variant::kClifford);
    auto one = check_one_qubit_commutation(gates);
    auto csz = check_two_qubit_commutation(controlled_phase(kPi / 2));
    std::string counter = "none";
    if (csz.counterexample.has_value()) {
        const char *names = "IXYZ";
        counter = fmt("W (%c (x) %c) W^dagger not a Pauli pair", names[csz.counterexample->first],
                      names[csz.counterexample->second]);
    }
    bool ok = two.holds && one.holds && !csz.holds && csz.counterexample.has_value();
    return {ok, fmt("CZ %s, {H, HZ(+-pi/4)} %s, controlled-sqrt(Z) %s: %s", two.holds ? "passes" : "fails",
                    one.holds ? "passes" : "fails", csz.holds ? "passes" : "fails", counter.c_str())};
}

Verdict trapfree_identities() {
    auto u = [](long k) { return hadamard() * z_rotation(kPi * (double)k / 4); };
    double worst = 0;
    size_t checked = 0;
    for (long i = 0; i < 8; i++) {
        for (long j = 0; j < 8; j++) {
            Unitary2 v = u(j).adjoint() * u(i);
            struct Case {
                Unitary2 lhs, rhs;
                Complex phase;
            } cases[] = {
                {u(j) * v, u(i), 1},
                {u(j) * v * pauli_matrix(Pauli::Z), pauli_matrix(Pauli::X) * u(i), 1},
                {u(j - 2 * i) * v * pauli_matrix(Pauli::X), pauli_matrix(Pauli::Z) * u(i), 1},
                {u(j - 2 * i) * v * pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Y) * u(i), -1},
            };
            for (const auto &c : cases) {
                auto p = relative_phase(c.lhs.matrix(), c.rhs.matrix());
                worst = std::max(worst, p.has_value() ? std::abs(*p - c.phase) : 1.0);
                checked++;
            }
        }
    }
    auto gates = default_gate_set(Variant::kTrapFree);
    auto v_set = default_trapfree_v_set();
    auto table = build_substitution_table(gates, v_set);
    size_t table_ok = 0;
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = 0; j < 8; j++) {
            for (Pauli s : kAllPaulis) {
                const auto &e = table.lookup(i, j, s);
                Unitary2 lhs = gates[e.u_prime] * v_set[e.v_index] * pauli_matrix(s);
                Unitary2 rhs = pauli_matrix(e.sigma_prime) * gates[i];
                table_ok += phase_equal(lhs, rhs) && phase_equal(v_set[e.v_index], gates[j].adjoint() * gates[i]);
            }
        }
    }
    bool ok = worst < 1e-10 && table_ok == 256 && trapfree_index_bijective(table);
    return {ok, fmt("%zu integer-index identities, max phase error %.1e (phases +1, +1, -1); %zu/256 reduced table "
                    "entries phase-equal",
                    checked, worst, table_ok)};
}

Verdict mixing() {
    Rng rng(505);
    double worst = std::max(mixing_check(Unitary2::identity()), mixing_check(hadamard() * z_rotation(kPi / 4)));
    for (int k = 0; k < 1000; k++) {
        worst = std::max(worst, mixing_check(haar_su2(rng)));
    }
    return {worst < 1e-12, fmt("max deviation over 1002 unitaries %.2e", worst)};
}

Verdict end_to_end() {
    Rng rng(606);
    std::string detail;
    bool ok = true;
    for (Variant v : {Variant::kStochastic, Variant::kClifford, Variant::kHaar, Variant::kTrapFree}) {
        double worst = 1;
        size_t gates = default_gate_set(v).size();
        for (uint64_t k = 0; k < 50; k++) {
            auto p = random_program(1 + rng.uniform_index(4), 1 + rng.uniform_index(6), gates, rng);
            worst = std::min(worst, run_variant(v, p, 6000 + k).fidelity);
        }
        ok &= worst >= 1 - 1e-9;
        detail += fmt("%s%s 1-%.1e", detail.empty() ? "" : ", ", variant_name(v).c_str(), 1 - worst);
    }
    return {ok, "min decoded fidelity: " + detail};
}

CircuitProgram two_qubit_program(size_t a0, size_t a1, size_t b0, size_t b1, bool entangle) {
    CircuitProgram p;
    p.num_qubits = 2;
    p.layers = {{{GateRequest::of_index(a0), GateRequest::of_index(a1)}, {entangle}},
                {{GateRequest::of_index(b0), GateRequest::of_index(b1)}, {}}};
    return p;
}

Verdict blindness() {
    auto a = two_qubit_program(0, 3, 5, 7, true);
    auto b = two_qubit_program(6, 1, 2, 2, false);
    auto honest = view_indistinguishability(a, b, Variant::kTrapFree, 100000);
    ViewOptions control;
    control.omit_tau = true;
    auto broken = view_indistinguishability(a, b, Variant::kTrapFree, 100000, control);
    bool ok = honest.pass && honest.max_classical_tv < 0.02 && honest.max_quantum_distance < 1e-12 &&
              honest.max_mixing_deviation < 1e-12 && !broken.pass;
    return {ok, fmt("max slot TV %.4f, quantum distance %.1e, deviation from 1/4 %.1e; tau omitted: quantum "
                    "distance %.3f (%s)",
                    honest.max_classical_tv, honest.max_quantum_distance, honest.max_mixing_deviation,
                    broken.max_quantum_distance, broken.pass ? "not detected" : "detected")};
}

Verdict haar_invariance() {
    auto honest = haar_invariance_check(Unitary2::identity(), hadamard(), 100000);
    HaarInvarianceOptions fixed;
    fixed.fixed_v = Unitary2::identity();
    auto control = haar_invariance_check(Unitary2::identity(), hadamard(), 100000, fixed);
    double ks = honest.distances[0].ks;
    double ks_control = control.distances[0].ks;
    return {ks < 0.02 && ks_control >= 0.02,
            fmt("KS on |tr R_1| %.4f; fixed-V control %.4f", ks, ks_control)};
}

Verdict mqc() {
    auto t = cluster_tensors();
    double worst = 0;
    for (size_t n = 1; n <= 8; n++) {
        StateVector s(n);
        for (size_t q = 0; q < n; q++) {
            s.apply_1q(q, hadamard());
        }
        for (size_t q = 0; q + 1 < n; q++) {
            s.apply_2q(q, q + 1, cz_gate());
        }
        std::vector<Complex> amps(size_t{1} << n);
        double norm = 0;
        for (size_t idx = 0; idx < amps.size(); idx++) {
            std::vector<size_t> config(n);
            for (size_t q = 0; q < n; q++) {
                config[q] = (idx >> (n - 1 - q)) & 1;
            }
            amps[idx] = mps_amplitude(t, config);
            norm += std::norm(amps[idx]);
        }
        for (size_t idx = 0; idx < amps.size(); idx++) {
            worst = std::max(worst, std::abs(amps[idx] / std::sqrt(norm) - s.amplitude(idx)));
        }
    }
    std::vector<size_t> targets{0, 1, 2, 3, 4, 5, 6, 7};
    auto table = check_blind_criterion(t, oneway_v_set(), oneway_measurements(), targets, ByproductSet::paulis());
    Rng rng(909);
    auto angles = discrete_oneway_angles();
    size_t good = 0;
    for (uint64_t k = 0; k < 1000; k++) {
        std::vector<double> pattern;
        for (int s = 0; s < 4; s++) {
            pattern.push_back(angles[rng.uniform_index(angles.size())]);
        }
        auto r = run_blind_oneway(pattern, k);
        auto e = projective_unitary(r.realized * r.intended.adjoint());
        good += r.byproduct.has_value() && e.has_value() && ByproductSet::paulis().find(*e).has_value() &&
                r.output_fidelity >= 1 - 1e-10;
    }
    bool ok = worst < 1e-10 && table.every_v && good == 1000;
    return {ok, fmt("max MPS amplitude error (N<=8) %.1e; measurement table complete: %s; %zu/1000 patterns "
                    "realized up to a Pauli",
                    worst, table.every_v ? "yes" : "no", good)};
}

Verdict entangling() {
    auto id = entangling_certificate(r_gate(Unitary2::identity()));
    auto s = entangling_certificate(r_gate(entangler()));
    bool ok = !id.entangling && id.schmidt_rank == 1 && s.entangling && s.cnot_class;
    return {ok, fmt("R(I): Schmidt rank %zu (%s); R(X(-pi/4)): Schmidt rank %zu, G1 = %.3f%+.3fi, G2 = %.3f%+.3fi "
                    "(CNOT class needs G1 = 0, G2 = 1)",
                    id.schmidt_rank, id.entangling ? "entangling" : "product", s.schmidt_rank, s.g1.real(),
                    s.g1.imag(), s.g2.real(), s.g2.imag())};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Verdict determinism() {
    const fs::path data = GTBQC_DATA_DIR;
    struct Case {
        const char *variant;
        const char *program;
    } cases[] = {{"stochastic", "brickwork4.json"},
                 {"clifford", "brickwork4.json"},
                 {"haar", "brickwork4.json"},
                 {"trapfree", "trapfree4.json"},
                 {"mqc-oneway", "oneway.json"}};
    size_t identical = 0;
    for (const auto &c : cases) {
        std::string bytes[2];
        for (int rep = 0; rep < 2; rep++) {
            fs::path dir = fs::temp_directory_path() / fmt("gtbqc_acceptance_%s_%d", c.variant, rep);
            fs::remove_all(dir);
            std::ostringstream out, err;
            int code = cli::run_cli({"run", "--variant", c.variant, "--program", (data / "programs" / c.program).string(),
                                     "--seed", "1234", "--shots", "4", "--out", dir.string()},
                                    out, err);
            if (code != 0) {
                return {false, std::string(c.variant) + " run failed: " + err.str()};
            }
            bytes[rep] = slurp(dir / "transcript.jsonl");
        }
        identical += !bytes[0].empty() && bytes[0] == bytes[1];
    }
    return {identical == 5, fmt("%zu/5 variants byte-identical on re-run", identical)};
}

struct Criterion {
    int number;
    const char *name;
    double time_limit_s;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char **argv) {
    const Criterion criteria[] = {
        {1, "gate teleportation contract", 10, gate_teleportation},
        {2, "stochastic GT attempt statistics", 60, stochastic_statistics},
        {3, "commutation criterion checkers", 1, criterion_checkers},
        {4, "trap-free substitution identities", 1, trapfree_identities},
        {5, "pair mixing identity", 5, mixing},
        {6, "end-to-end decoded fidelity", 300, end_to_end},
        {7, "server view indistinguishability", 300, blindness},
        {8, "Haar invariance of corrections", 120, haar_invariance},
        {9, "measurement-based blind computation", 120, mqc},
        {10, "entangling certificate", 1, entangling},
        {11, "transcript determinism", 0, determinism},
    };
    std::vector<int> selected;
    for (int k = 1; k < argc; k++) {
        selected.push_back(std::atoi(argv[k]));
    }
    bool all = true;
    for (const auto &c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) {
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
        bool pass = v.pass && in_time;
        all &= pass;
        std::string limit = c.time_limit_s > 0 ? fmt(" (limit %.0f s)", c.time_limit_s) : "";
        std::printf("[%s] %2d %s: %s; %.2f s%s\n", pass ? "PASS" : "FAIL", c.number, c.name, v.detail.c_str(), secs,
                    limit.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
