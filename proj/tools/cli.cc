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


#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>

#include "CLI11.hpp"
#include "gtbqc/audit.h"
#include "gtbqc/errors.h"
#include "gtbqc/mqc.h"
#include "gtbqc/parallel.h"
#include "gtbqc/pauli_frame.h"
#include "gtbqc/protocols.h"
#include "gtbqc/traps.h"

namespace gtbqc::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
    std::string variant = "trapfree";
    std::string program;
    std::optional<uint64_t> seed;
    size_t shots = 1;
    double traps = 0;
    std::string cheat = "honest";
    std::string out;
    bool batch_pairs = false;
    size_t max_attempts = 200;
    size_t workers = 0;
};

// Config-file keys replace the flag values.
void apply_config(RunConfig &c, const std::string &path) {
    Json j = read_json_file(path);
    if (!j.is_object()) {
        throw ParseError("run config must be an object");
    }
    static const std::vector<std::string> known{"variant", "program", "seed",        "shots",
                                                "traps",   "cheat",   "batch_pairs", "out", "workers", "max_attempts"};
    for (const auto &[key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("unknown run config key '" + key + "'");
        }
    }
    try {
        if (j.contains("variant")) c.variant = j["variant"].get<std::string>();
        if (j.contains("program")) {
            fs::path p = j["program"].get<std::string>();
            c.program = p.is_absolute() ? p.string() : (fs::path(path).parent_path() / p).string();
        }
        if (j.contains("seed")) c.seed = j["seed"].get<uint64_t>();
        if (j.contains("shots")) c.shots = j["shots"].get<size_t>();
        if (j.contains("traps")) c.traps = j["traps"].get<double>();
        if (j.contains("cheat")) c.cheat = j["cheat"].get<std::string>();
        if (j.contains("batch_pairs")) c.batch_pairs = j["batch_pairs"].get<bool>();
        if (j.contains("out")) c.out = j["out"].get<std::string>();
        if (j.contains("workers")) c.workers = j["workers"].get<size_t>();
        if (j.contains("max_attempts")) c.max_attempts = j["max_attempts"].get<size_t>();
    } catch (const Json::exception &e) {
        throw ParseError(std::string("run config: ") + e.what());
    }
}

void write_file(const fs::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::ios_base::failure("cannot open " + path.string() + " for writing");
    }
    f << text;
    if (!f) {
        throw std::ios_base::failure("write to " + path.string() + " failed");
    }
}

void emit(const Json &report, const std::string &out_file, std::ostream &out) {
    std::string text = report.dump(2) + "\n";
    if (out_file.empty()) {
        out << text;
        return;
    }
    fs::path p(out_file);
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    write_file(p, text);
}

struct Moments {
    size_t count = 0;
    double mean = 0;
    double variance = 0;
    double min = 0;
};

Moments moments(const std::vector<double> &xs) {
    Moments m;
    m.count = xs.size();
    if (xs.empty()) {
        return m;
    }
    m.min = xs[0];
    for (double x : xs) {
        m.mean += x;
        m.min = std::min(m.min, x);
    }
    m.mean /= (double)xs.size();
    for (double x : xs) {
        m.variance += (x - m.mean) * (x - m.mean);
    }
    m.variance = xs.size() > 1 ? m.variance / (double)(xs.size() - 1) : 0;
    return m;
}

Json run_oneway(const RunConfig &c, std::vector<std::string> &transcripts) {
    if (c.traps != 0 || c.cheat != "honest" || c.batch_pairs) {
        throw ConfigError("mqc-oneway supports neither traps, cheat models nor batching");
    }
    Json doc = read_json_file(c.program);
    if (!doc.is_object() || doc.value("schema", "") != "gtbqc-oneway/1") {
        throw ParseError("mqc-oneway program must have schema \"gtbqc-oneway/1\"");
    }
    std::vector<double> angles;
    OnewayOptions options;
    options.max_attempts = c.max_attempts;
    try {
        angles = doc.at("angles").get<std::vector<double>>();
        std::string mode = doc.value("mode", "table");
        if (mode == "table") {
            options.mode = OnewayOptions::Mode::kTable;
        } else if (mode == "stochastic") {
            options.mode = OnewayOptions::Mode::kStochastic;
        } else if (mode == "continuous") {
            options.mode = OnewayOptions::Mode::kContinuous;
        } else {
            throw ConfigError("unknown one-way mode '" + mode + "'");
        }
    } catch (const Json::exception &e) {
        throw ParseError(std::string("mqc-oneway program: ") + e.what());
    }
    std::vector<OnewayResult> results(c.shots);
    parallel_for(c.shots, c.workers,
                 [&](size_t k) { results[k] = run_blind_oneway(angles, mix_seed(*c.seed, k), options); });
    std::vector<double> fidelities;
    std::map<std::string, size_t> byproducts;
    for (const auto &r : results) {
        transcripts.push_back(r.transcript.to_jsonl());
        fidelities.push_back(r.output_fidelity);
        byproducts[std::string(1, pauli_char(*r.byproduct))]++;
    }
    auto f = moments(fidelities);
    return Json{{"output_fidelity", {{"min", f.min}, {"mean", f.mean}}}, {"byproducts", byproducts}};
}

Json run_circuit(const RunConfig &c, std::vector<std::string> &transcripts) {
    Variant variant = parse_variant(c.variant);
    CircuitProgram program = program_from_json(read_json_file(c.program));
    RunOptions options;
    options.cheat = CheatModel::parse(c.cheat);
    options.batch_pairs = c.batch_pairs;
    options.max_attempts = c.max_attempts;
    if (c.traps < 0 || c.traps > 1 || !std::isfinite(c.traps)) {
        throw ConfigError("trap density must lie in [0, 1]");
    }
    auto gate_set = default_gate_set(variant);

    struct Shot {
        RunResult result;
        std::optional<TrapReport> traps;
    };
    std::vector<Shot> shots(c.shots);
    parallel_for(c.shots, c.workers, [&](size_t k) {
        uint64_t seed = mix_seed(*c.seed, k);
        if (c.traps > 0) {
            Rng placement_rng = Rng::substream(seed, 2);
            auto placement = insert_traps(program, c.traps, gate_set, placement_rng);
            shots[k].result = run_variant(variant, placement.program, seed, options);
            shots[k].traps = check_traps(shots[k].result.transcript, placement.ledger);
        } else {
            shots[k].result = run_variant(variant, program, seed, options);
        }
    });

    std::vector<double> fidelities, rounds, attempts;
    size_t detected = 0;
    for (const auto &s : shots) {
        transcripts.push_back(s.result.transcript.to_jsonl());
        fidelities.push_back(s.result.fidelity);
        rounds.push_back((double)s.result.gt_rounds);
        for (size_t a : s.result.attempts) {
            attempts.push_back((double)a);
        }
        if (s.traps.has_value() && s.traps->detected) {
            detected++;
        }
    }
    auto f = moments(fidelities);
    Json summary{{"fidelity", {{"min", f.min}, {"mean", f.mean}}},
                 {"gt_rounds", {{"mean", moments(rounds).mean}}},
                 {"cheat", options.cheat.str()}};
    if (!attempts.empty()) {
        auto a = moments(attempts);
        summary["attempts"] = {{"count", a.count}, {"mean", a.mean}, {"variance", a.variance}};
    }
    if (c.traps > 0) {
        auto [lo, hi] = wilson_interval(detected, c.shots);
        summary["traps"] = {{"density", c.traps},
                            {"detected", detected},
                            {"detection_rate", (double)detected / (double)c.shots},
                            {"ci_low", lo},
                            {"ci_high", hi}};
        if (c.shots == 1) {
            summary["traps"]["report"] = shots[0].traps->to_json();
        }
    }
    return summary;
}

int cmd_run(RunConfig c, const std::string &config_path, std::ostream &out) {
    if (!config_path.empty()) {
        apply_config(c, config_path);
    }
    if (!c.seed.has_value()) {
        throw ConfigError("a seed is required (--seed or \"seed\" in the config)");
    }
    if (c.program.empty()) {
        throw ConfigError("a program file is required (--program or \"program\" in the config)");
    }
    if (c.shots == 0) {
        throw ConfigError("shots must be positive");
    }
    std::vector<std::string> transcripts;
    Json summary = c.variant == "mqc-oneway" ? run_oneway(c, transcripts) : run_circuit(c, transcripts);
    summary["variant"] = c.variant;
    summary["seed"] = *c.seed;
    summary["shots"] = c.shots;
    if (!c.out.empty()) {
        fs::create_directories(c.out);
        std::string all;
        for (const auto &t : transcripts) {
            all += t;
        }
        write_file(fs::path(c.out) / "transcript.jsonl", all);
        write_file(fs::path(c.out) / "summary.json", summary.dump(2) + "\n");
    }
    out << summary.dump(2) << "\n";
    return kOk;
}

const char *label(Pauli p) {
    static const char *names[] = {"I", "X", "Y", "Z"};
    return names[(size_t)p];
}

std::string pair_label(size_t a, size_t b) {
    return std::string(label(kAllPaulis[a])) + " (x) " + label(kAllPaulis[b]);
}

Unitary4 unitary4_from_json(const Json &j) {
    MatX m = matrix_from_json(j);
    if (m.rows() != 4 || m.cols() != 4) {
        throw ParseError("expected a 4x4 matrix");
    }
    try {
        return Unitary4(Mat4(m));
    } catch (const ValueError &e) {
        throw ParseError(e.what());
    }
}

std::vector<Unitary2> unitaries_from_json(const Json &j, const char *what) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(std::string(what) + " must be a nonempty array of matrices");
    }
    std::vector<Unitary2> out;
    for (const auto &m : j) {
        out.push_back(unitary2_from_json(m));
    }
    return out;
}

Json check_gate_set(const Json &doc, bool &all_pass) {
    std::vector<Unitary2> gates = unitaries_from_json(doc.at("gates"), "gates");
    Unitary4 w = doc.contains("entangler") ? unitary4_from_json(doc["entangler"]) : cz_gate();
    Json checks = Json::array();

    auto two = check_two_qubit_commutation(w);
    Json two_json{{"name", "two_qubit_commutation"}, {"pass", two.holds}};
    if (two.holds) {
        Json table = Json::array();
        for (const auto &t : two.witnesses) {
            table.push_back(Json{{"in", pair_label(t.in_first, t.in_second)},
                                 {"out", pair_label(t.out_first, t.out_second)},
                                 {"phase", complex_to_json(t.phase)}});
        }
        two_json["witnesses"] = table;
    } else {
        auto [a, b] = *two.counterexample;
        two_json["counterexample"] = "W (" + pair_label(a, b) + ") W^dagger is not a Pauli pair";
    }
    all_pass &= two.holds;
    checks.push_back(two_json);

    auto one = check_one_qubit_commutation(gates);
    Json one_json{{"name", "one_qubit_commutation"}, {"pass", one.holds}};
    if (one.holds) {
        Json table = Json::array();
        for (const auto &t : one.witnesses) {
            table.push_back(Json{{"v", t.v},
                                 {"sigma", label(t.sigma)},
                                 {"v_prime", t.v_prime},
                                 {"sigma_prime", label(t.sigma_prime)},
                                 {"phase", complex_to_json(t.phase)}});
        }
        one_json["witnesses"] = table;
    } else {
        auto [v, s] = *one.counterexample;
        one_json["counterexample"] = "V_" + std::to_string(v) + " " + label(s) + " has no form sigma' V'";
    }
    all_pass &= one.holds;
    checks.push_back(one_json);

    if (doc.contains("v_set")) {
        std::vector<Unitary2> v_set = unitaries_from_json(doc["v_set"], "v_set");
        Json sub{{"name", "substitution_table"}};
        try {
            auto table = build_substitution_table(gates, v_set);
            Json entries = Json::array();
            for (size_t i = 0; i < table.num_u(); i++) {
                for (size_t j = 0; j < table.num_u(); j++) {
                    for (Pauli s : kAllPaulis) {
                        const auto &e = table.lookup(i, j, s);
                        entries.push_back(Json{{"i", i},
                                               {"j", j},
                                               {"sigma", label(s)},
                                               {"v_index", e.v_index},
                                               {"u_prime", e.u_prime},
                                               {"sigma_prime", label(e.sigma_prime)},
                                               {"phase", complex_to_json(e.phase)}});
                    }
                }
            }
            bool bijective = trapfree_index_bijective(table);
            sub["pass"] = bijective;
            sub["index_bijective"] = bijective;
            sub["entries"] = entries;
            all_pass &= bijective;
        } catch (const NoSolutionError &e) {
            sub["pass"] = false;
            sub["counterexample"] = e.what();
            all_pass = false;
        }
        checks.push_back(sub);
    }
    return checks;
}

Json check_mps(const Json &doc, bool &all_pass) {
    MPSTensorSet t = mps_from_json(doc);
    Json checks = Json::array();
    std::vector<MatX> us;
    for (double a : discrete_oneway_angles()) {
        MatX m = measured_operator(t, MeasurementBasis::theta(a).outcome(0));
        us.push_back(m);
    }
    auto paulis = ByproductSet::paulis();
    auto manage = check_manageable(t, paulis, us, oneway_measurements(), cz_gate().matrix());
    Json m{{"name", "manageability"},
           {"pass", manage.holds},
           {"one_site", manage.one_site_holds},
           {"two_site", manage.two_site_holds}};
    if (!manage.holds) {
        m["counterexample"] = manage.counterexample;
    }
    all_pass &= manage.holds;
    checks.push_back(m);

    std::vector<size_t> targets;
    for (double a : discrete_oneway_angles()) {
        targets.push_back((size_t)std::lround((a < 0 ? a + 2 * std::numbers::pi : a) / (std::numbers::pi / 4)) % 8);
    }
    auto blind = check_blind_criterion(t, oneway_v_set(), oneway_measurements(), targets, paulis);
    Json b{{"name", "blind_measurement_table"},
           {"pass", blind.every_v},
           {"holds", blind.holds},
           {"every_v", blind.every_v}};
    if (blind.every_v) {
        Json entries = Json::array();
        for (const auto &e : blind.entries) {
            entries.push_back(Json{{"target", e.target},
                                   {"sigma", label(e.sigma)},
                                   {"v_index", e.v_index},
                                   {"measurement", e.measurement}});
        }
        b["entries"] = entries;
    } else {
        b["counterexample"] = blind.counterexample;
    }
    all_pass &= blind.every_v;
    checks.push_back(b);
    return checks;
}

int cmd_check(const std::string &path, const std::string &out_file, std::ostream &out) {
    Json doc = read_json_file(path);
    std::string schema = doc.is_object() ? doc.value("schema", "") : "";
    bool all_pass = true;
    Json checks;
    try {
        if (schema == "gtbqc-gateset/1") {
            checks = check_gate_set(doc, all_pass);
        } else if (schema == "gtbqc-mps/1") {
            checks = check_mps(doc, all_pass);
        } else {
            throw ParseError("check input must have schema \"gtbqc-gateset/1\" or \"gtbqc-mps/1\"");
        }
    } catch (const Json::exception &e) {
        throw ParseError(std::string("check input: ") + e.what());
    }
    emit(Json{{"schema", schema}, {"checks", checks}, {"pass", all_pass}}, out_file, out);
    return all_pass ? kOk : kCheckFailed;
}

AuditCheck audit_one(const Json &spec, uint64_t seed, std::optional<size_t> default_samples, size_t workers,
                     const fs::path &base) {
    std::string name = spec.at("name").get<std::string>();
    auto samples = [&](size_t fallback) {
        if (spec.contains("samples")) return spec["samples"].get<size_t>();
        if (spec.contains("runs")) return spec["runs"].get<size_t>();
        return default_samples.value_or(fallback);
    };
    auto resolve = [&](const std::string &p) {
        fs::path path(p);
        return path.is_absolute() ? path.string() : (base / path).string();
    };
    AuditCheck c;
    c.name = name;
    if (name == "mixing") {
        size_t n = samples(1000);
        Rng rng = Rng::substream(seed, 0);
        double worst = mixing_check(Unitary2::identity());
        for (size_t k = 0; k < n; k++) {
            worst = std::max(worst, mixing_check(haar_su2(rng)));
        }
        c.statistic = worst;
        c.threshold = spec.value("threshold", 1e-12);
        c.pass = worst < c.threshold;
        c.details = {{"samples", n}};
    } else if (name == "haar_invariance") {
        HaarInvarianceOptions o;
        o.threshold = spec.value("threshold", 0.02);
        o.seed = mix_seed(seed, 1);
        o.workers = workers;
        if (spec.contains("fixed_v")) {
            o.fixed_v = unitary2_from_json(spec["fixed_v"]);
        }
        auto r = haar_invariance_check(unitary2_from_json(spec.at("u1")), unitary2_from_json(spec.at("u1_alt")),
                                       samples(100000), o);
        c.statistic = r.max_distance();
        c.threshold = r.threshold;
        c.pass = r.pass;
        Json d = Json::object();
        for (const auto &f : r.distances) {
            d[f.feature] = f.ks;
        }
        c.details = {{"samples", r.samples}, {"ks", d}, {"negative_control", o.fixed_v.has_value()}};
    } else if (name == "view_indistinguishability") {
        ViewOptions o;
        o.tv_threshold = spec.value("tv_threshold", 0.02);
        o.quantum_threshold = spec.value("quantum_threshold", 1e-12);
        o.omit_tau = spec.value("omit_tau", false);
        o.seed = mix_seed(seed, 2);
        o.workers = workers;
        auto a = program_from_json(read_json_file(resolve(spec.at("program_a").get<std::string>())));
        auto b = program_from_json(read_json_file(resolve(spec.at("program_b").get<std::string>())));
        auto r = view_indistinguishability(a, b, parse_variant(spec.value("variant", "trapfree")), samples(100000),
                                           o);
        c.statistic = r.max_classical_tv;
        c.threshold = r.tv_threshold;
        c.pass = r.pass;
        Json slots = Json::array();
        for (const auto &s : r.slots) {
            slots.push_back(Json{{"classical_tv", s.classical_tv},
                                 {"quantum_distance", s.quantum_distance},
                                 {"mixing_deviation", s.mixing_deviation}});
        }
        c.details = {{"runs", r.runs},
                     {"max_quantum_distance", r.max_quantum_distance},
                     {"max_mixing_deviation", r.max_mixing_deviation},
                     {"quantum_threshold", r.quantum_threshold},
                     {"omit_tau", o.omit_tau},
                     {"slots", slots}};
    } else if (name == "entangling_certificate") {
        Unitary4 g = spec.contains("r_gate") ? r_gate(unitary2_from_json(spec["r_gate"]))
                                              : unitary4_from_json(spec.at("gate"));
        auto cert = entangling_certificate(g);
        std::string cls = cert.cnot_class ? "cnot" : cert.identity_class ? "product" : "other";
        std::string expect = spec.value("expect", "");
        c.statistic = (double)cert.schmidt_rank;
        c.threshold = 1;
        c.pass = expect.empty() || expect == cls || (expect == "entangling" && cert.entangling);
        c.details = {{"schmidt_rank", cert.schmidt_rank},
                     {"schmidt_coefficients", cert.schmidt_coefficients},
                     {"g1", complex_to_json(cert.g1)},
                     {"g2", complex_to_json(cert.g2)},
                     {"entangling", cert.entangling},
                     {"local_class", cls}};
        if (!expect.empty()) {
            c.details["expect"] = expect;
        }
    } else if (name == "index_uniformity") {
        auto table = build_substitution_table(default_gate_set(Variant::kTrapFree), default_trapfree_v_set());
        c.pass = trapfree_index_bijective(table);
        c.statistic = c.pass ? 0 : 1;
        c.threshold = 0;
    } else {
        throw ConfigError("unknown audit check '" + name + "'");
    }
    return c;
}

int cmd_audit(const std::string &path, std::optional<size_t> shots, size_t workers, const std::string &out_file,
              std::ostream &out) {
    Json doc = read_json_file(path);
    if (!doc.is_object() || doc.value("schema", "") != "gtbqc-audit-config/1") {
        throw ParseError("audit config must have schema \"gtbqc-audit-config/1\"");
    }
    std::vector<AuditCheck> checks;
    try {
        uint64_t seed = doc.at("seed").get<uint64_t>();
        fs::path base = fs::path(path).parent_path();
        for (const auto &spec : doc.value("checks", Json::array())) {
            checks.push_back(audit_one(spec, mix_seed(seed, checks.size()), shots, workers, base));
        }
    } catch (const Json::exception &e) {
        throw ParseError(std::string("audit config: ") + e.what());
    }
    Json report = audit_report_json(checks);
    emit(report, out_file, out);
    return report["pass"].get<bool>() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gate-teleportation blind quantum computation simulator", "gtbqc"};
    app.require_subcommand(1);

    RunConfig run;
    std::string run_config;
    uint64_t seed_flag = 0;
    auto *run_cmd = app.add_subcommand("run", "Execute a protocol variant on a program");
    run_cmd->add_option("--variant", run.variant, "stochastic, clifford, haar, trapfree or mqc-oneway");
    run_cmd->add_option("--program", run.program, "Program file (gtbqc-program/1 or gtbqc-oneway/1)");
    auto *seed_opt = run_cmd->add_option("--seed", seed_flag, "64-bit seed");
    run_cmd->add_option("--shots", run.shots, "Independent runs, each on its own seed substream");
    run_cmd->add_option("--traps", run.traps, "Trap density in [0, 1]");
    run_cmd->add_option("--cheat", run.cheat, "honest, measure-pairs:z|x or false-sigma:P");
    run_cmd->add_option("--out", run.out, "Output directory for transcript.jsonl and summary.json");
    run_cmd->add_flag("--batch-pairs", run.batch_pairs, "Send all pairs before the first instruction");
    run_cmd->add_option("--max-attempts", run.max_attempts, "Stochastic GT attempts per gate before abort");
    run_cmd->add_option("--workers", run.workers, "Worker threads (0 = one per core)");
    run_cmd->add_option("--config", run_config, "JSON config; its keys override the flags");

    std::string check_path, check_out;
    auto *check_cmd = app.add_subcommand("check", "Run the commutation criteria on a gate set or MPS file");
    check_cmd->add_option("file", check_path, "gtbqc-gateset/1 or gtbqc-mps/1 file")->required();
    check_cmd->add_option("--out", check_out, "Write the report here instead of stdout");

    std::string audit_path, audit_out;
    size_t audit_shots = 0, audit_workers = 0;
    auto *audit_cmd = app.add_subcommand("audit", "Run blindness audits from a config file");
    audit_cmd->add_option("--config", audit_path, "gtbqc-audit-config/1 file")->required();
    auto *shots_opt = audit_cmd->add_option("--shots", audit_shots, "Default sample count per check");
    audit_cmd->add_option("--workers", audit_workers, "Worker threads (0 = one per core)");
    audit_cmd->add_option("--out", audit_out, "Write the report here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kConfigError;
    }

    try {
        if (run_cmd->parsed()) {
            if (seed_opt->count() > 0) {
                run.seed = seed_flag;
            }
            return cmd_run(run, run_config, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check_path, check_out, out);
        }
        std::optional<size_t> shots;
        if (shots_opt->count() > 0) {
            shots = audit_shots;
        }
        return cmd_audit(audit_path, shots, audit_workers, audit_out, out);
    } catch (const InsufficientSamplesError &e) {
        err << "gtbqc: " << e.what() << "\n";
        return kInsufficientShots;
    } catch (const ProtocolAbort &e) {
        err << "gtbqc: protocol abort: " << e.what() << "\n";
        return kProtocolAbort;
    } catch (const std::ios_base::failure &e) {
        err << "gtbqc: I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const fs::filesystem_error &e) {
        err << "gtbqc: I/O error: " << e.what() << "\n";
        return kIoError;
    } catch (const ParseError &e) {
        err << "gtbqc: parse error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ConfigError &e) {
        err << "gtbqc: config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ValueError &e) {
        err << "gtbqc: invalid input: " << e.what() << "\n";
        return kConfigError;
    } catch (const NoSolutionError &e) {
        err << "gtbqc: " << e.what() << "\n";
        return kCheckFailed;
    }
}

}  // namespace gtbqc::cli
