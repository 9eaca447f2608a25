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


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.h"
#include "gtbqc/audit.h"
#include "gtbqc/errors.h"
#include "gtbqc/mqc.h"
#include "gtbqc/protocols.h"

namespace py = pybind11;
using namespace gtbqc;

namespace {

Unitary2 to_unitary2(const Mat2 &m) {
    return Unitary2(m);
}

std::string run_json(const std::string &variant, const std::string &program, uint64_t seed, const std::string &cheat,
                     bool batch_pairs) {
    RunOptions options;
    options.cheat = CheatModel::parse(cheat);
    options.batch_pairs = batch_pairs;
    auto r = run_variant(parse_variant(variant), program_from_json(Json::parse(program)), seed, options);
    return Json{{"fidelity", r.fidelity},
                {"raw_bits", r.raw_bits},
                {"decoded_bits", r.decoded_bits},
                {"gt_rounds", r.gt_rounds},
                {"attempts", r.attempts},
                {"transcript", r.transcript.to_jsonl()},
                {"server_view", r.transcript.server_view_jsonl()}}
        .dump();
}

std::string oneway_json(const std::vector<double> &angles, uint64_t seed, const std::string &mode) {
    OnewayOptions options;
    if (mode == "table") {
        options.mode = OnewayOptions::Mode::kTable;
    } else if (mode == "stochastic") {
        options.mode = OnewayOptions::Mode::kStochastic;
    } else if (mode == "continuous") {
        options.mode = OnewayOptions::Mode::kContinuous;
    } else {
        throw ConfigError("unknown one-way mode '" + mode + "'");
    }
    auto r = run_blind_oneway(angles, seed, options);
    return Json{{"byproduct", std::string(1, pauli_char(*r.byproduct))},
                {"output_fidelity", r.output_fidelity},
                {"server_angles", r.server_angles},
                {"transcript", r.transcript.to_jsonl()}}
        .dump();
}

py::dict certificate(const Mat4 &g) {
    auto c = entangling_certificate(Unitary4(g));
    py::dict d;
    d["schmidt_rank"] = c.schmidt_rank;
    d["schmidt_coefficients"] = c.schmidt_coefficients;
    d["g1"] = c.g1;
    d["g2"] = c.g2;
    d["entangling"] = c.entangling;
    d["cnot_class"] = c.cnot_class;
    d["identity_class"] = c.identity_class;
    return d;
}

py::tuple cli_main(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gate-teleportation blind quantum computation simulator.";

    py::register_exception<ValueError>(m, "ValueError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ProtocolAbort>(m, "ProtocolAbort", PyExc_RuntimeError);
    py::register_exception<NoSolutionError>(m, "NoSolutionError", PyExc_RuntimeError);
    py::register_exception<InsufficientSamplesError>(m, "InsufficientSamplesError", PyExc_ValueError);

    m.def("_run", &run_json, py::arg("variant"), py::arg("program"), py::arg("seed"), py::arg("cheat") = "honest",
          py::arg("batch_pairs") = false);
    m.def("_run_oneway", &oneway_json, py::arg("angles"), py::arg("seed"), py::arg("mode") = "table");
    m.def(
        "_random_program",
        [](size_t num_qubits, size_t num_layers, size_t gate_set_size, uint64_t seed) {
            Rng rng(seed);
            return program_to_json(random_program(num_qubits, num_layers, gate_set_size, rng)).dump();
        },
        py::arg("num_qubits"), py::arg("num_layers"), py::arg("gate_set_size"), py::arg("seed"));
    m.def(
        "mixing_check", [](const Mat2 &v) { return mixing_check(to_unitary2(v)); }, py::arg("v"),
        "Max deviation of the tau-averaged pair state from 1/4.");
    m.def("entangling_certificate", &certificate, py::arg("g"));
    m.def(
        "r_gate", [](const Mat2 &u) { return Mat4(r_gate(to_unitary2(u)).matrix()); }, py::arg("u"));
    m.def("cli", &cli_main, py::arg("args"), "Runs the gtbqc command; returns (exit_code, stdout, stderr).");
}
