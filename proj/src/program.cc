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


#include "gtbqc/program.h"

#include <numbers>

#include "gtbqc/errors.h"

namespace gtbqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char *kProgramSchema = "gtbqc-program/1";

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::kStochastic:
            return "stochastic";
        case Variant::kClifford:
            return "clifford";
        case Variant::kHaar:
            return "haar";
        case Variant::kTrapFree:
            return "trapfree";
    }
    return "";
}

Variant parse_variant(const std::string &name) {
    for (Variant v : {Variant::kStochastic, Variant::kClifford, Variant::kHaar, Variant::kTrapFree}) {
        if (variant_name(v) == name) {
            return v;
        }
    }
    throw ConfigError("unknown variant '" + name + "'");
}

std::vector<Unitary2> default_gate_set(Variant v) {
    Unitary2 h = hadamard();
    if (v == Variant::kTrapFree) {
        std::vector<Unitary2> out;
        for (int i = 0; i < 8; i++) {
            out.push_back(h * z_rotation(kPi * i / 4));
        }
        return out;
    }
    return {h, h * z_rotation(kPi / 4), h * z_rotation(-kPi / 4)};
}

Unitary2 entangler() {
    return x_rotation(-kPi / 4);
}

Unitary4 r_gate(const Unitary2 &u) {
    return spread_operator(cz_gate(), u);
}

std::vector<std::pair<size_t, size_t>> brickwork_pairs(size_t layer, size_t num_qubits) {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = layer % 2; a + 1 < num_qubits; a += 2) {
        out.emplace_back(a, a + 1);
    }
    return out;
}

void CircuitProgram::validate(size_t gate_set_size) const {
    if (num_qubits == 0) {
        throw ValueError("program has no qubits");
    }
    for (size_t l = 0; l < layers.size(); l++) {
        const auto &layer = layers[l];
        if (layer.gates.size() != num_qubits) {
            throw ValueError("layer " + std::to_string(l) + " has " + std::to_string(layer.gates.size()) +
                             " gate requests for " + std::to_string(num_qubits) + " qubits");
        }
        if (layer.entangle.size() != brickwork_pairs(l, num_qubits).size()) {
            throw ValueError("layer " + std::to_string(l) + " entangle choices do not match the brickwork pairs");
        }
        for (const auto &g : layer.gates) {
            if (g.kind == GateRequest::Kind::kIndex && g.index >= gate_set_size) {
                throw ValueError("gate index " + std::to_string(g.index) + " out of range in layer " +
                                 std::to_string(l));
            }
        }
    }
}

std::vector<size_t> CircuitProgram::trap_marked_qubits() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < num_qubits; q++) {
        for (const auto &layer : layers) {
            if (q < layer.gates.size() && layer.gates[q].kind == GateRequest::Kind::kTrap) {
                out.push_back(q);
                break;
            }
        }
    }
    return out;
}

CircuitProgram program_from_json(const Json &j) {
    if (!j.is_object() || j.value("schema", "") != kProgramSchema) {
        throw ParseError(std::string("program must be an object with schema \"") + kProgramSchema + "\"");
    }
    CircuitProgram p;
    if (!j.contains("num_qubits") || !j["num_qubits"].is_number_unsigned()) {
        throw ParseError("program: num_qubits must be a nonnegative integer");
    }
    p.num_qubits = j["num_qubits"].get<size_t>();
    if (!j.contains("layers") || !j["layers"].is_array()) {
        throw ParseError("program: layers must be an array");
    }
    for (const auto &jl : j["layers"]) {
        Layer layer;
        if (!jl.is_object() || !jl.contains("gates") || !jl["gates"].is_array()) {
            throw ParseError("program: each layer needs a gates array");
        }
        for (const auto &g : jl["gates"]) {
            if (g.is_number_unsigned()) {
                layer.gates.push_back(GateRequest::of_index(g.get<size_t>()));
            } else if (g.is_string() && g.get<std::string>() == "trap") {
                layer.gates.push_back(GateRequest::trap());
            } else if (g.is_object() && g.contains("matrix")) {
                layer.gates.push_back(GateRequest::of_matrix(unitary2_from_json(g["matrix"])));
            } else {
                throw ParseError("program: bad gate request " + g.dump());
            }
        }
        for (const auto &e : jl.value("entangle", Json::array())) {
            if (!e.is_boolean()) {
                throw ParseError("program: entangle choices must be booleans");
            }
            layer.entangle.push_back(e.get<bool>());
        }
        p.layers.push_back(std::move(layer));
    }
    try {
        p.validate(SIZE_MAX);
    } catch (const ValueError &e) {
        throw ParseError(std::string("program: ") + e.what());
    }
    return p;
}

Json program_to_json(const CircuitProgram &p) {
    Json layers = Json::array();
    for (const auto &layer : p.layers) {
        Json gates = Json::array();
        for (const auto &g : layer.gates) {
            switch (g.kind) {
                case GateRequest::Kind::kIndex:
                    gates.push_back(g.index);
                    break;
                case GateRequest::Kind::kMatrix:
                    gates.push_back(Json{{"matrix", matrix_to_json(g.matrix.matrix())}});
                    break;
                case GateRequest::Kind::kTrap:
                    gates.push_back("trap");
                    break;
            }
        }
        Json entangle = Json::array();
        for (bool e : layer.entangle) {
            entangle.push_back(e);
        }
        layers.push_back(Json{{"gates", gates}, {"entangle", entangle}});
    }
    return Json{{"schema", kProgramSchema}, {"num_qubits", p.num_qubits}, {"layers", layers}};
}

CircuitProgram random_program(size_t num_qubits, size_t num_layers, size_t gate_set_size, Rng &rng) {
    CircuitProgram p;
    p.num_qubits = num_qubits;
    for (size_t l = 0; l < num_layers; l++) {
        Layer layer;
        for (size_t q = 0; q < num_qubits; q++) {
            layer.gates.push_back(GateRequest::of_index(rng.uniform_index(gate_set_size)));
        }
        for (size_t k = 0; k < brickwork_pairs(l, num_qubits).size(); k++) {
            layer.entangle.push_back(rng.bernoulli(0.5));
        }
        p.layers.push_back(std::move(layer));
    }
    return p;
}

Unitary2 resolve_gate(const GateRequest &g, const std::vector<Unitary2> &gate_set) {
    switch (g.kind) {
        case GateRequest::Kind::kIndex:
            if (g.index >= gate_set.size()) {
                throw ValueError("gate index out of range");
            }
            return gate_set[g.index];
        case GateRequest::Kind::kMatrix:
            return g.matrix;
        case GateRequest::Kind::kTrap:
            break;
    }
    throw ValueError("trap markers must be resolved before simulation");
}

StateVector direct_simulate(const CircuitProgram &p, const std::vector<Unitary2> &gate_set) {
    p.validate(gate_set.size());
    StateVector s(p.num_qubits);
    Unitary4 rs = r_gate(entangler());
    for (size_t l = 0; l < p.layers.size(); l++) {
        const auto &layer = p.layers[l];
        for (size_t q = 0; q < p.num_qubits; q++) {
            s.apply_1q(q, resolve_gate(layer.gates[q], gate_set));
        }
        auto pairs = brickwork_pairs(l, p.num_qubits);
        for (size_t k = 0; k < pairs.size(); k++) {
            if (layer.entangle[k]) {
                s.apply_2q(pairs[k].first, pairs[k].second, rs);
            }
        }
    }
    return s;
}

}  // namespace gtbqc
