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


#include "gtbqc/server.h"


#include "gtbqc/errors.h"
#include "gtbqc/json_io.h"

namespace gtbqc {

CheatModel CheatModel::parse(const std::string &spec) {
    CheatModel c;
    if (spec.empty() || spec == "honest") {
        return c;
    }
    if (spec == "measure-pairs:z" || spec == "measure-pairs:x") {
        c.strategy = Strategy::kMeasurePairs;
        c.basis = spec.back() == 'z' ? Axis::Z : Axis::X;
        return c;
    }
    const std::string prefix = "false-sigma:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string rest = spec.substr(prefix.size());
        try {
            size_t used = 0;
            c.probability = std::stod(rest, &used);
            if (used != rest.size()) {
                throw std::invalid_argument(rest);
            }
        } catch (const std::exception &) {
            throw ConfigError("bad cheat probability '" + rest + "'");
        }
        if (!(c.probability >= 0 && c.probability <= 1)) {
            throw ConfigError("cheat probability must lie in [0, 1]");
        }
        c.strategy = Strategy::kFalseSigma;
        return c;
    }
    throw ConfigError("unknown cheat model '" + spec + "'");
}

std::string CheatModel::str() const {
    switch (strategy) {
        case Strategy::kHonest:
            return "honest";
        case Strategy::kMeasurePairs:
            return basis == Axis::Z ? "measure-pairs:z" : "measure-pairs:x";
        case Strategy::kFalseSigma:
            return "false-sigma:" + Json(probability).dump();
    }
    return "";
}

Pauli gt_procedure(StateVector &reg, size_t register_qubit, const StateVector &pair, Rng &rng) {
    if (register_qubit >= reg.num_qubits()) {
        throw ValueError("gt_procedure: register qubit " + std::to_string(register_qubit) + " out of range");
    }
    if (pair.num_qubits() != 2) {
        throw ValueError("gt_procedure: pair must hold two qubits");
    }
    size_t n = reg.num_qubits();
    StateVector joint = reg.tensor(pair);
    auto outcome = bell_measure(joint, register_qubit, n, rng);
    reg = std::move(outcome.state);
    reg.move_qubit(n - 1, register_qubit);
    return outcome.sigma;
}

Server::Server(size_t num_qubits, std::vector<Unitary2> public_gates, CheatModel cheat, Rng rng)
    : reg_(num_qubits, num_qubits + 2), gates_(std::move(public_gates)), cheat_(cheat), rng_(rng) {
}

size_t Server::qubit_arg(const Json &payload, const char *key) const {
    if (!payload.contains(key) || !payload[key].is_number_unsigned()) {
        throw ProtocolAbort(std::string("message lacks field '") + key + "'");
    }
    auto q = payload[key].get<size_t>();
    if (q >= reg_.num_qubits()) {
        throw ProtocolAbort("qubit " + std::to_string(q) + " out of range");
    }
    return q;
}

std::vector<Message> Server::handle(const Message &m) {
    if (m.direction != Direction::kClientToServer) {
        throw ProtocolAbort("server received a server-to-client message");
    }
    const auto &p = m.payload;
    if (m.kind == "pair") {
        if (!m.is_quantum()) {
            throw ProtocolAbort("pair message without a quantum payload");
        }
        StateVector pair = *m.pair;
        if (cheat_.strategy == CheatModel::Strategy::kMeasurePairs) {
            auto basis = cheat_.basis == Axis::Z ? MeasurementBasis::computational() : MeasurementBasis::theta(0);
            pair = measure_basis(pair, 1, basis, rng_).state;
        }
        pending_.push_back(std::move(pair));
        return {};
    }
    if (m.kind == "gt") {
        size_t q = qubit_arg(p, "qubit");
        if (pending_.empty()) {
            throw ProtocolAbort("gt instruction with no pending pair");
        }
        StateVector pair = std::move(pending_.front());
        pending_.pop_front();
        Pauli sigma = gt_procedure(reg_, q, pair, rng_);
        if (cheat_.strategy == CheatModel::Strategy::kFalseSigma && rng_.bernoulli(cheat_.probability)) {
            sigma = kAllPaulis[rng_.uniform_index(4)];
        }
        return {messages::bell(sigma)};
    }
    if (m.kind == "apply_index") {
        size_t q = qubit_arg(p, "qubit");
        if (!p.contains("index") || !p["index"].is_number_unsigned() || p["index"].get<size_t>() >= gates_.size()) {
            throw ProtocolAbort("apply_index: bad gate index");
        }
        reg_.apply_1q(q, gates_[p["index"].get<size_t>()]);
        return {};
    }
    if (m.kind == "apply_matrix") {
        size_t q = qubit_arg(p, "qubit");
        try {
            reg_.apply_1q(q, unitary2_from_json(p.at("matrix")));
        } catch (const std::exception &e) {
            throw ProtocolAbort(std::string("apply_matrix: ") + e.what());
        }
        return {};
    }
    if (m.kind == "cz") {
        size_t a = qubit_arg(p, "a");
        size_t b = qubit_arg(p, "b");
        if (a == b) {
            throw ProtocolAbort("cz on a single qubit");
        }
        reg_.apply_2q(a, b, cz_gate());
        return {};
    }
    if (m.kind == "measure") {
        std::vector<int> bits;
        if (!p.contains("qubits") || !p["qubits"].is_array()) {
            throw ProtocolAbort("measure: missing qubit list");
        }
        for (const auto &jq : p["qubits"]) {
            if (!jq.is_number_unsigned() || jq.get<size_t>() >= reg_.num_qubits()) {
                throw ProtocolAbort("measure: bad qubit");
            }
            auto out = measure_basis(reg_, jq.get<size_t>(), MeasurementBasis::computational(), rng_);
            reg_ = std::move(out.state);
            bits.push_back((int)out.outcome);
        }
        return {messages::measure_report(bits)};
    }
    if (m.kind == "prepare_cluster") {
        reg_ = StateVector(reg_.num_qubits(), reg_.max_qubits());
        for (size_t q = 0; q < reg_.num_qubits(); q++) {
            reg_.apply_1q(q, hadamard());
        }
        for (size_t q = 0; q + 1 < reg_.num_qubits(); q++) {
            reg_.apply_2q(q, q + 1, cz_gate());
        }
        return {};
    }
    if (m.kind == "measure_angle") {
        size_t q = qubit_arg(p, "qubit");
        if (!p.contains("angle") || !p["angle"].is_number()) {
            throw ProtocolAbort("measure_angle: missing angle");
        }
        auto out = measure_basis(reg_, q, MeasurementBasis::theta(p["angle"].get<double>()), rng_);
        reg_ = std::move(out.state);
        return {messages::measure_outcome(out.outcome)};
    }
    if (m.kind == "done") {
        return {};
    }
    throw ProtocolAbort("unknown message kind '" + m.kind + "'");
}

void Channel::send(const Message &m) {
    transcript_.record(m);
    for (auto &reply : server_.handle(m)) {
        transcript_.record(reply);
        to_client_.push_back(std::move(reply));
    }
}

Message Channel::receive(const std::string &kind) {
    if (to_client_.empty()) {
        throw ProtocolAbort("expected a '" + kind + "' reply, channel is empty");
    }
    Message m = std::move(to_client_.front());
    to_client_.pop_front();
    if (m.kind != kind) {
        throw ProtocolAbort("expected a '" + kind + "' reply, got '" + m.kind + "'");
    }
    return m;
}

}  // namespace gtbqc
