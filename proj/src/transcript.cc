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


#include "gtbqc/transcript.h"

namespace gtbqc {

namespace messages {

namespace {

Message classical(Direction d, std::string kind, Json payload) {
    Message m;
    m.direction = d;
    m.kind = std::move(kind);
    m.payload = std::move(payload);
    return m;
}

constexpr Direction kC2S = Direction::kClientToServer;
constexpr Direction kS2C = Direction::kServerToClient;

}  // namespace

Message pair(StateVector state) {
    if (state.num_qubits() != 2) {
        throw ValueError("quantum messages carry exactly two qubits");
    }
    Message m = classical(kC2S, "pair", Json{{"amplitudes", amplitudes_to_json(state.amplitudes())}});
    m.pair = std::move(state);
    return m;
}

Message gt(size_t qubit) {
    return classical(kC2S, "gt", Json{{"qubit", qubit}});
}

Message bell(Pauli sigma) {
    return classical(kS2C, "bell", Json{{"sigma", std::string(1, pauli_char(sigma))}});
}

Message apply_index(size_t qubit, size_t index) {
    return classical(kC2S, "apply_index", Json{{"qubit", qubit}, {"index", index}});
}

Message apply_matrix(size_t qubit, const Unitary2 &u) {
    return classical(kC2S, "apply_matrix", Json{{"qubit", qubit}, {"matrix", matrix_to_json(u.matrix())}});
}

Message cz(size_t a, size_t b) {
    return classical(kC2S, "cz", Json{{"a", a}, {"b", b}});
}

Message measure(const std::vector<size_t> &qubits) {
    return classical(kC2S, "measure", Json{{"qubits", qubits}});
}

Message measure_report(const std::vector<int> &bits) {
    return classical(kS2C, "measure_report", Json{{"bits", bits}});
}

Message prepare_cluster() {
    return classical(kC2S, "prepare_cluster", Json::object());
}

Message measure_angle(size_t qubit, double angle) {
    return classical(kC2S, "measure_angle", Json{{"qubit", qubit}, {"angle", angle}});
}

Message measure_outcome(size_t outcome) {
    return classical(kS2C, "measure_outcome", Json{{"outcome", outcome}});
}

Message done() {
    return classical(kC2S, "done", Json::object());
}

}  // namespace messages

Json server_view_payload(const Message &m) {
    if (m.is_quantum()) {
        return Json{{"qubits", m.pair->num_qubits()}};
    }
    return m.payload;
}

Transcript::Transcript(Json header) : header_(std::move(header)) {
    header_["schema"] = kSchema;
}

void Transcript::record(const Message &m) {
    lines_.push_back(Json{{"seq", lines_.size()},
                          {"direction", m.direction == Direction::kClientToServer ? "c2s" : "s2c"},
                          {"kind", m.kind},
                          {"payload", m.payload},
                          {"server_view_payload", server_view_payload(m)}});
}

std::string Transcript::to_jsonl() const {
    std::string out = header_.dump() + "\n";
    for (const auto &line : lines_) {
        out += line.dump() + "\n";
    }
    out += Json{{"outcome", outcome_}}.dump() + "\n";
    return out;
}

std::string Transcript::server_view_jsonl() const {
    std::string out;
    for (const auto &line : lines_) {
        out += Json{{"seq", line["seq"]},
                    {"direction", line["direction"]},
                    {"kind", line["kind"]},
                    {"server_view_payload", line["server_view_payload"]}}
                   .dump() +
               "\n";
    }
    return out;
}

}  // namespace gtbqc
