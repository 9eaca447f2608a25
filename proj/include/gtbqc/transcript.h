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

#include <optional>
#include <string>
#include <vector>

#include "gtbqc/json_io.h"
#include "gtbqc/state_vector.h"

namespace gtbqc {

enum class Direction { kClientToServer, kServerToClient };

/// One transport message. Quantum messages carry a normalized 2-qubit
/// state; classical ones carry only their JSON payload.
struct Message {
    Direction direction = Direction::kClientToServer;
    std::string kind;
    Json payload = Json::object();
    std::optional<StateVector> pair;

    bool is_quantum() const {
        return pair.has_value();
    }
};

namespace messages {

Message pair(StateVector state);
Message gt(size_t qubit);
Message bell(Pauli sigma);
Message apply_index(size_t qubit, size_t index);
Message apply_matrix(size_t qubit, const Unitary2 &u);
Message cz(size_t a, size_t b);
Message measure(const std::vector<size_t> &qubits);
Message measure_report(const std::vector<int> &bits);
/// Server prepares the 1D cluster state on its whole register.
Message prepare_cluster();
/// Single-qubit measurement in {|angle+->}; answered by measure_outcome.
Message measure_angle(size_t qubit, double angle);
Message measure_outcome(size_t outcome);
Message done();

}  // namespace messages

/// What the server observes of a message. A quantum payload is opaque: only
/// its qubit count is visible.
Json server_view_payload(const Message &m);

/// Ordered message log in the "gtbqc-transcript/1" line format.
class Transcript {
   public:
    static constexpr const char *kSchema = "gtbqc-transcript/1";

    Transcript() = default;
    explicit Transcript(Json header);

    void record(const Message &m);
    void set_outcome(Json outcome) {
        outcome_ = std::move(outcome);
    }

    const Json &header() const {
        return header_;
    }
    const std::vector<Json> &lines() const {
        return lines_;
    }
    const Json &outcome() const {
        return outcome_;
    }
    size_t size() const {
        return lines_.size();
    }

    /// Header line, one line per message, then {"outcome": ...}.
    std::string to_jsonl() const;
    /// Server-visible projection: kind, direction and server_view_payload of
    /// every message, one per line.
    std::string server_view_jsonl() const;

   private:
    Json header_ = Json::object();
    std::vector<Json> lines_;
    Json outcome_ = Json::object();
};

}  // namespace gtbqc
