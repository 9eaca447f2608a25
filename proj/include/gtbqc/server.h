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

#include <deque>
#include <string>
#include <vector>

#include "gtbqc/pauli_frame.h"
#include "gtbqc/rng.h"
#include "gtbqc/state_vector.h"
#include "gtbqc/transcript.h"

namespace gtbqc {

/// Server behaviour at its decision points.
///
/// kMeasurePairs measures the second (register-bound) qubit of every
/// incoming pair in the Z or X basis before storing it. kFalseSigma replaces
/// each reported Bell label by a uniform one with the given probability.
struct CheatModel {
    enum class Strategy { kHonest, kMeasurePairs, kFalseSigma };
    Strategy strategy = Strategy::kHonest;
    Axis basis = Axis::Z;
    double probability = 1.0;

    /// "honest", "measure-pairs:z", "measure-pairs:x", "false-sigma:<p>".
    static CheatModel parse(const std::string &spec);
    std::string str() const;
};

/// Gate teleportation on a register: appends pair, Bell-measures
/// (register_qubit, pair qubit 0) and moves pair qubit 1 into the place of
/// register_qubit. Returns the Bell label.
Pauli gt_procedure(StateVector &reg, size_t register_qubit, const StateVector &pair, Rng &rng);

/// Server state machine. Incoming pairs wait in a FIFO until a gt
/// instruction consumes the oldest one.
class Server {
   public:
    Server(size_t num_qubits, std::vector<Unitary2> public_gates, CheatModel cheat, Rng rng);

    /// Processes one client message and returns the replies.
    std::vector<Message> handle(const Message &m);

    /// Register contents; simulation harness access only.
    const StateVector &register_state() const {
        return reg_;
    }
    size_t pending_pairs() const {
        return pending_.size();
    }

   private:
    size_t qubit_arg(const Json &payload, const char *key) const;

    StateVector reg_;
    std::vector<Unitary2> gates_;
    CheatModel cheat_;
    Rng rng_;
    std::deque<StateVector> pending_;
};

/// Ordered, lossless in-process duplex queue. send() records the message,
/// lets the server process it and queues the replies for receive().
class Channel {
   public:
    Channel(Server &server, Transcript &transcript) : server_(server), transcript_(transcript) {
    }

    void send(const Message &m);
    /// Next server reply of the expected kind; ProtocolAbort otherwise.
    Message receive(const std::string &kind);

   private:
    Server &server_;
    Transcript &transcript_;
    std::deque<Message> to_client_;
};

}  // namespace gtbqc
