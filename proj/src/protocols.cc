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


#include "gtbqc/protocols.h"

#include <deque>
#include <memory>
#include <numbers>
#include <set>

#include "gtbqc/errors.h"
#include "gtbqc/pauli_frame.h"

namespace gtbqc {

namespace {

constexpr double kPi = std::numbers::pi;

/// A single-qubit gate delivered through one GT round.
struct DelegatedGate {
    std::optional<size_t> index;
    Unitary2 u;
};

struct Op {
    enum class Kind { kRound, kCz };
    Kind kind;
    size_t a;
    size_t b;
    DelegatedGate gate;
};

std::optional<size_t> find_in_set(const std::vector<Unitary2> &set, const Unitary2 &u) {
    for (size_t k = 0; k < set.size(); k++) {
        if (phase_equal(set[k], u)) {
            return k;
        }
    }
    return std::nullopt;
}

// Two rounds (first, second) with set[second] set[first] ~ target.
std::pair<size_t, size_t> two_round_realization(const std::vector<Unitary2> &set, const Unitary2 &target,
                                                std::optional<size_t> preferred_first) {
    std::optional<std::pair<size_t, size_t>> found;
    for (size_t x = 0; x < set.size(); x++) {
        for (size_t y = 0; y < set.size(); y++) {
            if (phase_equal(set[y] * set[x], target)) {
                if (!preferred_first.has_value() || x == *preferred_first) {
                    return {x, y};
                }
                if (!found.has_value()) {
                    found = std::make_pair(x, y);
                }
            }
        }
    }
    if (!found.has_value()) {
        throw ConfigError("gate set cannot realize " + format_matrix(target.matrix()) + " in two rounds");
    }
    return *found;
}

class Client {
   public:
    Client(Variant variant, const CircuitProgram &program, uint64_t seed, const RunOptions &options)
        : variant_(variant),
          program_(program),
          gate_set_(options.gate_set.empty() ? default_gate_set(variant) : options.gate_set),
          options_(options),
          rng_(Rng::substream(seed, 0)),
          transcript_(Json{{"variant", variant_name(variant)},
                           {"seed", seed},
                           {"client_stream", mix_seed(seed, 0)},
                           {"server_stream", mix_seed(seed, 1)},
                           {"num_qubits", program.num_qubits},
                           {"cheat", options.cheat.str()},
                           {"batch_pairs", options.batch_pairs}}),
          server_(program.num_qubits, gate_set_, options.cheat, Rng::substream(seed, 1)),
          channel_(server_, transcript_) {
        program_.validate(gate_set_.size());
        if (!program_.trap_marked_qubits().empty()) {
            throw ValueError("program contains unresolved trap markers");
        }
    }
    virtual ~Client() = default;

    RunResult run() {
        auto ops = compile();
        if (options_.batch_pairs) {
            if (!supports_batching()) {
                throw ConfigError(variant_name(variant_) + " pairs depend on earlier outcomes and cannot be batched");
            }
            for (const auto &op : ops) {
                if (op.kind == Op::Kind::kRound) {
                    send_pair(op.a, op.gate);
                }
            }
        }
        for (const auto &op : ops) {
            if (op.kind == Op::Kind::kRound) {
                round(op.a, op.gate);
            } else {
                before_cz(op.a, op.b);
                channel_.send(messages::cz(op.a, op.b));
                after_cz(op.a, op.b);
            }
        }
        before_measure();

        RunResult result;
        // Harness-side decode of the register against the intended circuit.
        StateVector decoded = server_.register_state();
        for (size_t q = 0; q < program_.num_qubits; q++) {
            decoded.apply_1q(q, frame(q).adjoint());
        }
        result.fidelity = fidelity_up_to_phase(decoded, direct_simulate(program_, gate_set_));

        std::vector<size_t> all(program_.num_qubits);
        for (size_t q = 0; q < all.size(); q++) {
            all[q] = q;
        }
        channel_.send(messages::measure(all));
        result.raw_bits = channel_.receive("measure_report").payload["bits"].get<std::vector<int>>();
        for (size_t q = 0; q < all.size(); q++) {
            auto p = identify_pauli(MatX(frame(q).matrix()));
            if (!p.has_value()) {
                throw ConfigError("output frame is not a Pauli operator");
            }
            bool flip = p->label == Pauli::X || p->label == Pauli::Y;
            result.decoded_bits.push_back(result.raw_bits[q] ^ (int)flip);
        }
        channel_.send(messages::done());

        result.gt_rounds = gt_rounds_;
        result.attempts = attempts_;
        Json outcome{{"fidelity", result.fidelity},
                     {"raw_bits", result.raw_bits},
                     {"decoded_bits", result.decoded_bits},
                     {"gt_rounds", result.gt_rounds}};
        if (!attempts_.empty()) {
            outcome["attempts"] = attempts_;
        }
        transcript_.set_outcome(std::move(outcome));
        result.transcript = std::move(transcript_);
        return result;
    }

   protected:
    /// Gates realizing the 2q-slot choice on the second qubit.
    virtual std::vector<DelegatedGate> slot_gates(bool entangle) = 0;
    virtual bool supports_batching() const {
        return false;
    }
    /// Prepares and sends the pair of one round, keeping its secrets.
    virtual void send_pair(size_t q, const DelegatedGate &g) = 0;
    virtual void round(size_t q, const DelegatedGate &g) = 0;
    virtual void before_cz(size_t, size_t) {
    }
    virtual void after_cz(size_t a, size_t b) = 0;
    virtual void before_measure() {
    }
    /// Register qubit q holds frame(q) applied to the intended state.
    virtual Unitary2 frame(size_t q) const = 0;

    DelegatedGate program_gate(const GateRequest &r) {
        if (r.kind == GateRequest::Kind::kIndex) {
            return {r.index, gate_set_[r.index]};
        }
        return {find_in_set(gate_set_, r.matrix), r.matrix};
    }

    Pauli gt(size_t q) {
        channel_.send(messages::gt(q));
        gt_rounds_++;
        return pauli_from_char(channel_.receive("bell").payload["sigma"].get<std::string>().at(0));
    }

    Variant variant_;
    CircuitProgram program_;
    std::vector<Unitary2> gate_set_;
    RunOptions options_;
    Rng rng_;
    Transcript transcript_;
    Server server_;
    Channel channel_;
    size_t gt_rounds_ = 0;
    std::vector<size_t> attempts_;

   private:
    std::vector<Op> compile() {
        std::vector<Op> ops;
        for (size_t l = 0; l < program_.layers.size(); l++) {
            const auto &layer = program_.layers[l];
            for (size_t q = 0; q < program_.num_qubits; q++) {
                ops.push_back({Op::Kind::kRound, q, q, program_gate(layer.gates[q])});
            }
            auto pairs = brickwork_pairs(l, program_.num_qubits);
            for (size_t k = 0; k < pairs.size(); k++) {
                auto [a, b] = pairs[k];
                ops.push_back({Op::Kind::kCz, a, b, {}});
                for (const auto &g : slot_gates(layer.entangle[k])) {
                    ops.push_back({Op::Kind::kRound, b, b, g});
                }
                ops.push_back({Op::Kind::kCz, a, b, {}});
            }
        }
        return ops;
    }
};

// Pauli frame shared by the haar and trap-free clients.
class PauliFrameClient : public Client {
   public:
    using Client::Client;

   protected:
    void after_cz(size_t a, size_t b) override {
        frame_.push_through_cz(a, b);
    }
    Unitary2 frame(size_t q) const override {
        return frame_[q].unitary();
    }
    PauliFrame frame_{program_.num_qubits};
};

class StochasticClient : public Client {
   public:
    using Client::Client;

   protected:
    std::vector<DelegatedGate> slot_gates(bool entangle) override {
        return {{std::nullopt, entangle ? entangler() : Unitary2::identity()}};
    }
    void send_pair(size_t, const DelegatedGate &) override {
    }
    void round(size_t q, const DelegatedGate &g) override {
        Unitary2 v = g.u;
        for (size_t attempt = 1;; attempt++) {
            if (attempt > options_.max_attempts) {
                throw ProtocolAbort("stochastic GT exceeded " + std::to_string(options_.max_attempts) + " attempts");
            }
            channel_.send(messages::pair(prepare_phi_v(v)));
            Pauli sigma = gt(q);
            if (sigma == Pauli::I) {
                attempts_.push_back(attempt);
                return;
            }
            v = next_stochastic_v(v, sigma);
        }
    }
    void after_cz(size_t, size_t) override {
    }
    Unitary2 frame(size_t) const override {
        return Unitary2::identity();
    }
};

class CliffordClient : public Client {
   public:
    CliffordClient(const CircuitProgram &program, uint64_t seed, const RunOptions &options)
        : Client(Variant::kClifford, program, seed, options), frame_(program.num_qubits) {
        auto two = check_two_qubit_commutation(cz_gate());
        if (!two.holds) {
            throw ConfigError("CZ fails the two-qubit commutation criterion");
        }
        witnesses_ = check_one_qubit_commutation(gate_set_);
        if (!witnesses_.holds) {
            throw ConfigError("gate set fails the one-qubit commutation criterion");
        }
        for (const auto &w : witnesses_.witnesses) {
            if (!clifford_index(gate_set_[w.v_prime] * gate_set_[w.v].adjoint()).has_value()) {
                throw ConfigError("commutation witness leaves the Clifford group");
            }
        }
        auto id = two_round_realization(gate_set_, Unitary2::identity(), std::nullopt);
        auto s = two_round_realization(gate_set_, entangler(), id.first);
        identity_rounds_ = id;
        entangle_rounds_ = s;
    }

   protected:
    std::vector<DelegatedGate> slot_gates(bool entangle) override {
        auto [x, y] = entangle ? entangle_rounds_ : identity_rounds_;
        return {{x, gate_set_[x]}, {y, gate_set_[y]}};
    }
    void send_pair(size_t, const DelegatedGate &) override {
    }
    void round(size_t q, const DelegatedGate &g) override {
        if (!g.index.has_value()) {
            throw ConfigError("clifford variant: gate is not in the public gate set");
        }
        const Unitary2 &c = frame_[q];
        channel_.send(messages::pair(prepare_phi_v(g.u * c.adjoint())));
        Pauli sigma = gt(q);
        Pauli inner = conjugated_label(c, sigma);
        const auto &w = witnesses_.lookup(*g.index, inner);
        frame_[q] = pauli_matrix(w.sigma_prime) * (gate_set_[w.v_prime] * g.u.adjoint());
    }
    void before_cz(size_t a, size_t b) override {
        flush(a);
        flush(b);
    }
    void after_cz(size_t a, size_t b) override {
        PauliPair in{pauli_label(frame_[a]), pauli_label(frame_[b]), 0};
        PauliPair out = push_through_cz(in);
        frame_[a] = pauli_matrix(out.first);
        frame_[b] = pauli_matrix(out.second);
    }
    void before_measure() override {
        for (size_t q = 0; q < program_.num_qubits; q++) {
            flush(q);
        }
    }
    Unitary2 frame(size_t q) const override {
        return frame_[q];
    }

   private:
    // Label of c^dagger sigma c.
    static Pauli conjugated_label(const Unitary2 &c, Pauli sigma) {
        auto p = identify_pauli(MatX((c.adjoint() * pauli_matrix(sigma) * c).matrix()));
        if (!p.has_value()) {
            throw ConfigError("clifford frame does not normalize the Pauli group");
        }
        return p->label;
    }
    static Pauli pauli_label(const Unitary2 &u) {
        auto p = identify_pauli(MatX(u.matrix()));
        if (!p.has_value()) {
            throw ConfigError("frame is not a Pauli operator at a CZ");
        }
        return p->label;
    }
    void flush(size_t q) {
        const Unitary2 &c = frame_[q];
        channel_.send(messages::pair(prepare_phi_v(c.adjoint())));
        Pauli sigma = gt(q);
        frame_[q] = pauli_matrix(conjugated_label(c, sigma));
    }

    std::vector<Unitary2> frame_;
    OneQubitCommutationReport witnesses_;
    std::pair<size_t, size_t> identity_rounds_;
    std::pair<size_t, size_t> entangle_rounds_;
};

class HaarClient : public PauliFrameClient {
   public:
    HaarClient(const CircuitProgram &program, uint64_t seed, const RunOptions &options)
        : PauliFrameClient(Variant::kHaar, program, seed, options) {
    }

   protected:
    std::vector<DelegatedGate> slot_gates(bool entangle) override {
        return {{std::nullopt, entangle ? entangler() : Unitary2::identity()}};
    }
    bool supports_batching() const override {
        return true;
    }
    void send_pair(size_t, const DelegatedGate &) override {
        Unitary2 v = haar_su2(rng_);
        if (options_.fixed_haar_v.has_value()) {
            v = *options_.fixed_haar_v;
        }
        secrets_.push_back(v);
        channel_.send(messages::pair(prepare_phi_v(v)));
    }
    void round(size_t q, const DelegatedGate &g) override {
        if (!options_.batch_pairs) {
            send_pair(q, g);
        }
        Unitary2 v = secrets_.front();
        secrets_.pop_front();
        Pauli sigma = gt(q);
        PauliOp tau(kAllPaulis[rng_.uniform_index(4)]);
        Unitary2 r = tau.unitary() * g.u * frame_[q].unitary() * pauli_matrix(sigma) * v.adjoint();
        channel_.send(messages::apply_matrix(q, r));
        frame_[q] = tau;
    }

   private:
    std::deque<Unitary2> secrets_;
};

class TrapFreeClient : public PauliFrameClient {
   public:
    TrapFreeClient(const CircuitProgram &program, uint64_t seed, const RunOptions &options)
        : PauliFrameClient(Variant::kTrapFree, program, seed, options),
          v_set_(options.v_set.empty() ? default_trapfree_v_set() : options.v_set),
          table_(build_substitution_table(gate_set_, v_set_)) {
        auto id = two_round_realization(gate_set_, Unitary2::identity(), std::nullopt);
        identity_rounds_ = id;
        entangle_rounds_ = two_round_realization(gate_set_, entangler(), id.first);
    }

   protected:
    struct Secret {
        size_t j;
        Pauli tau;
    };

    std::vector<DelegatedGate> slot_gates(bool entangle) override {
        auto [x, y] = entangle ? entangle_rounds_ : identity_rounds_;
        return {{x, gate_set_[x]}, {y, gate_set_[y]}};
    }
    bool supports_batching() const override {
        return true;
    }
    void send_pair(size_t, const DelegatedGate &g) override {
        size_t i = require_index(g);
        Secret s{rng_.uniform_index(gate_set_.size()), kAllPaulis[rng_.uniform_index(4)]};
        if (options_.omit_tau) {
            s.tau = Pauli::I;
        }
        const Unitary2 &v = v_set_[table_.lookup(i, s.j, Pauli::I).v_index];
        secrets_.push_back(s);
        channel_.send(messages::pair(prepare_phi_v(v * pauli_matrix(s.tau))));
    }
    void round(size_t q, const DelegatedGate &g) override {
        size_t i = require_index(g);
        if (!options_.batch_pairs) {
            send_pair(q, g);
        }
        Secret s = secrets_.front();
        secrets_.pop_front();
        Pauli sigma_gt = gt(q);
        PauliOp sigma = PauliOp(s.tau) * PauliOp(sigma_gt) * frame_[q];
        const auto &e = table_.lookup(i, s.j, sigma.label);
        channel_.send(messages::apply_index(q, e.u_prime));
        if (options_.trapfree_observer) {
            options_.trapfree_observer({q, i, frame_[q].label, sigma_gt, e.u_prime});
        }
        frame_[q] = PauliOp(e.sigma_prime);
    }

   private:
    static size_t require_index(const DelegatedGate &g) {
        if (!g.index.has_value()) {
            throw ConfigError("trapfree variant: gate is not in the public gate set");
        }
        return *g.index;
    }

    std::vector<Unitary2> v_set_;
    SubstitutionTable table_;
    std::deque<Secret> secrets_;
    std::pair<size_t, size_t> identity_rounds_;
    std::pair<size_t, size_t> entangle_rounds_;
};

}  // namespace

Unitary2 next_stochastic_v(const Unitary2 &v, Pauli sigma) {
    return v * pauli_matrix(sigma) * v.adjoint();
}

size_t place_two_qubit_layer(StateVector &reg, const std::vector<std::pair<size_t, size_t>> &pairs,
                             const std::vector<bool> &choices, Rng &rng, size_t max_attempts) {
    if (pairs.size() != choices.size()) {
        throw ValueError("place_two_qubit_layer: one choice per pair required");
    }
    std::set<size_t> used;
    for (auto [a, b] : pairs) {
        if (b != a + 1 || b >= reg.num_qubits()) {
            throw ValueError("place_two_qubit_layer: pair (" + std::to_string(a) + ", " + std::to_string(b) +
                             ") violates brickwork adjacency");
        }
        if (!used.insert(a).second || !used.insert(b).second) {
            throw ValueError("place_two_qubit_layer: pairs overlap");
        }
    }
    size_t attempts = 0;
    for (size_t k = 0; k < pairs.size(); k++) {
        auto [a, b] = pairs[k];
        reg.apply_2q(a, b, cz_gate());
        Unitary2 v = choices[k] ? entangler() : Unitary2::identity();
        for (size_t n = 1;; n++) {
            if (n > max_attempts) {
                throw ProtocolAbort("stochastic GT exceeded the attempt cap");
            }
            attempts++;
            Pauli sigma = gt_procedure(reg, b, prepare_phi_v(v), rng);
            if (sigma == Pauli::I) {
                break;
            }
            v = next_stochastic_v(v, sigma);
        }
        reg.apply_2q(a, b, cz_gate());
    }
    return attempts;
}

std::vector<Unitary2> default_trapfree_v_set() {
    std::vector<Unitary2> out;
    for (int k = 0; k < 8; k++) {
        out.push_back(z_rotation(kPi * k / 4));
    }
    return out;
}

RunResult run_stochastic(const CircuitProgram &program, uint64_t seed, const RunOptions &options) {
    return StochasticClient(Variant::kStochastic, program, seed, options).run();
}

RunResult run_nonstochastic_clifford(const CircuitProgram &program, uint64_t seed, const RunOptions &options) {
    return CliffordClient(program, seed, options).run();
}

RunResult run_haar_su2(const CircuitProgram &program, uint64_t seed, const RunOptions &options) {
    return HaarClient(program, seed, options).run();
}

RunResult run_trap_free(const CircuitProgram &program, uint64_t seed, const RunOptions &options) {
    return TrapFreeClient(program, seed, options).run();
}

RunResult run_variant(Variant variant, const CircuitProgram &program, uint64_t seed, const RunOptions &options) {
    switch (variant) {
        case Variant::kStochastic:
            return run_stochastic(program, seed, options);
        case Variant::kClifford:
            return run_nonstochastic_clifford(program, seed, options);
        case Variant::kHaar:
            return run_haar_su2(program, seed, options);
        case Variant::kTrapFree:
            return run_trap_free(program, seed, options);
    }
    throw ValueError("unknown variant");
}

}  // namespace gtbqc
