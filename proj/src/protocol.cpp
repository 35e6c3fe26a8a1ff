// Copyright 2026 The bqt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bqt/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "bqt/entanglement.hpp"
#include "bqt/ghz.hpp"

namespace bqt {

CooperationPolicy CooperationPolicy::parse(std::string_view name) {
    if (name == "honest") {
        return {};
    }
    if (name == "no-cz") {
        return {false, true, true};
    }
    if (name == "no-msg") {
        return {true, false, true};
    }
    if (name == "no-corr") {
        return {true, true, false};
    }
    throw BqtError(ErrorKind::InvalidInput, "unknown policy '" + std::string(name) + "'");
}

std::string CooperationPolicy::name() const {
    if (is_honest()) {
        return "honest";
    }
    if (*this == parse("no-cz")) {
        return "no-cz";
    }
    if (*this == parse("no-msg")) {
        return "no-msg";
    }
    if (*this == parse("no-corr")) {
        return "no-corr";
    }
    return "custom";
}

void ClassicalChannel::send(Party sender, BellOutcome payload) {
    ClassicalMessage msg{sender, ++sent_, payload};
    (sender == Party::Alice ? to_bob_ : to_alice_).push_back(msg);
}

std::optional<ClassicalMessage> ClassicalChannel::receive(Party receiver) {
    auto &queue = receiver == Party::Alice ? to_alice_ : to_bob_;
    if (queue.empty()) {
        return std::nullopt;
    }
    ClassicalMessage msg = queue.front();
    queue.pop_front();
    return msg;
}

Json coefficients_to_json(const QubitCoefficients &c) {
    return Json{{"c0", {c.zero.real(), c.zero.imag()}}, {"c1", {c.one.real(), c.one.imag()}}};
}

Json branch_to_json(const BranchRecord &r) {
    return Json{{"branch_index", r.index()},
                {"alice_outcome", to_string(r.alice_outcome)},
                {"bob_outcome", to_string(r.bob_outcome)},
                {"prob", r.prob},
                {"alice_corr", to_string(r.alice_corr)},
                {"bob_corr", to_string(r.bob_corr)},
                {"fid_alice", r.fid_alice},
                {"fid_bob", r.fid_bob}};
}

namespace {

Json policy_to_json(const CooperationPolicy &p) {
    return Json{{"name", p.name()},
                {"participate_cz", p.participate_cz},
                {"send_message", p.send_message},
                {"apply_correction", p.apply_correction}};
}

Json make_header(const ProtocolInputs &in, const CooperationPolicy &pa, const CooperationPolicy &pb,
                 std::string_view mode, std::optional<uint64_t> seed) {
    Json h;
    h["schema"] = kTranscriptSchema;
    h["mode"] = mode;
    h["rng_seed"] = seed ? Json(*seed) : Json(nullptr);
    h["inputs"] = Json{{"m", in.m}, {"n", in.n}, {"a", coefficients_to_json(in.a)}, {"b", coefficients_to_json(in.b)}};
    h["policy_a"] = policy_to_json(pa);
    h["policy_b"] = policy_to_json(pb);
    return h;
}

Json channel_event(const ChannelState &channel) {
    const ChannelDiagnostics d = diagnose_channel(channel);
    return Json{{"labels", channel.state.labels()},
                {"alice", channel.qubits_of(Party::Alice)},
                {"bob", channel.qubits_of(Party::Bob)},
                {"entropy_bits", d.entropy},
                {"schmidt_rank", d.schmidt_rank},
                {"verdict", d.teleportable() ? "OK" : "FAIL"}};
}

void log_channel(Transcript &t, const ChannelState &channel) {
    Json ev = channel_event(channel);
    const bool ok = ev["verdict"] == "OK";
    t.append("ChannelPrepared", std::move(ev));
    if (!ok) {
        t.append("ChannelWarning", Json{{"reason", "Schmidt rank across the party cut is below 4; "
                                                   "perfect exchange is not possible on this channel"}});
    }
}

struct Agent {
    Party role;
    CooperationPolicy policy;
    std::vector<QubitLabel> input_labels;
    QubitLabel input_qubit;     // the compressed qubit that is Bell-measured
    QubitLabel channel_qubit;   // measured together with input_qubit
    QubitLabel received_qubit;  // ends up carrying the counterpart's state
    std::vector<QubitLabel> held;  // residual |0> qubits after compression
    BellOutcome outcome{};
    std::optional<BellOutcome> heard;
};

QubitLabel pick(const std::vector<QubitLabel> &labels) {
    return labels.front();
}

SessionResult execute(const ProtocolInputs &in, const CooperationPolicy &pa, const CooperationPolicy &pb,
                      const ChannelState &channel, Rng *rng, std::optional<std::pair<BellOutcome, BellOutcome>> forced,
                      Json header) {
    if (in.m < 1 || in.n < 1) {
        throw BqtError(ErrorKind::InvalidInput, "m and n must be at least 1");
    }
    Transcript t(std::move(header));
    size_t peak = 0;
    auto track = [&peak](const StateVector &s) { peak = std::max(peak, s.num_qubits()); };

    Agent alice{Party::Alice, pa, input_labels(Party::Alice, in.m), "", kA1, kA2, {}, {}, {}};
    Agent bob{Party::Bob, pb, input_labels(Party::Bob, in.n), "", kB2, kB1, {}, {}, {}};
    alice.input_qubit = pick(alice.input_labels);
    bob.input_qubit = pick(bob.input_labels);

    log_channel(t, channel);

    // Local compression of GHZ-class inputs down to one qubit each.
    auto prepare = [&](Agent &agent, const QubitCoefficients &c) {
        const InformationState original(c, agent.input_labels);
        track(original.to_state_vector());
        if (agent.input_labels.size() == 1) {
            return std::make_pair(original, std::optional<StateVector>{});
        }
        CompressedState cs = ghz_compress(original);
        agent.held = cs.residual.labels();
        t.append("Compressed", Json{{"party", to_string(agent.role)},
                                    {"control", agent.input_qubit},
                                    {"targets", agent.held},
                                    {"cnots", agent.held.size()}});
        return std::make_pair(cs.single, std::optional<StateVector>(cs.residual));
    };
    auto [alice_single, alice_residual] = prepare(alice, in.a);
    auto [bob_single, bob_residual] = prepare(bob, in.b);

    const StateVector joint = compose_joint(alice_single, bob_single, channel);
    track(joint);

    auto measure = [&](const StateVector &state, Agent &agent, std::optional<BellOutcome> want) {
        BellProjection p = want ? bell_project(state, agent.input_qubit, agent.channel_qubit, *want)
                                : bsm_sample(state, agent.input_qubit, agent.channel_qubit, *rng);
        agent.outcome = p.outcome;
        t.append("BSMPerformed", Json{{"party", to_string(agent.role)},
                                      {"qubits", {agent.input_qubit, agent.channel_qubit}},
                                      {"outcome", to_string(p.outcome)},
                                      {"prob", p.prob}});
        return p;
    };
    const BellProjection alice_bsm =
        measure(joint, alice, forced ? std::optional(forced->first) : std::nullopt);
    const BellProjection bob_bsm =
        measure(*alice_bsm.collapsed, bob, forced ? std::optional(forced->second) : std::nullopt);
    StateVector state = bob_bsm.collapsed->permuted({kB1, kA2});

    // Classical exchange of the two-bit outcomes.
    ClassicalChannel link;
    for (Agent *agent : {&alice, &bob}) {
        if (agent->policy.send_message) {
            link.send(agent->role, agent->outcome);
            t.append("MessageSent", Json{{"sender", to_string(agent->role)},
                                         {"msg_seq", link.messages_sent()},
                                         {"payload", to_bits(agent->outcome)},
                                         {"bits", 2}});
        } else {
            t.append("MessageWithheld", Json{{"sender", to_string(agent->role)}});
        }
    }
    for (Agent *agent : {&bob, &alice}) {
        if (auto msg = link.receive(agent->role)) {
            agent->heard = msg->payload;
            t.append("MessageReceived", Json{{"receiver", to_string(agent->role)},
                                             {"sender", to_string(msg->sender)},
                                             {"msg_seq", msg->seq},
                                             {"payload", to_bits(msg->payload)}});
        }
    }

    // The nonlocal CZ needs both parties.
    if (pa.participate_cz && pb.participate_cz) {
        state = apply_cz(state, kA2, kB1);
        t.append("CZApplied", Json{{"control", kA2}, {"target", kB1}});
    } else {
        Json declined = Json::array();
        if (!pa.participate_cz) {
            declined.push_back("Alice");
        }
        if (!pb.participate_cz) {
            declined.push_back("Bob");
        }
        t.append("CZSkipped", Json{{"declined_by", declined}});
    }

    for (Agent *agent : {&alice, &bob}) {
        if (!agent->policy.apply_correction) {
            t.append("CorrectionSkipped", Json{{"party", to_string(agent->role)}, {"reason", "policy"}});
            continue;
        }
        CorrectionOp op = CorrectionOp::I;
        if (agent->heard) {
            const CorrectionPair pair = agent->role == Party::Alice ? correction_lookup(agent->outcome, *agent->heard)
                                                                    : correction_lookup(*agent->heard, agent->outcome);
            op = agent->role == Party::Alice ? pair.alice : pair.bob;
        }
        state = apply_1q(state, agent->received_qubit, correction_gate(op));
        t.append("CorrectionApplied", Json{{"party", to_string(agent->role)},
                                           {"qubit", agent->received_qubit},
                                           {"op", to_string(op)},
                                           {"basis", agent->heard ? "message" : "no-message"}});
    }

    // Reincarnation of the GHZ-class states on the receiving sides.
    if (alice_residual) {
        state = tensor(state, *alice_residual);
    }
    if (bob_residual) {
        state = tensor(state, *bob_residual);
    }
    std::vector<QubitLabel> bob_ghz{kB1}, alice_ghz{kA2};
    auto rebuild = [&](Agent &agent, size_t target, const std::string &prefix, std::vector<QubitLabel> &ghz) {
        if (target == 1) {
            return;
        }
        Reincarnation r = reincarnate_in(state, agent.received_qubit, agent.held, target, prefix);
        state = std::move(r.state);
        ghz = r.ghz_labels;
        t.append("Reincarnated", Json{{"party", to_string(agent.role)},
                                      {"control", agent.received_qubit},
                                      {"targets", std::vector<QubitLabel>(ghz.begin() + 1, ghz.end())},
                                      {"auxiliary", r.auxiliary},
                                      {"cnots", r.cnots}});
    };
    rebuild(bob, in.m, "X", bob_ghz);
    rebuild(alice, in.n, "Y", alice_ghz);
    track(state);

    auto score = [&](const std::vector<QubitLabel> &labels, const QubitCoefficients &c) {
        const StateVector want = InformationState(c, labels).to_state_vector();
        return std::clamp(reduced_density(state, labels).expectation(want), 0.0, 1.0);
    };
    const double fid_alice = score(alice_ghz, in.b);
    const double fid_bob = score(bob_ghz, in.a);
    t.append("Finalized", Json{{"fid_alice", fid_alice},
                               {"fid_bob", fid_bob},
                               {"messages", link.messages_sent()},
                               {"classical_bits", link.bits_sent()},
                               {"peak_qubits", peak}});

    return {std::move(t), alice.outcome, bob.outcome, alice_bsm.prob * bob_bsm.prob, fid_alice, fid_bob, peak};
}

}  // namespace

SessionResult run_protocol(const ProtocolInputs &inputs, const CooperationPolicy &policy_a,
                           const CooperationPolicy &policy_b, uint64_t seed, const ChannelState &channel) {
    Rng rng(seed);
    return execute(inputs, policy_a, policy_b, channel, &rng, std::nullopt,
                   make_header(inputs, policy_a, policy_b, "sample", seed));
}

SessionResult run_protocol_branch(const ProtocolInputs &inputs, const CooperationPolicy &policy_a,
                                  const CooperationPolicy &policy_b, BellOutcome alice, BellOutcome bob,
                                  const ChannelState &channel) {
    Json header = make_header(inputs, policy_a, policy_b, "branch", std::nullopt);
    header["branch_index"] = branch_index(alice, bob);
    return execute(inputs, policy_a, policy_b, channel, nullptr, std::make_pair(alice, bob), std::move(header));
}

BqtRun run_bqt(const QubitCoefficients &a, const QubitCoefficients &b, const RunMode &mode,
               const ChannelState &channel) {
    const ProtocolInputs in{1, 1, a, b};
    const auto honest = CooperationPolicy::honest();
    if (const auto *s = std::get_if<Sample>(&mode)) {
        SessionResult session = run_protocol(in, honest, honest, s->seed, channel);
        const CorrectionPair c = correction_lookup(session.alice_outcome, session.bob_outcome);
        const StateVector joint = compose_joint(InformationState::single(a, "a"), InformationState::single(b, "b"),
                                                channel);
        BqtRun run{std::move(session.transcript), {}};
        run.branches.push_back(
            evaluate_branch(joint, "a", "b", a, b, session.alice_outcome, session.bob_outcome, {true, c.alice, c.bob}));
        return run;
    }

    Transcript t(make_header(in, honest, honest, "enumerate", std::nullopt));
    log_channel(t, channel);
    BqtRun run{{}, enumerate_branches(a, b, channel)};
    double min_alice = 1, min_bob = 1;
    for (const auto &r : run.branches) {
        t.append("BranchEvaluated", branch_to_json(r));
        min_alice = std::min(min_alice, r.fid_alice);
        min_bob = std::min(min_bob, r.fid_bob);
    }
    t.append("Finalized", Json{{"fid_alice", min_alice}, {"fid_bob", min_bob}, {"branches", run.branches.size()}});
    run.transcript = std::move(t);
    return run;
}

MultiQubitRun run_bqt_multiqubit(size_t m, size_t n, const QubitCoefficients &a, const QubitCoefficients &b,
                                 const RunMode &mode) {
    const ProtocolInputs in{m, n, a, b};
    const auto honest = CooperationPolicy::honest();
    if (const auto *s = std::get_if<Sample>(&mode)) {
        SessionResult session = run_protocol(in, honest, honest, s->seed);
        MultiQubitRun run{std::move(session.transcript), {}};
        run.branches.push_back({session.alice_outcome, session.bob_outcome, session.prob, session.fid_alice,
                                session.fid_bob, session.peak_qubits});
        return run;
    }

    const ChannelState channel = build_cluster_channel();
    Transcript t(make_header(in, honest, honest, "enumerate", std::nullopt));
    log_channel(t, channel);
    MultiQubitRun run;
    double min_alice = 1, min_bob = 1;
    for (int k = 1; k <= 16; ++k) {
        auto [ao, bo] = branch_outcomes(k);
        SessionResult s = run_protocol_branch(in, honest, honest, ao, bo, channel);
        run.branches.push_back({ao, bo, s.prob, s.fid_alice, s.fid_bob, s.peak_qubits});
        t.append("BranchEvaluated", Json{{"branch_index", k},
                                         {"alice_outcome", to_string(ao)},
                                         {"bob_outcome", to_string(bo)},
                                         {"prob", s.prob},
                                         {"fid_alice", s.fid_alice},
                                         {"fid_bob", s.fid_bob},
                                         {"peak_qubits", s.peak_qubits}});
        min_alice = std::min(min_alice, s.fid_alice);
        min_bob = std::min(min_bob, s.fid_bob);
    }
    t.append("Finalized", Json{{"fid_alice", min_alice}, {"fid_bob", min_bob}, {"branches", run.branches.size()}});
    run.transcript = std::move(t);
    return run;
}

FidelityStats average_fidelity(const CooperationPolicy &policy_a, const CooperationPolicy &policy_b, size_t trials,
                               uint64_t seed, size_t m, size_t n) {
    if (trials < 1) {
        throw BqtError(ErrorKind::InvalidInput, "trials must be at least 1");
    }
    Rng master = Rng::derived(seed, 0);
    const ChannelState channel = build_cluster_channel();
    double sum_a = 0, sum_b = 0, sq_a = 0, sq_b = 0;
    for (size_t i = 0; i < trials; ++i) {
        const QubitCoefficients a = random_coefficients(master);
        const QubitCoefficients b = random_coefficients(master);
        const uint64_t session_seed = master.next_u64();
        const SessionResult s = run_protocol({m, n, a, b}, policy_a, policy_b, session_seed, channel);
        sum_a += s.fid_alice;
        sum_b += s.fid_bob;
        sq_a += s.fid_alice * s.fid_alice;
        sq_b += s.fid_bob * s.fid_bob;
    }
    const double count = static_cast<double>(trials);
    const double mean_a = sum_a / count;
    const double mean_b = sum_b / count;
    const auto spread = [count](double sq, double mean) { return std::sqrt(std::max(0.0, sq / count - mean * mean)); };
    return {mean_a, mean_b, spread(sq_a, mean_a), spread(sq_b, mean_b), trials};
}

}  // namespace bqt
