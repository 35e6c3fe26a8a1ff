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

#include "bqt/channel.hpp"

#include <algorithm>
#include <cmath>

#include "bqt/entanglement.hpp"

namespace bqt {

std::string_view to_string(Party p) {
    return p == Party::Alice ? "Alice" : "Bob";
}

std::vector<QubitLabel> ChannelState::qubits_of(Party p) const {
    std::vector<QubitLabel> out;
    for (const auto &l : state.labels()) {
        if (party_map.at(l) == p) {
            out.push_back(l);
        }
    }
    return out;
}

namespace {

std::map<QubitLabel, Party> default_parties() {
    return {{kA1, Party::Alice}, {kA2, Party::Alice}, {kB1, Party::Bob}, {kB2, Party::Bob}};
}

}  // namespace

ChannelState build_cluster_channel() {
    std::vector<Amplitude> amps(16, 0.0);
    amps[0b0000] = 0.5;
    amps[0b0011] = 0.5;
    amps[0b1100] = 0.5;
    amps[0b1111] = -0.5;
    return {StateVector({kA1, kB1, kA2, kB2}, std::move(amps)), default_parties()};
}

ChannelState channel_from_state(const StateVector &sv) {
    std::vector<QubitLabel> order{kA1, kB1, kA2, kB2};
    auto sorted = sv.labels();
    std::sort(sorted.begin(), sorted.end());
    auto expected = order;
    std::sort(expected.begin(), expected.end());
    if (sorted != expected) {
        throw BqtError(ErrorKind::LabelMismatch, "channel must be over exactly A1 B1 A2 B2");
    }
    StateVector reordered = sv.permuted(order);
    if (std::abs(reordered.norm_squared() - 1.0) > kNormTolerance) {
        throw BqtError(ErrorKind::NotNormalized,
                       "channel squared norm is " + std::to_string(reordered.norm_squared()));
    }
    return {StateVector(order, {reordered.amplitudes().begin(), reordered.amplitudes().end()}),
            default_parties()};
}

ChannelDiagnostics diagnose_channel(const ChannelState &ch) {
    const auto alice = ch.qubits_of(Party::Alice);
    return {entanglement_entropy(ch.state, alice), schmidt_rank(ch.state, alice)};
}

}  // namespace bqt
