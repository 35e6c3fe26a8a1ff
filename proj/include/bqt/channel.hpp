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

#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "bqt/state_vector.hpp"

namespace bqt {

enum class Party : uint8_t { Alice, Bob };

std::string_view to_string(Party p);

inline const QubitLabel kA1 = "A1";
inline const QubitLabel kB1 = "B1";
inline const QubitLabel kA2 = "A2";
inline const QubitLabel kB2 = "B2";

/// Four-qubit resource state shared by the two parties, stored in the
/// canonical label order [A1, B1, A2, B2]. A1, A2 belong to Alice.
struct ChannelState {
    StateVector state;
    std::map<QubitLabel, Party> party_map;

    std::vector<QubitLabel> qubits_of(Party p) const;
};

/// (|0000> + |0011> + |1100> - |1111>)/2 over [A1, B1, A2, B2].
ChannelState build_cluster_channel();

/// Wraps an arbitrary normalized state over exactly {A1, B1, A2, B2}
/// (any order). Throws LabelMismatch or NotNormalized.
ChannelState channel_from_state(const StateVector &sv);

struct ChannelDiagnostics {
    double entropy;    ///< bits, across {A1,A2} | {B1,B2}
    int schmidt_rank;  ///< across the same cut
    /// The protocol needs the full rank-4 Schmidt decomposition across the
    /// party cut.
    bool teleportable() const {
        return schmidt_rank == 4;
    }
};

ChannelDiagnostics diagnose_channel(const ChannelState &ch);

}  // namespace bqt
