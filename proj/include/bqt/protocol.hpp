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

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bqt/bell.hpp"
#include "bqt/channel.hpp"
#include "bqt/engine.hpp"
#include "bqt/transcript.hpp"

namespace bqt {

/// What a party is willing to do. Honest means all three.
struct CooperationPolicy {
    bool participate_cz = true;
    bool send_message = true;
    bool apply_correction = true;

    static CooperationPolicy honest() {
        return {};
    }
    bool is_honest() const {
        return participate_cz && send_message && apply_correction;
    }
    /// "honest", "no-cz", "no-msg" or "no-corr".
    static CooperationPolicy parse(std::string_view name);
    std::string name() const;
    bool operator==(const CooperationPolicy &) const = default;
};

struct ClassicalMessage {
    Party sender;
    uint64_t seq;
    BellOutcome payload;  ///< two classical bits
};

/// Ideal in-process classical link: no loss, no reordering.
class ClassicalChannel {
   public:
    void send(Party sender, BellOutcome payload);
    /// Next message addressed to `receiver`, if any.
    std::optional<ClassicalMessage> receive(Party receiver);
    size_t messages_sent() const {
        return sent_;
    }
    size_t bits_sent() const {
        return 2 * sent_;
    }

   private:
    std::deque<ClassicalMessage> to_alice_;
    std::deque<ClassicalMessage> to_bob_;
    size_t sent_ = 0;
};

struct ProtocolInputs {
    size_t m = 1;  ///< Alice's GHZ size
    size_t n = 1;  ///< Bob's GHZ size
    QubitCoefficients a;
    QubitCoefficients b;
};

struct SessionResult {
    Transcript transcript;
    BellOutcome alice_outcome;
    BellOutcome bob_outcome;
    double prob;       ///< probability of the realized branch
    double fid_alice;  ///< Alice's reconstruction vs Bob's original state
    double fid_bob;
    size_t peak_qubits;
};

/// Drives one session with sampled Bell outcomes.
SessionResult run_protocol(const ProtocolInputs &inputs, const CooperationPolicy &policy_a,
                           const CooperationPolicy &policy_b, uint64_t seed,
                           const ChannelState &channel = build_cluster_channel());

/// Same session with the two Bell outcomes forced; used for enumeration.
SessionResult run_protocol_branch(const ProtocolInputs &inputs, const CooperationPolicy &policy_a,
                                  const CooperationPolicy &policy_b, BellOutcome alice, BellOutcome bob,
                                  const ChannelState &channel = build_cluster_channel());

struct Enumerate {};
struct Sample {
    uint64_t seed;
};
using RunMode = std::variant<Enumerate, Sample>;

struct BqtRun {
    Transcript transcript;
    std::vector<BranchRecord> branches;
};

/// Honest single-qubit exchange. Enumerate yields all 16 branches; Sample
/// yields the one realized branch.
BqtRun run_bqt(const QubitCoefficients &a, const QubitCoefficients &b, const RunMode &mode,
               const ChannelState &channel = build_cluster_channel());

struct MultiQubitBranch {
    BellOutcome alice_outcome;
    BellOutcome bob_outcome;
    double prob;
    double fid_alice;
    double fid_bob;
    size_t peak_qubits;
};

struct MultiQubitRun {
    Transcript transcript;
    std::vector<MultiQubitBranch> branches;
};

/// Honest m <-> n exchange of GHZ-class states.
MultiQubitRun run_bqt_multiqubit(size_t m, size_t n, const QubitCoefficients &a, const QubitCoefficients &b,
                                 const RunMode &mode);

struct FidelityStats {
    double mean_alice;
    double mean_bob;
    double stddev_alice;
    double stddev_bob;
    size_t trials;
};

/// Monte Carlo over random inputs and sampled branches; deterministic in seed.
FidelityStats average_fidelity(const CooperationPolicy &policy_a, const CooperationPolicy &policy_b, size_t trials,
                               uint64_t seed, size_t m = 1, size_t n = 1);

Json coefficients_to_json(const QubitCoefficients &c);
Json branch_to_json(const BranchRecord &r);

}  // namespace bqt
