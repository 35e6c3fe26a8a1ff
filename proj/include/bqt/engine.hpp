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

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bqt/bell.hpp"
#include "bqt/channel.hpp"
#include "bqt/rng.hpp"
#include "bqt/state_vector.hpp"

namespace bqt {

/// a0|0...0> + a1|1...1> over one or more labeled qubits. One qubit is the
/// plain single-qubit input; more is the GHZ-class input.
class InformationState {
   public:
    /// Throws NotNormalized or InvalidInput (no labels).
    InformationState(QubitCoefficients coefficients, std::vector<QubitLabel> labels);
    static InformationState single(QubitCoefficients coefficients, QubitLabel label);

    const QubitCoefficients &coefficients() const {
        return coefficients_;
    }
    const std::vector<QubitLabel> &labels() const {
        return labels_;
    }
    size_t qubit_count() const {
        return labels_.size();
    }
    StateVector to_state_vector() const;

   private:
    QubitCoefficients coefficients_;
    std::vector<QubitLabel> labels_;
};

/// Receiver-side recovery operation. ZX applies X first, then Z (matrix Z*X).
enum class CorrectionOp : uint8_t { I, X, Z, ZX };

inline constexpr std::array<CorrectionOp, 4> kCorrectionOps = {CorrectionOp::I, CorrectionOp::X, CorrectionOp::Z,
                                                               CorrectionOp::ZX};

std::string_view to_string(CorrectionOp op);
CorrectionOp correction_from_string(std::string_view s);
Gate1Q correction_gate(CorrectionOp op);

struct CorrectionPair {
    CorrectionOp alice;  ///< applied by Alice to A2
    CorrectionOp bob;    ///< applied by Bob to B1
    bool operator==(const CorrectionPair &) const = default;
};

/// Branch number 1..16 in the order the collapsed states are tabulated:
/// Bell type (psi/phi) of Alice, then of Bob, then Alice's sign, then Bob's.
int branch_index(BellOutcome alice, BellOutcome bob);
std::pair<BellOutcome, BellOutcome> branch_outcomes(int index);

/// The built-in correction table.
CorrectionPair correction_lookup(BellOutcome alice, BellOutcome bob);

/// |psi>_a (x) |phi>_b (x) channel, labels (alice input, bob input, A1, B1, A2, B2).
StateVector compose_joint(const InformationState &psi, const InformationState &phi, const ChannelState &ch);

/// Closed-form collapsed state of (B1, A2) for a pair of Bell outcomes,
/// written term by term. Independent of the simulator.
StateVector collapsed_state_reference(BellOutcome alice, BellOutcome bob, const QubitCoefficients &a,
                                      const QubitCoefficients &b);

/// What happens after both Bell measurements.
struct BranchSteps {
    bool apply_cz = true;
    CorrectionOp alice_correction = CorrectionOp::I;
    CorrectionOp bob_correction = CorrectionOp::I;
};

struct BranchRecord {
    BellOutcome alice_outcome;
    BellOutcome bob_outcome;
    double prob;
    StateVector collapsed;   ///< over (B1, A2), right after both measurements
    bool cz_applied;
    CorrectionOp alice_corr;
    CorrectionOp bob_corr;
    StateVector final_pair;  ///< over (B1, A2), after CZ and corrections
    /// Present when final_pair factorizes.
    std::optional<StateVector> alice_final;  ///< A2
    std::optional<StateVector> bob_final;    ///< B1
    double fid_alice;  ///< A2 against Bob's input
    double fid_bob;    ///< B1 against Alice's input

    int index() const {
        return branch_index(alice_outcome, bob_outcome);
    }
};

/// Runs one branch on a prepared joint state over
/// (alice_input, bob_input, A1, B1, A2, B2). Throws ImpossibleOutcome if the
/// branch has zero probability.
BranchRecord evaluate_branch(const StateVector &joint, const QubitLabel &alice_input, const QubitLabel &bob_input,
                             const QubitCoefficients &a, const QubitCoefficients &b, BellOutcome alice,
                             BellOutcome bob, const BranchSteps &steps);

/// Honest branch on the cluster channel: corrections from correction_lookup.
BranchRecord run_bqt_branch(const QubitCoefficients &a, const QubitCoefficients &b, BellOutcome alice,
                            BellOutcome bob);

/// All 16 branches (in branch_index order) on `ch`, skipping impossible
/// ones. Corrections come from correction_lookup.
std::vector<BranchRecord> enumerate_branches(const QubitCoefficients &a, const QubitCoefficients &b,
                                             const ChannelState &ch, bool apply_cz = true);

/// Every candidate correction pair (of the 16) that leaves both parties
/// with fidelity >= 1 - tol in the given branch, found by simulation.
std::vector<CorrectionPair> search_corrections(const QubitCoefficients &a, const QubitCoefficients &b,
                                               BellOutcome alice, BellOutcome bob, double tol = 1e-10);

/// min over branches of min(fid_alice, fid_bob).
double worst_branch_fidelity(const std::vector<BranchRecord> &branches);

}  // namespace bqt
