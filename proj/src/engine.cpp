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

#include "bqt/engine.hpp"

#include <algorithm>
#include <cmath>

#include "bqt/entanglement.hpp"

namespace bqt {

InformationState::InformationState(QubitCoefficients coefficients, std::vector<QubitLabel> labels)
    : coefficients_(coefficients), labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw BqtError(ErrorKind::InvalidInput, "information state needs at least one qubit");
    }
    const double n = coefficients_.norm_squared();
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw BqtError(ErrorKind::NotNormalized, "|c0|^2 + |c1|^2 = " + std::to_string(n));
    }
}

InformationState InformationState::single(QubitCoefficients coefficients, QubitLabel label) {
    return InformationState(coefficients, {std::move(label)});
}

StateVector InformationState::to_state_vector() const {
    std::vector<Amplitude> amps(size_t{1} << labels_.size(), 0.0);
    amps.front() = coefficients_.zero;
    amps.back() = coefficients_.one;
    return StateVector(labels_, std::move(amps));
}

std::string_view to_string(CorrectionOp op) {
    switch (op) {
        case CorrectionOp::I:
            return "I";
        case CorrectionOp::X:
            return "X";
        case CorrectionOp::Z:
            return "Z";
        case CorrectionOp::ZX:
            return "ZX";
    }
    return "?";
}

CorrectionOp correction_from_string(std::string_view s) {
    for (auto op : kCorrectionOps) {
        if (to_string(op) == s) {
            return op;
        }
    }
    throw BqtError(ErrorKind::InvalidInput, "unknown correction '" + std::string(s) + "'");
}

Gate1Q correction_gate(CorrectionOp op) {
    switch (op) {
        case CorrectionOp::I:
            return Gate1Q::identity();
        case CorrectionOp::X:
            return Gate1Q::pauli_x();
        case CorrectionOp::Z:
            return Gate1Q::pauli_z();
        case CorrectionOp::ZX: {
            Gate1Q g = Gate1Q::pauli_z() * Gate1Q::pauli_x();
            g.name = "ZX";
            return g;
        }
    }
    throw BqtError(ErrorKind::InvalidInput, "bad correction op");
}

int branch_index(BellOutcome alice, BellOutcome bob) {
    const int a = static_cast<int>(alice);
    const int b = static_cast<int>(bob);
    // bit 1 of the enum is the psi/phi type, bit 0 the sign.
    return 1 + 8 * (a >> 1) + 4 * (b >> 1) + 2 * (a & 1) + (b & 1);
}

std::pair<BellOutcome, BellOutcome> branch_outcomes(int index) {
    if (index < 1 || index > 16) {
        throw BqtError(ErrorKind::InvalidInput, "branch index must be in 1..16");
    }
    const int k = index - 1;
    const int a = ((k >> 3) & 1) * 2 + ((k >> 1) & 1);
    const int b = ((k >> 2) & 1) * 2 + (k & 1);
    return {static_cast<BellOutcome>(a), static_cast<BellOutcome>(b)};
}

namespace {

using enum CorrectionOp;

// Row k-1 holds the (Alice, Bob) operations for branch k.
constexpr std::array<CorrectionPair, 16> kCorrectionTable = {{
    {I, I},
    {Z, I},
    {I, Z},
    {Z, Z},
    {X, I},
    {ZX, I},
    {X, Z},
    {ZX, Z},
    {I, X},
    {Z, X},
    {I, ZX},
    {Z, ZX},
    {X, X},
    {ZX, X},
    {X, ZX},
    {ZX, ZX},
}};

struct Term {
    int sign;
    uint8_t ket;  // B1 A2, B1 is the high bit
};

// Collapsed (B1, A2) states, one row per branch. Each row lists the sign and
// ket attached to a0b0, a0b1, a1b0, a1b1 in that order.
constexpr std::array<std::array<Term, 4>, 16> kCollapsedTable = {{
    {{{+1, 0b00}, {+1, 0b01}, {+1, 0b10}, {-1, 0b11}}},
    {{{+1, 0b00}, {-1, 0b01}, {+1, 0b10}, {+1, 0b11}}},
    {{{+1, 0b00}, {+1, 0b01}, {-1, 0b10}, {+1, 0b11}}},
    {{{+1, 0b00}, {-1, 0b01}, {-1, 0b10}, {-1, 0b11}}},
    {{{+1, 0b01}, {+1, 0b00}, {-1, 0b11}, {+1, 0b10}}},
    {{{+1, 0b01}, {-1, 0b00}, {-1, 0b11}, {-1, 0b10}}},
    {{{+1, 0b01}, {+1, 0b00}, {+1, 0b11}, {-1, 0b10}}},
    {{{+1, 0b01}, {-1, 0b00}, {+1, 0b11}, {+1, 0b10}}},
    {{{+1, 0b10}, {-1, 0b11}, {+1, 0b00}, {+1, 0b01}}},
    {{{+1, 0b10}, {+1, 0b11}, {+1, 0b00}, {-1, 0b01}}},
    {{{+1, 0b10}, {-1, 0b11}, {-1, 0b00}, {-1, 0b01}}},
    {{{+1, 0b10}, {+1, 0b11}, {-1, 0b00}, {+1, 0b01}}},
    {{{-1, 0b11}, {+1, 0b10}, {+1, 0b01}, {+1, 0b00}}},
    {{{-1, 0b11}, {-1, 0b10}, {+1, 0b01}, {-1, 0b00}}},
    {{{-1, 0b11}, {+1, 0b10}, {-1, 0b01}, {-1, 0b00}}},
    {{{-1, 0b11}, {-1, 0b10}, {-1, 0b01}, {+1, 0b00}}},
}};

}  // namespace

CorrectionPair correction_lookup(BellOutcome alice, BellOutcome bob) {
    return kCorrectionTable[branch_index(alice, bob) - 1];
}

StateVector compose_joint(const InformationState &psi, const InformationState &phi, const ChannelState &ch) {
    return tensor(tensor(psi.to_state_vector(), phi.to_state_vector()), ch.state);
}

StateVector collapsed_state_reference(BellOutcome alice, BellOutcome bob, const QubitCoefficients &a,
                                      const QubitCoefficients &b) {
    const auto &row = kCollapsedTable[branch_index(alice, bob) - 1];
    const std::array<Amplitude, 4> products = {a.zero * b.zero, a.zero * b.one, a.one * b.zero, a.one * b.one};
    std::vector<Amplitude> amps(4, 0.0);
    for (size_t t = 0; t < 4; ++t) {
        amps[row[t].ket] += static_cast<double>(row[t].sign) * products[t];
    }
    return StateVector::unnormalized({kB1, kA2}, std::move(amps));
}

BranchRecord evaluate_branch(const StateVector &joint, const QubitLabel &alice_input, const QubitLabel &bob_input,
                             const QubitCoefficients &a, const QubitCoefficients &b, BellOutcome alice,
                             BellOutcome bob, const BranchSteps &steps) {
    const BellProjection pa = bell_project(joint, alice_input, kA1, alice);
    const BellProjection pb = bell_project(*pa.collapsed, bob_input, kB2, bob);
    StateVector collapsed = pb.collapsed->permuted({kB1, kA2});

    StateVector state = collapsed;
    if (steps.apply_cz) {
        state = apply_cz(state, kA2, kB1);
    }
    state = apply_1q(state, kA2, correction_gate(steps.alice_correction));
    state = apply_1q(state, kB1, correction_gate(steps.bob_correction));

    const StateVector want_alice = StateVector::qubit(kA2, b.zero, b.one);
    const StateVector want_bob = StateVector::qubit(kB1, a.zero, a.one);
    const double fid_alice = reduced_density(state, {kA2}).expectation(want_alice);
    const double fid_bob = reduced_density(state, {kB1}).expectation(want_bob);

    std::optional<StateVector> alice_final, bob_final;
    if (auto parts = split_product(state, {kA2})) {
        alice_final = std::move(parts->first);
        bob_final = std::move(parts->second);
    }
    return BranchRecord{alice,
                        bob,
                        pa.prob * pb.prob,
                        std::move(collapsed),
                        steps.apply_cz,
                        steps.alice_correction,
                        steps.bob_correction,
                        std::move(state),
                        std::move(alice_final),
                        std::move(bob_final),
                        fid_alice,
                        fid_bob};
}

namespace {

StateVector default_joint(const QubitCoefficients &a, const QubitCoefficients &b, const ChannelState &ch) {
    return compose_joint(InformationState::single(a, "a"), InformationState::single(b, "b"), ch);
}

}  // namespace

BranchRecord run_bqt_branch(const QubitCoefficients &a, const QubitCoefficients &b, BellOutcome alice,
                            BellOutcome bob) {
    const CorrectionPair c = correction_lookup(alice, bob);
    return evaluate_branch(default_joint(a, b, build_cluster_channel()), "a", "b", a, b, alice, bob,
                           {true, c.alice, c.bob});
}

std::vector<BranchRecord> enumerate_branches(const QubitCoefficients &a, const QubitCoefficients &b,
                                             const ChannelState &ch, bool apply_cz) {
    const StateVector joint = default_joint(a, b, ch);
    std::vector<BranchRecord> out;
    for (int k = 1; k <= 16; ++k) {
        auto [ao, bo] = branch_outcomes(k);
        const BellProjection pa = bsm_enumerate(joint, "a", kA1)[static_cast<size_t>(ao)];
        if (!pa.collapsed) {
            continue;
        }
        if (!bsm_enumerate(*pa.collapsed, "b", kB2)[static_cast<size_t>(bo)].collapsed) {
            continue;
        }
        const CorrectionPair c = correction_lookup(ao, bo);
        out.push_back(evaluate_branch(joint, "a", "b", a, b, ao, bo, {apply_cz, c.alice, c.bob}));
    }
    return out;
}

std::vector<CorrectionPair> search_corrections(const QubitCoefficients &a, const QubitCoefficients &b,
                                               BellOutcome alice, BellOutcome bob, double tol) {
    const StateVector joint = default_joint(a, b, build_cluster_channel());
    std::vector<CorrectionPair> hits;
    for (auto ca : kCorrectionOps) {
        for (auto cb : kCorrectionOps) {
            const BranchRecord r = evaluate_branch(joint, "a", "b", a, b, alice, bob, {true, ca, cb});
            if (r.fid_alice >= 1 - tol && r.fid_bob >= 1 - tol) {
                hits.push_back({ca, cb});
            }
        }
    }
    return hits;
}

double worst_branch_fidelity(const std::vector<BranchRecord> &branches) {
    double worst = 1.0;
    for (const auto &r : branches) {
        worst = std::min({worst, r.fid_alice, r.fid_bob});
    }
    return worst;
}

}  // namespace bqt
