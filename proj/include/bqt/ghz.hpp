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

#include <span>
#include <string>
#include <vector>

#include "bqt/engine.hpp"
#include "bqt/state_vector.hpp"

namespace bqt {

struct CompressedState {
    InformationState single;  ///< on the first qubit of the input
    StateVector residual;     ///< |0...0> over the remaining qubits
};

/// Disentangles a0|0..0> + a1|1..1> into a single qubit with CNOTs from the
/// first qubit onto each of the others. Throws NotGHZForm if the input
/// register (given as a raw state) is not of that form, or InvalidInput for
/// fewer than two qubits.
CompressedState ghz_compress(const StateVector &ghz);
CompressedState ghz_compress(const InformationState &s);

struct Reincarnation {
    StateVector state;
    /// Qubits now holding the GHZ-class state, control first.
    std::vector<QubitLabel> ghz_labels;
    std::vector<QubitLabel> auxiliary;
    size_t cnots = 0;
};

/// Rebuilds a target_count-qubit GHZ-class state from the qubit `control`
/// inside `joint`. Qubits from `held` (which must already be in `joint` and
/// in |0>) are used as targets first; fresh |0> auxiliaries named
/// aux_prefix + "1", "2", ... make up any shortfall. Applies
/// target_count - 1 CNOTs.
Reincarnation reincarnate_in(const StateVector &joint, const QubitLabel &control, std::span<const QubitLabel> held,
                             size_t target_count, const std::string &aux_prefix);

/// Standalone form: `single` is one qubit, `held` are residual labels that
/// are available in |0> (they are added to the register as needed).
StateVector ghz_reincarnate(const StateVector &single, std::span<const QubitLabel> held, size_t target_count,
                            const std::string &aux_prefix = "X");

/// "a" / "b" for one qubit, otherwise alpha_1..alpha_k / beta_1..beta_k.
std::vector<QubitLabel> input_labels(Party owner, size_t count);

}  // namespace bqt
