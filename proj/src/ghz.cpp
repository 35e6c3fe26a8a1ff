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

#include "bqt/ghz.hpp"

#include <algorithm>
#include <cmath>

namespace bqt {

CompressedState ghz_compress(const StateVector &ghz) {
    const size_t k = ghz.num_qubits();
    if (k < 2) {
        throw BqtError(ErrorKind::InvalidInput, "compression needs at least two qubits");
    }
    if (std::abs(ghz.norm_squared() - 1.0) > kNormTolerance) {
        throw BqtError(ErrorKind::NotGHZForm, "input is not normalized");
    }
    for (size_t i = 1; i + 1 < ghz.dimension(); ++i) {
        if (std::abs(ghz.amplitude(i)) > kNormTolerance) {
            throw BqtError(ErrorKind::NotGHZForm, "weight on |" + index_to_bits(i, k) + ">");
        }
    }

    const auto &labels = ghz.labels();
    StateVector state = ghz;
    for (size_t t = 1; t < k; ++t) {
        state = apply_cnot(state, labels[0], labels[t]);
    }

    // After the CNOTs only |00..0> and |10..0> may carry weight.
    const size_t top = size_t{1} << (k - 1);
    for (size_t i = 0; i < state.dimension(); ++i) {
        if (i != 0 && i != top && std::abs(state.amplitude(i)) > kNormTolerance) {
            throw BqtError(ErrorKind::NotGHZForm, "compressed state does not factorize");
        }
    }
    std::vector<QubitLabel> rest(labels.begin() + 1, labels.end());
    std::vector<Amplitude> zeros(size_t{1} << rest.size(), 0.0);
    zeros[0] = 1.0;
    QubitCoefficients c{state.amplitude(0), state.amplitude(top)};
    return {InformationState::single(c, labels[0]), StateVector(std::move(rest), std::move(zeros))};
}

CompressedState ghz_compress(const InformationState &s) {
    return ghz_compress(s.to_state_vector());
}

Reincarnation reincarnate_in(const StateVector &joint, const QubitLabel &control, std::span<const QubitLabel> held,
                             size_t target_count, const std::string &aux_prefix) {
    if (target_count < 1) {
        throw BqtError(ErrorKind::InvalidInput, "target_count must be at least 1");
    }
    joint.position(control);
    Reincarnation out{joint, {control}, {}, 0};
    const size_t needed = target_count - 1;
    for (size_t i = 0; i < std::min(needed, held.size()); ++i) {
        joint.position(held[i]);
        out.ghz_labels.push_back(held[i]);
    }
    for (size_t i = 1; out.ghz_labels.size() < target_count; ++i) {
        QubitLabel aux = aux_prefix + std::to_string(i);
        out.state = tensor(out.state, StateVector::basis({aux}, "0"));
        out.auxiliary.push_back(aux);
        out.ghz_labels.push_back(aux);
    }
    for (size_t t = 1; t < out.ghz_labels.size(); ++t) {
        out.state = apply_cnot(out.state, control, out.ghz_labels[t]);
        ++out.cnots;
    }
    return out;
}

StateVector ghz_reincarnate(const StateVector &single, std::span<const QubitLabel> held, size_t target_count,
                            const std::string &aux_prefix) {
    if (single.num_qubits() != 1) {
        throw BqtError(ErrorKind::InvalidInput, "reincarnation starts from one qubit");
    }
    if (std::abs(single.norm_squared() - 1.0) > kNormTolerance) {
        throw BqtError(ErrorKind::NotNormalized, "received qubit is not normalized");
    }
    StateVector state = single;
    const size_t used = std::min(held.size(), target_count > 0 ? target_count - 1 : 0);
    for (size_t i = 0; i < used; ++i) {
        state = tensor(state, StateVector::basis({held[i]}, "0"));
    }
    return reincarnate_in(state, single.labels()[0], held.subspan(0, used), target_count, aux_prefix).state;
}

std::vector<QubitLabel> input_labels(Party owner, size_t count) {
    const bool alice = owner == Party::Alice;
    if (count == 1) {
        return {alice ? "a" : "b"};
    }
    std::vector<QubitLabel> out;
    for (size_t i = 1; i <= count; ++i) {
        out.push_back((alice ? "alpha_" : "beta_") + std::to_string(i));
    }
    return out;
}

}  // namespace bqt
