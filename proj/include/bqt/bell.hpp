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
#include <string>
#include <string_view>
#include <vector>

#include "bqt/rng.hpp"
#include "bqt/state_vector.hpp"

namespace bqt {

/// Bell-basis outcome, named in the protocol's convention:
///   psi+- = (|00> +- |11>)/sqrt2,  phi+- = (|01> +- |10>)/sqrt2.
/// This swaps the psi/phi names used by most textbooks.
enum class BellOutcome : uint8_t { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3 };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {BellOutcome::PsiPlus, BellOutcome::PsiMinus,
                                                             BellOutcome::PhiPlus, BellOutcome::PhiMinus};

/// "psi+", "psi-", "phi+", "phi-".
std::string_view to_string(BellOutcome o);
/// Two-bit message code "00", "01", "10", "11".
std::string_view to_bits(BellOutcome o);
/// Greek rendering for tables.
std::string_view to_symbol(BellOutcome o);
BellOutcome bell_from_string(std::string_view s);
BellOutcome bell_from_bits(std::string_view bits);

/// Amplitudes over |00>,|01>,|10>,|11> of the pair, first slot = MSB.
std::array<double, 4> bell_vector(BellOutcome o);

/// Outcome probabilities below this are treated as analytic zeros.
inline constexpr double kImpossibleThreshold = 1e-14;

struct BellProjection {
    BellOutcome outcome;
    double prob;
    /// Post-measurement state with the two measured qubits removed;
    /// empty when prob < kImpossibleThreshold.
    std::optional<StateVector> collapsed;
};

/// Projects (qa, qb) onto outcome `o`; qa is the first ket slot. Throws
/// ImpossibleOutcome if the outcome has probability below the threshold.
BellProjection bell_project(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb, BellOutcome o);

/// All four outcomes in psi+, psi-, phi+, phi- order.
std::vector<BellProjection> bsm_enumerate(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb);

/// Draws an outcome from the Bell distribution using the caller's generator.
BellProjection bsm_sample(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb, Rng &rng);
BellProjection bsm_sample(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb, uint64_t seed);

}  // namespace bqt
