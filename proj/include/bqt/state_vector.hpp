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
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bqt {

using Amplitude = std::complex<double>;
using QubitLabel = std::string;

/// Tolerance for normalization and unitarity invariants.
inline constexpr double kNormTolerance = 1e-10;

enum class ErrorKind {
    DuplicateLabel,
    UnknownLabel,
    SameQubit,
    LabelMismatch,
    BadSubset,
    ImpossibleOutcome,
    NotGHZForm,
    NotNormalized,
    NotUnitary,
    InvalidInput,
};

const char *to_string(ErrorKind kind);

class BqtError : public std::runtime_error {
   public:
    BqtError(ErrorKind kind, const std::string &what);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Dense pure state over an ordered list of labeled qubits.
///
/// Amplitude index i encodes a basis ket with labels()[0] as the most
/// significant bit, so |0011> over [A1,B1,A2,B2] is index 3. Values are
/// immutable; every gate returns a new state.
class StateVector {
   public:
    /// Validates sizes, label uniqueness and unit norm.
    StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amplitudes);

    /// Skips the normalization check (labels and size are still validated).
    static StateVector unnormalized(std::vector<QubitLabel> labels, std::vector<Amplitude> amplitudes);

    /// Computational basis ket, e.g. basis({"a","b"}, "01").
    static StateVector basis(std::vector<QubitLabel> labels, std::string_view bits);

    /// The zero-qubit register with amplitude 1.
    static StateVector scalar(Amplitude value = 1.0);

    /// Single-qubit c0|0> + c1|1>.
    static StateVector qubit(QubitLabel label, Amplitude c0, Amplitude c1);

    const std::vector<QubitLabel> &labels() const noexcept {
        return labels_;
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    size_t num_qubits() const noexcept {
        return labels_.size();
    }
    size_t dimension() const noexcept {
        return amplitudes_.size();
    }

    bool has_label(const QubitLabel &label) const;
    /// Position of `label` in labels(); throws UnknownLabel.
    size_t position(const QubitLabel &label) const;
    /// Bit shift of `label` inside an amplitude index.
    size_t shift(const QubitLabel &label) const {
        return num_qubits() - 1 - position(label);
    }

    Amplitude amplitude(size_t index) const {
        return amplitudes_.at(index);
    }
    /// Amplitude of a ket given as a bitstring in label order.
    Amplitude amplitude(std::string_view bits) const;

    double norm_squared() const;
    StateVector normalized() const;

    /// Same state with labels reordered to `order` (a permutation of labels()).
    StateVector permuted(const std::vector<QubitLabel> &order) const;

    /// Same amplitudes under new names, positionally.
    StateVector relabeled(std::vector<QubitLabel> labels) const;

    StateVector scaled(Amplitude factor) const;

   private:
    StateVector(std::vector<QubitLabel> labels, std::vector<Amplitude> amplitudes, bool check_norm);

    std::vector<QubitLabel> labels_;
    std::vector<Amplitude> amplitudes_;
};

/// Bitstring for `index` over `num_qubits` bits, MSB first.
std::string index_to_bits(size_t index, size_t num_qubits);

/// Single-qubit gate. Row-major 2x2 matrix.
struct Gate1Q {
    std::string name;
    std::array<Amplitude, 4> matrix;

    static Gate1Q identity();
    static Gate1Q pauli_x();
    static Gate1Q pauli_z();
    static Gate1Q hadamard();
    /// Throws NotUnitary if U^dagger U deviates from I by more than 1e-10.
    static Gate1Q custom(const std::array<Amplitude, 4> &matrix, std::string name = "custom");

    /// Matrix product (*this) * rhs, i.e. rhs acts first.
    Gate1Q operator*(const Gate1Q &rhs) const;
    bool is_unitary(double tol = kNormTolerance) const;
};

StateVector tensor(const StateVector &left, const StateVector &right);
StateVector apply_1q(const StateVector &sv, const QubitLabel &q, const Gate1Q &gate);
StateVector apply_cnot(const StateVector &sv, const QubitLabel &control, const QubitLabel &target);
StateVector apply_cz(const StateVector &sv, const QubitLabel &q1, const QubitLabel &q2);

/// <x|y> after aligning y's label order to x's. Throws LabelMismatch.
Amplitude inner_product(const StateVector &x, const StateVector &y);

/// |<x|y>|^2, global-phase blind.
double fidelity(const StateVector &x, const StateVector &y);

/// Splits `sv` into a state over `first` and one over the remaining labels
/// when it is a product across that cut (to within `tol` in amplitude).
/// The relative phase is kept exactly: tensor(result.first, result.second)
/// reproduces sv.
std::optional<std::pair<StateVector, StateVector>> split_product(const StateVector &sv,
                                                                 const std::vector<QubitLabel> &first,
                                                                 double tol = 1e-9);

/// Amplitude dump: "# labels: L1 L2 ..." followed by "BITS RE IM" per nonzero
/// amplitude, 17 significant digits.
void write_amplitude_dump(std::ostream &out, const StateVector &sv);
std::string amplitude_dump(const StateVector &sv);

/// Parses a dump. Missing kets are zero. The result is not normalized;
/// callers decide whether to reject or renormalize.
StateVector read_amplitude_dump(std::istream &in);

}  // namespace bqt
