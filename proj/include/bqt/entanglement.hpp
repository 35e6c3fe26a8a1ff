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

#include <Eigen/Dense>
#include <vector>

#include "bqt/state_vector.hpp"

namespace bqt {

/// Reduced state of a subset of qubits. Row/column index follows `labels`
/// with the same MSB-first convention as StateVector.
struct DensityMatrix {
    std::vector<QubitLabel> labels;
    Eigen::MatrixXcd rho;

    Amplitude trace() const {
        return rho.trace();
    }
    /// Ascending eigenvalues of the Hermitian matrix.
    Eigen::VectorXd eigenvalues() const;
    /// <psi|rho|psi>, with psi's labels aligned to `labels`.
    double expectation(const StateVector &psi) const;
};

/// Partial trace over everything not in `keep`. `keep` must be a nonempty
/// proper subset of sv's labels without repeats; otherwise BadSubset.
/// Result labels follow the order in `keep`.
DensityMatrix reduced_density(const StateVector &sv, const std::vector<QubitLabel> &keep);

/// Von Neumann entropy in bits of the reduced state on `cut`. Eigenvalues
/// below 1e-12 are skipped.
double entanglement_entropy(const StateVector &sv, const std::vector<QubitLabel> &cut);

/// Number of reduced-density eigenvalues above `tol`.
int schmidt_rank(const StateVector &sv, const std::vector<QubitLabel> &cut, double tol = 1e-10);

/// Labels of sv not in `cut`, in register order.
std::vector<QubitLabel> complement(const StateVector &sv, const std::vector<QubitLabel> &cut);

}  // namespace bqt
