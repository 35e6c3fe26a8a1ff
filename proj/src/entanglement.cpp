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

#include "bqt/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "bipartition.hpp"

namespace bqt {

namespace detail {

Bipartition::Bipartition(const StateVector &sv, const std::vector<QubitLabel> &first) {
    std::set<QubitLabel> chosen;
    for (const auto &l : first) {
        if (!chosen.insert(l).second) {
            throw BqtError(ErrorKind::BadSubset, "label '" + l + "' repeated in subset");
        }
        if (!sv.has_label(l)) {
            throw BqtError(ErrorKind::BadSubset, "label '" + l + "' not in state");
        }
        first_shifts_.push_back(sv.shift(l));
    }
    for (const auto &l : sv.labels()) {
        if (!chosen.count(l)) {
            rest_labels_.push_back(l);
            rest_shifts_.push_back(sv.shift(l));
        }
    }
}

size_t Bipartition::full_index(size_t row, size_t col) const {
    size_t index = 0;
    const size_t nf = first_shifts_.size();
    for (size_t k = 0; k < nf; ++k) {
        if ((row >> (nf - 1 - k)) & 1) {
            index |= size_t{1} << first_shifts_[k];
        }
    }
    const size_t nr = rest_shifts_.size();
    for (size_t k = 0; k < nr; ++k) {
        if ((col >> (nr - 1 - k)) & 1) {
            index |= size_t{1} << rest_shifts_[k];
        }
    }
    return index;
}

}  // namespace detail

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double DensityMatrix::expectation(const StateVector &psi) const {
    const StateVector aligned = psi.labels() == labels ? psi : psi.permuted(labels);
    Eigen::VectorXcd v(aligned.dimension());
    for (size_t i = 0; i < aligned.dimension(); ++i) {
        v(static_cast<Eigen::Index>(i)) = aligned.amplitude(i);
    }
    return (v.adjoint() * rho * v)(0, 0).real();
}

DensityMatrix reduced_density(const StateVector &sv, const std::vector<QubitLabel> &keep) {
    if (keep.empty() || keep.size() >= sv.num_qubits()) {
        throw BqtError(ErrorKind::BadSubset, "subset must be nonempty and proper");
    }
    detail::Bipartition part(sv, keep);
    const auto rows = static_cast<Eigen::Index>(part.rows());
    const auto cols = static_cast<Eigen::Index>(part.cols());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = sv.amplitude(part.full_index(static_cast<size_t>(r), static_cast<size_t>(c)));
        }
    }
    return {keep, m * m.adjoint()};
}

double entanglement_entropy(const StateVector &sv, const std::vector<QubitLabel> &cut) {
    const Eigen::VectorXd lambda = reduced_density(sv, cut).eigenvalues();
    double s = 0;
    for (double l : lambda) {
        if (l > 1e-12) {
            s -= l * std::log2(l);
        }
    }
    return s;
}

int schmidt_rank(const StateVector &sv, const std::vector<QubitLabel> &cut, double tol) {
    const Eigen::VectorXd lambda = reduced_density(sv, cut).eigenvalues();
    return static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [tol](double l) { return l > tol; }));
}

std::vector<QubitLabel> complement(const StateVector &sv, const std::vector<QubitLabel> &cut) {
    std::vector<QubitLabel> out;
    for (const auto &l : sv.labels()) {
        if (std::find(cut.begin(), cut.end(), l) == cut.end()) {
            out.push_back(l);
        }
    }
    return out;
}

}  // namespace bqt
