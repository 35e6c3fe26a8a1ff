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

// Reference computations used only by tests. They deliberately avoid the
// library's index helpers so that they can check them.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "bqt/state_vector.hpp"

namespace bqt::oracle {

using Matrix = std::vector<std::vector<Amplitude>>;

/// Partial trace by explicit summation over every pair of basis kets.
inline Matrix partial_trace(const StateVector &sv, const std::vector<QubitLabel> &keep) {
    const size_t n = sv.num_qubits();
    std::vector<size_t> keep_pos;
    for (const auto &k : keep) {
        for (size_t p = 0; p < n; ++p) {
            if (sv.labels()[p] == k) {
                keep_pos.push_back(p);
            }
        }
    }
    const size_t d = size_t{1} << keep.size();
    Matrix rho(d, std::vector<Amplitude>(d, 0.0));
    const std::string zero(n, '0');
    for (size_t i = 0; i < sv.dimension(); ++i) {
        for (size_t j = 0; j < sv.dimension(); ++j) {
            std::string bi = index_to_bits(i, n), bj = index_to_bits(j, n);
            bool traced_equal = true;
            for (size_t p = 0; p < n; ++p) {
                bool kept = false;
                for (size_t q : keep_pos) {
                    kept |= q == p;
                }
                if (!kept && bi[p] != bj[p]) {
                    traced_equal = false;
                }
            }
            if (!traced_equal) {
                continue;
            }
            size_t r = 0, c = 0;
            for (size_t q : keep_pos) {
                r = (r << 1) | static_cast<size_t>(bi[q] == '1');
                c = (c << 1) | static_cast<size_t>(bj[q] == '1');
            }
            rho[r][c] += sv.amplitude(i) * std::conj(sv.amplitude(j));
        }
    }
    return rho;
}

/// <v|rho|v> for a vector given in the matrix's basis.
inline double expectation(const Matrix &rho, const std::vector<Amplitude> &v) {
    Amplitude s = 0;
    for (size_t r = 0; r < v.size(); ++r) {
        for (size_t c = 0; c < v.size(); ++c) {
            s += std::conj(v[r]) * rho[r][c] * v[c];
        }
    }
    return s.real();
}

/// Probability of a Bell outcome on (qa, qb) from the two-qubit reduced state.
inline double bell_probability(const StateVector &sv, const QubitLabel &qa, const QubitLabel &qb,
                               const std::vector<Amplitude> &bell) {
    return expectation(partial_trace(sv, {qa, qb}), bell);
}

inline std::vector<Amplitude> bell(int which) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (which) {
        case 0:
            return {h, 0, 0, h};
        case 1:
            return {h, 0, 0, -h};
        case 2:
            return {0, h, h, 0};
        default:
            return {0, h, -h, 0};
    }
}

}  // namespace bqt::oracle
