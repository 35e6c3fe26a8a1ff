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
#include <random>
#include <utility>

#include "bqt/state_vector.hpp"

namespace bqt {

/// Seeded generator with a platform-independent output sequence.
///
/// The engine is std::mt19937_64, whose output is fixed by the standard.
/// Doubles are built from the top 53 bits and normals use Box-Muller written
/// out here, since the std distributions differ between library vendors.
class Rng {
   public:
    explicit Rng(uint64_t seed);
    /// Independent stream for (seed, stream) via std::seed_seq.
    static Rng derived(uint64_t seed, uint64_t stream);

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform in [0, 1).
    double uniform();
    double normal();

   private:
    std::mt19937_64 engine_;
};

/// Normalized coefficient pair (c0, c1) of a qubit state c0|0> + c1|1>.
struct QubitCoefficients {
    Amplitude zero{1.0};
    Amplitude one{0.0};

    double norm_squared() const {
        return std::norm(zero) + std::norm(one);
    }
};

/// Haar-distributed qubit coefficients, redrawn while either magnitude is
/// below `min_magnitude` so the result is not near a basis state.
QubitCoefficients random_coefficients(Rng &rng, double min_magnitude = 1e-6);

/// Haar-like random pure state over `labels` (normalized complex Gaussian).
StateVector random_state(Rng &rng, std::vector<QubitLabel> labels);

}  // namespace bqt
