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

#include "bqt/rng.hpp"

#include <cmath>
#include <numbers>

namespace bqt {

Rng::Rng(uint64_t seed) : engine_(seed) {
}

Rng Rng::derived(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(stream),
                      static_cast<uint32_t>(stream >> 32)};
    Rng rng(0);
    rng.engine_.seed(seq);
    return rng;
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

QubitCoefficients random_coefficients(Rng &rng, double min_magnitude) {
    while (true) {
        Amplitude c0(rng.normal(), rng.normal());
        Amplitude c1(rng.normal(), rng.normal());
        const double n = std::sqrt(std::norm(c0) + std::norm(c1));
        if (n == 0) {
            continue;
        }
        c0 /= n;
        c1 /= n;
        if (std::abs(c0) < min_magnitude || std::abs(c1) < min_magnitude) {
            continue;
        }
        return {c0, c1};
    }
}

StateVector random_state(Rng &rng, std::vector<QubitLabel> labels) {
    std::vector<Amplitude> amps(size_t{1} << labels.size());
    for (auto &a : amps) {
        a = Amplitude(rng.normal(), rng.normal());
    }
    return StateVector::unnormalized(std::move(labels), std::move(amps)).normalized();
}

}  // namespace bqt
