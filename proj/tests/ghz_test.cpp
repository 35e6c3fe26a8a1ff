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

#include <cmath>

#include "gtest/gtest.h"

using namespace bqt;

namespace {

const QubitCoefficients kA{{0.6, 0.0}, {0.0, 0.8}};

}  // namespace

TEST(GhzCompress, three_qubits) {
    auto out = ghz_compress(InformationState(kA, {"alpha_1", "alpha_2", "alpha_3"}));
    EXPECT_EQ(out.single.labels(), (std::vector<QubitLabel>{"alpha_1"}));
    EXPECT_EQ(out.single.coefficients().zero, kA.zero);
    EXPECT_EQ(out.single.coefficients().one, kA.one);
    EXPECT_EQ(out.residual.labels(), (std::vector<QubitLabel>{"alpha_2", "alpha_3"}));
    EXPECT_EQ(out.residual.amplitude("00"), Amplitude(1.0));
}

TEST(GhzCompress, two_qubit_basis) {
    auto out = ghz_compress(InformationState({1.0, 0.0}, {"x", "y"}));
    EXPECT_EQ(out.single.coefficients().zero, Amplitude(1.0));
    EXPECT_EQ(out.residual.amplitude("0"), Amplitude(1.0));
}

TEST(GhzCompress, rejects_non_ghz) {
    const double h = 1 / std::sqrt(2.0);
    try {
        ghz_compress(StateVector({"x", "y"}, {h, h, 0, 0}));
        FAIL();
    } catch (const BqtError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotGHZForm);
    }
    EXPECT_THROW(ghz_compress(StateVector::basis({"x"}, "0")), BqtError);
}

TEST(GhzReincarnate, from_single_qubit) {
    const Amplitude b0(0.28, 0.0), b1(0.0, 0.96);
    auto out = ghz_reincarnate(StateVector::qubit("A2", b0, b1), {}, 3, "Y");
    EXPECT_EQ(out.labels(), (std::vector<QubitLabel>{"A2", "Y1", "Y2"}));
    EXPECT_EQ(out.amplitude("000"), b0);
    EXPECT_EQ(out.amplitude("111"), b1);
    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
}

TEST(GhzReincarnate, target_one_is_identity) {
    auto single = StateVector::qubit("B1", kA.zero, kA.one);
    auto out = ghz_reincarnate(single, {}, 1);
    EXPECT_EQ(out.labels(), single.labels());
    EXPECT_EQ(out.amplitude(0), kA.zero);
    EXPECT_EQ(out.amplitude(1), kA.one);
}

TEST(GhzReincarnate, uses_held_before_auxiliaries) {
    const std::vector<QubitLabel> held{"beta_2"};
    auto out = ghz_reincarnate(StateVector::qubit("B1", kA.zero, kA.one), held, 3);
    EXPECT_EQ(out.labels(), (std::vector<QubitLabel>{"B1", "beta_2", "X1"}));
    const std::vector<QubitLabel> many{"beta_2", "beta_3", "beta_4"};
    auto fewer = ghz_reincarnate(StateVector::qubit("B1", kA.zero, kA.one), many, 2);
    EXPECT_EQ(fewer.labels(), (std::vector<QubitLabel>{"B1", "beta_2"}));
}

TEST(GhzProperties, round_trip_is_identity) {
    Rng rng(12);
    for (size_t k = 2; k <= 5; ++k) {
        for (int t = 0; t < 20; ++t) {
            const auto c = random_coefficients(rng);
            InformationState s(c, input_labels(Party::Alice, k));
            auto compressed = ghz_compress(s);
            auto held = compressed.residual.labels();
            auto back = ghz_reincarnate(compressed.single.to_state_vector(), held, k);
            auto want = s.to_state_vector();
            ASSERT_EQ(back.labels(), want.labels());
            for (size_t i = 0; i < want.dimension(); ++i) {
                EXPECT_NEAR(std::abs(back.amplitude(i) - want.amplitude(i)), 0.0, 1e-12);
            }
        }
    }
}

TEST(InputLabels, naming) {
    EXPECT_EQ(input_labels(Party::Alice, 1), (std::vector<QubitLabel>{"a"}));
    EXPECT_EQ(input_labels(Party::Bob, 1), (std::vector<QubitLabel>{"b"}));
    EXPECT_EQ(input_labels(Party::Bob, 2), (std::vector<QubitLabel>{"beta_1", "beta_2"}));
}
