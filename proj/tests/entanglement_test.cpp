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

#include <cmath>

#include "bqt/channel.hpp"
#include "bqt/rng.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace bqt;

namespace {

StateVector bell_pair(const QubitLabel &x, const QubitLabel &y) {
    const double h = 1 / std::sqrt(2.0);
    return StateVector({x, y}, {h, 0, 0, h});
}

void expect_matches_oracle(const DensityMatrix &rho, const oracle::Matrix &want, double tol = 1e-12) {
    ASSERT_EQ(static_cast<size_t>(rho.rho.rows()), want.size());
    for (size_t r = 0; r < want.size(); ++r) {
        for (size_t c = 0; c < want.size(); ++c) {
            EXPECT_NEAR(std::abs(rho.rho(r, c) - want[r][c]), 0.0, tol) << r << "," << c;
        }
    }
}

}  // namespace

TEST(ReducedDensity, bell_pair_is_maximally_mixed) {
    auto rho = reduced_density(bell_pair("x", "y"), {"x"});
    EXPECT_NEAR(std::abs(rho.rho(0, 0) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho.rho(1, 1) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho.rho(0, 1)), 0, 1e-15);
}

TEST(ReducedDensity, product_state_gives_pure_projector) {
    const double h = 1 / std::sqrt(2.0);
    auto sv = tensor(StateVector::basis({"x"}, "0"), StateVector::qubit("y", h, h));
    auto rho = reduced_density(sv, {"x"});
    EXPECT_NEAR(std::abs(rho.rho(0, 0) - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho.rho(1, 1)), 0, 1e-15);
    EXPECT_NEAR(std::abs(rho.rho(0, 1)), 0, 1e-15);
}

TEST(ReducedDensity, cluster_channel_party_cut_matches_explicit_sum) {
    const auto ch = build_cluster_channel().state;
    const auto want = oracle::partial_trace(ch, {"A1", "A2"});
    // The explicit sum gives diag(1/4, 1/4, 1/4, 1/4).
    for (size_t r = 0; r < 4; ++r) {
        for (size_t c = 0; c < 4; ++c) {
            EXPECT_NEAR(std::abs(want[r][c] - (r == c ? 0.25 : 0.0)), 0, 1e-15);
        }
    }
    expect_matches_oracle(reduced_density(ch, {"A1", "A2"}), want);
}

TEST(ReducedDensity, agrees_with_oracle_on_random_states) {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto sv = random_state(rng, {"p", "q", "r", "s"});
        std::vector<QubitLabel> keep = trial % 2 ? std::vector<QubitLabel>{"s", "p"} : std::vector<QubitLabel>{"q"};
        expect_matches_oracle(reduced_density(sv, keep), oracle::partial_trace(sv, keep));
    }
}

TEST(ReducedDensity, bad_subsets) {
    auto sv = bell_pair("x", "y");
    for (const auto &keep : std::vector<std::vector<QubitLabel>>{{}, {"x", "y"}, {"z"}, {"x", "x"}}) {
        try {
            reduced_density(sv, keep);
            ADD_FAILURE() << "expected BadSubset";
        } catch (const BqtError &e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadSubset);
        }
    }
}

TEST(Entropy, product_is_zero) {
    Rng rng(1);
    auto sv = tensor(random_state(rng, {"x", "y"}), random_state(rng, {"z"}));
    EXPECT_NEAR(entanglement_entropy(sv, {"z"}), 0.0, 1e-9);
    EXPECT_EQ(schmidt_rank(sv, {"z"}), 1);
}

TEST(Entropy, bell_pair_is_one_bit) {
    EXPECT_NEAR(entanglement_entropy(bell_pair("x", "y"), {"x"}), 1.0, 1e-12);
    EXPECT_EQ(schmidt_rank(bell_pair("x", "y"), {"y"}), 2);
}

TEST(Entropy, cluster_channel_party_cut) {
    const auto ch = build_cluster_channel().state;
    EXPECT_NEAR(entanglement_entropy(ch, {"A1", "A2"}), 2.0, 1e-12);
    EXPECT_EQ(schmidt_rank(ch, {"A1", "A2"}), 4);
}

TEST(Entropy, intra_party_bell_pairs_have_rank_one) {
    auto sv = tensor(bell_pair("A1", "A2"), bell_pair("B1", "B2")).permuted({"A1", "B1", "A2", "B2"});
    EXPECT_EQ(schmidt_rank(sv, {"A1", "A2"}), 1);
    EXPECT_NEAR(entanglement_entropy(sv, {"A1", "A2"}), 0.0, 1e-12);
}

TEST(EntropyProperties, symmetric_across_complementary_cuts) {
    Rng rng(31);
    const std::vector<QubitLabel> labels{"q0", "q1", "q2", "q3", "q4"};
    for (int trial = 0; trial < 100; ++trial) {
        auto sv = random_state(rng, labels);
        std::vector<QubitLabel> cut;
        const int mask = 1 + trial % 30;
        for (size_t k = 0; k < labels.size(); ++k) {
            if (mask >> k & 1) {
                cut.push_back(labels[k]);
            }
        }
        EXPECT_NEAR(entanglement_entropy(sv, cut), entanglement_entropy(sv, complement(sv, cut)), 1e-9);
    }
}

TEST(EntropyProperties, eigenvalues_form_a_distribution) {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto sv = random_state(rng, {"a", "b", "c", "d"});
        auto lambda = reduced_density(sv, {"b", "d"}).eigenvalues();
        double sum = 0;
        for (double l : lambda) {
            EXPECT_GE(l, -1e-10);
            EXPECT_LE(l, 1 + 1e-10);
            sum += l;
        }
        EXPECT_NEAR(sum, 1.0, 1e-10);
    }
}
