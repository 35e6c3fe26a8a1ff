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

#include "bqt/bell.hpp"

#include <cmath>

#include "bqt/engine.hpp"
#include "bqt/entanglement.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace bqt;

namespace {

StateVector psi_plus(const QubitLabel &x, const QubitLabel &y) {
    const double h = 1 / std::sqrt(2.0);
    return StateVector({x, y}, {h, 0, 0, h});
}

StateVector random_joint(Rng &rng) {
    return compose_joint(InformationState::single(random_coefficients(rng), "a"),
                         InformationState::single(random_coefficients(rng), "b"), build_cluster_channel());
}

}  // namespace

TEST(BellOutcome, names_and_codes) {
    EXPECT_EQ(to_string(BellOutcome::PsiPlus), "psi+");
    EXPECT_EQ(to_string(BellOutcome::PhiMinus), "phi-");
    EXPECT_EQ(to_bits(BellOutcome::PsiMinus), "01");
    EXPECT_EQ(to_bits(BellOutcome::PhiPlus), "10");
    for (auto o : kBellOutcomes) {
        EXPECT_EQ(bell_from_string(to_string(o)), o);
        EXPECT_EQ(bell_from_bits(to_bits(o)), o);
    }
    EXPECT_THROW(bell_from_bits("2"), BqtError);
}

TEST(BellOutcome, basis_uses_swapped_naming) {
    const double h = 1 / std::sqrt(2.0);
    EXPECT_EQ(bell_vector(BellOutcome::PsiPlus), (std::array<double, 4>{h, 0, 0, h}));
    EXPECT_EQ(bell_vector(BellOutcome::PsiMinus), (std::array<double, 4>{h, 0, 0, -h}));
    EXPECT_EQ(bell_vector(BellOutcome::PhiPlus), (std::array<double, 4>{0, h, h, 0}));
    EXPECT_EQ(bell_vector(BellOutcome::PhiMinus), (std::array<double, 4>{0, h, -h, 0}));
}

TEST(BellProject, full_pair_collapses_to_scalar) {
    auto p = bell_project(psi_plus("q1", "q2"), "q1", "q2", BellOutcome::PsiPlus);
    EXPECT_NEAR(p.prob, 1.0, 1e-15);
    ASSERT_TRUE(p.collapsed.has_value());
    EXPECT_EQ(p.collapsed->num_qubits(), 0u);
    EXPECT_NEAR(std::abs(p.collapsed->amplitude(0) - 1.0), 0.0, 1e-15);
}

TEST(BellProject, orthogonal_outcome_is_impossible) {
    auto sv = StateVector::basis({"x", "y"}, "01");
    auto all = bsm_enumerate(sv, "x", "y");
    EXPECT_NEAR(all[0].prob, 0.0, 1e-15);
    EXPECT_FALSE(all[0].collapsed.has_value());
    try {
        bell_project(sv, "x", "y", BellOutcome::PsiPlus);
        FAIL() << "expected ImpossibleOutcome";
    } catch (const BqtError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ImpossibleOutcome);
    }
}

TEST(BellProject, argument_errors) {
    auto sv = psi_plus("x", "y");
    EXPECT_THROW(bell_project(sv, "x", "x", BellOutcome::PsiPlus), BqtError);
    try {
        bell_project(sv, "x", "zz", BellOutcome::PsiPlus);
    } catch (const BqtError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownLabel);
    }
}

TEST(BellProject, pair_order_matters_for_phi_minus) {
    Rng rng(2);
    auto sv = random_state(rng, {"x", "y", "z"});
    auto xy = bell_project(sv, "x", "y", BellOutcome::PhiMinus);
    auto yx = bell_project(sv, "y", "x", BellOutcome::PhiMinus);
    EXPECT_NEAR(xy.prob, yx.prob, 1e-14);
    // Swapping the slots flips the sign of phi-.
    EXPECT_NEAR(std::abs(xy.collapsed->amplitude(0) + yx.collapsed->amplitude(0)), 0.0, 1e-12);
}

TEST(BsmEnumerate, psi_plus_pair) {
    auto all = bsm_enumerate(psi_plus("x", "y"), "x", "y");
    ASSERT_EQ(all.size(), 4u);
    EXPECT_NEAR(all[0].prob, 1.0, 1e-15);
    for (size_t k = 1; k < 4; ++k) {
        EXPECT_NEAR(all[k].prob, 0.0, 1e-15);
        EXPECT_FALSE(all[k].collapsed.has_value());
    }
}

TEST(BsmEnumerate, joint_state_has_uniform_outcomes) {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        auto joint = random_joint(rng);
        auto first = bsm_enumerate(joint, "a", "A1");
        for (int o = 0; o < 4; ++o) {
            // Oracle: <Bell| rho_{a A1} |Bell> by explicit partial trace.
            const double oracle_prob = oracle::bell_probability(joint, "a", "A1", oracle::bell(o));
            EXPECT_NEAR(oracle_prob, 0.25, 1e-12);
            EXPECT_NEAR(first[o].prob, oracle_prob, 1e-12);
            auto second = bsm_enumerate(*first[o].collapsed, "b", "B2");
            for (int p = 0; p < 4; ++p) {
                EXPECT_NEAR(first[o].prob * second[p].prob, 1.0 / 16, 1e-12);
                EXPECT_NEAR(second[p].prob, oracle::bell_probability(*first[o].collapsed, "b", "B2", oracle::bell(p)),
                            1e-12);
            }
        }
    }
}

TEST(BsmSample, deterministic_distribution_and_seed) {
    for (uint64_t seed : {0ull, 1ull, 12345ull}) {
        EXPECT_EQ(bsm_sample(psi_plus("x", "y"), "x", "y", seed).outcome, BellOutcome::PsiPlus);
    }
    Rng rng(4);
    auto joint = random_joint(rng);
    auto s1 = bsm_sample(joint, "a", "A1", uint64_t{99});
    auto s2 = bsm_sample(joint, "a", "A1", uint64_t{99});
    EXPECT_EQ(s1.outcome, s2.outcome);
    for (size_t i = 0; i < s1.collapsed->dimension(); ++i) {
        EXPECT_EQ(s1.collapsed->amplitude(i), s2.collapsed->amplitude(i));
    }
}

TEST(BsmSample, frequencies_match_distribution) {
    Rng state_rng(5);
    auto joint = random_joint(state_rng);
    Rng rng(2026);
    std::array<int, 16> counts{};
    const int samples = 100000;
    for (int s = 0; s < samples; ++s) {
        auto first = bsm_sample(joint, "a", "A1", rng);
        auto second = bsm_sample(*first.collapsed, "b", "B2", rng);
        ++counts[branch_index(first.outcome, second.outcome) - 1];
    }
    const double p = 1.0 / 16;
    const double sigma = std::sqrt(samples * p * (1 - p));
    for (int c : counts) {
        EXPECT_LT(std::abs(c - samples * p), 3 * sigma);
    }
}

// Properties

TEST(BellProperties, completeness_and_unit_collapse) {
    Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        auto sv = random_state(rng, {"p", "q", "r", "s"});
        auto all = bsm_enumerate(sv, trial % 2 ? "p" : "s", "q");
        double total = 0;
        for (const auto &o : all) {
            total += o.prob;
            ASSERT_TRUE(o.collapsed.has_value());
            EXPECT_NEAR(o.collapsed->norm_squared(), 1.0, 1e-10);
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(BellProperties, mixture_reconstructs_reduced_state) {
    Rng rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        auto sv = random_state(rng, {"p", "q", "r", "s"});
        auto all = bsm_enumerate(sv, "q", "s");
        const auto want = reduced_density(sv, {"p", "r"});
        Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(4, 4);
        for (const auto &o : all) {
            Eigen::VectorXcd v(4);
            for (int i = 0; i < 4; ++i) {
                v(i) = o.collapsed->amplitude(i);
            }
            mix += o.prob * v * v.adjoint();
        }
        EXPECT_LT((mix - want.rho).cwiseAbs().maxCoeff(), 1e-9);
    }
}
