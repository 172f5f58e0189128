// Copyright 2026 The mzx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzx/observables.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mzx/errors.hpp"
#include "mzx/scenario.hpp"
#include "oracle.hpp"

using namespace mzx;

namespace {

PathPolState product_out(double phi) { return PathPolState(oracle::product_output(phi), Side::output); }
PathPolState entangled_out(double phi) { return PathPolState(oracle::entangled_output(phi), Side::output); }

}  // namespace

TEST(ChannelStats, product_at_zero_phase) {
    for (double a : {0.0, 0.3, oracle::kPi / 4, 1.2}) {
        const PathPolState s = product_out(0.0);
        const ChannelStats t = channel_stats(s, Channel::t_prime, PolarizerAngle(a));
        const ChannelStats r = channel_stats(s, Channel::r_prime, PolarizerAngle(a));
        EXPECT_NEAR(t.sub_mean, std::cos(2 * a), kExactTol);
        EXPECT_NEAR(t.probability, 1.0, kExactTol);
        EXPECT_EQ(r.sub_mean, 0.0);
        EXPECT_EQ(r.probability, 0.0);
        EXPECT_FALSE(r.cond_mean.has_value()) << "empty channel must not report a conditional mean";
    }
}

TEST(ChannelStats, product_at_quarter_phase) {
    for (double a : {0.0, 0.3, 1.2}) {
        const PathPolState s = product_out(oracle::kPi / 2);
        const ChannelStats t = channel_stats(s, Channel::t_prime, PolarizerAngle(a));
        const ChannelStats r = channel_stats(s, Channel::r_prime, PolarizerAngle(a));
        EXPECT_NEAR(t.sub_mean, std::cos(2 * a) / 2, kExactTol);
        EXPECT_NEAR(r.sub_mean, std::cos(2 * a) / 2, kExactTol);
        ASSERT_TRUE(t.cond_mean.has_value());
        EXPECT_NEAR(*t.cond_mean, std::cos(2 * a), kExactTol);
    }
}

TEST(ChannelStats, product_general_phase) {
    oracle::Random rnd(21);
    for (int i = 0; i < 100; ++i) {
        const double phi = rnd.angle();
        const double a = rnd.angle();
        const PathPolState s = product_out(phi);
        EXPECT_NEAR(channel_stats(s, Channel::t_prime, PolarizerAngle(a)).sub_mean,
                    (1 + std::cos(phi)) * std::cos(2 * a) / 2, kExactTol);
        EXPECT_NEAR(channel_stats(s, Channel::r_prime, PolarizerAngle(a)).sub_mean,
                    (1 - std::cos(phi)) * std::cos(2 * a) / 2, kExactTol);
    }
}

TEST(ChannelStats, entangled_general_phase) {
    oracle::Random rnd(22);
    for (int i = 0; i < 100; ++i) {
        const double phi = rnd.angle();
        const double a = rnd.angle();
        const PathPolState s = entangled_out(phi);
        const double expected = std::sin(2 * a) * std::cos(phi) / 2;
        EXPECT_NEAR(channel_stats(s, Channel::t_prime, PolarizerAngle(a)).sub_mean, expected, kExactTol);
        EXPECT_NEAR(channel_stats(s, Channel::r_prime, PolarizerAngle(a)).sub_mean, -expected, kExactTol);
    }
}

TEST(ChannelStats, needs_output_side) {
    EXPECT_THROW(channel_stats(PathPolState(oracle::product_output(0.0), Side::input), Channel::t_prime,
                               PolarizerAngle(0.0)),
                 BasisSideError);
}

TEST(WholeEnsembleMean, closed_forms) {
    oracle::Random rnd(23);
    for (int i = 0; i < 100; ++i) {
        const double phi = rnd.angle();
        const double a = rnd.angle();
        EXPECT_NEAR(whole_ensemble_mean(product_out(phi), PolarizerAngle(a)), std::cos(2 * a), kExactTol);
        EXPECT_NEAR(whole_ensemble_mean(entangled_out(phi), PolarizerAngle(a)), 0.0, kExactTol);
    }
    EXPECT_NEAR(whole_ensemble_mean(product_out(0.7), PolarizerAngle(oracle::kPi / 4)), 0.0, kExactTol);
}

TEST(SumRule, holds_for_prepared_states) {
    oracle::Random rnd(24);
    for (int i = 0; i < 200; ++i) {
        const double phi = rnd.angle();
        const PolarizerAngle a(rnd.angle());
        EXPECT_LE(sum_rule_residual(product_out(phi), a), kExactTol);
        EXPECT_LE(sum_rule_residual(entangled_out(phi), a), kExactTol);
    }
}

// Property: projector completeness makes the sum rule hold for any state.
TEST(ObservablesProperty, sum_rule_for_random_states) {
    oracle::Random rnd(25);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_LE(sum_rule_residual(PathPolState(rnd.unit4(), Side::output), PolarizerAngle(rnd.angle())),
                  kExactTol);
    }
}

// Property: |sub_mean| <= probability <= 1, and |cond_mean| <= 1.
TEST(ObservablesProperty, subensemble_bounds) {
    oracle::Random rnd(26);
    for (int i = 0; i < 1000; ++i) {
        const PathPolState s(rnd.unit4(), Side::output);
        const PolarizerAngle a(rnd.angle());
        for (Channel ch : {Channel::t_prime, Channel::r_prime}) {
            const ChannelStats st = channel_stats(s, ch, a);
            EXPECT_GE(st.probability, 0.0);
            EXPECT_LE(st.probability, 1.0);
            EXPECT_LE(std::abs(st.sub_mean), st.probability + kExactTol);
            if (st.cond_mean) EXPECT_LE(std::abs(*st.cond_mean), 1.0 + kExactTol);
        }
    }
}

// Property: for the entangled preparation the channels are antisymmetric.
TEST(ObservablesProperty, entangled_antisymmetry) {
    oracle::Random rnd(27);
    for (int i = 0; i < 500; ++i) {
        const PathPolState s = emerge(Preparation::entangled, PhaseShift(rnd.angle()));
        const PolarizerAngle a(rnd.angle());
        EXPECT_LE(std::abs(channel_stats(s, Channel::t_prime, a).sub_mean +
                           channel_stats(s, Channel::r_prime, a).sub_mean),
                  kExactTol);
    }
}

TEST(ContextContrast, product_quarter_turn) {
    const ContextContrast c = context_contrast(Preparation::product, Channel::t_prime, PolarizerAngle(0.0),
                                               PhaseShift(0.0), PhaseShift(oracle::kPi / 2));
    EXPECT_NEAR(c.delta_sub_mean, 0.5, kExactTol);
    EXPECT_EQ(c.channel, Channel::t_prime);
    oracle::Random rnd(28);
    for (int i = 0; i < 100; ++i) {
        const double a = rnd.angle();
        EXPECT_NEAR(context_contrast(Preparation::product, Channel::t_prime, PolarizerAngle(a), PhaseShift(0.0),
                                     PhaseShift(oracle::kPi / 2))
                        .delta_sub_mean,
                    std::cos(2 * a) / 2, kExactTol);
    }
}

TEST(ContextContrast, entangled_quarter_turn) {
    oracle::Random rnd(29);
    for (int i = 0; i < 100; ++i) {
        const double a = rnd.angle();
        EXPECT_NEAR(context_contrast(Preparation::entangled, Channel::t_prime, PolarizerAngle(a), PhaseShift(0.0),
                                     PhaseShift(oracle::kPi / 2))
                        .delta_sub_mean,
                    std::sin(2 * a) / 2, kExactTol);
    }
    EXPECT_NEAR(context_contrast(Preparation::entangled, Channel::t_prime, PolarizerAngle(oracle::kPi / 4),
                                 PhaseShift(0.0), PhaseShift(oracle::kPi / 2))
                    .delta_sub_mean,
                0.5, kExactTol);
}

TEST(ContextContrast, equal_phases_give_zero) {
    for (Preparation kind : {Preparation::product, Preparation::entangled}) {
        for (Channel ch : {Channel::t_prime, Channel::r_prime}) {
            EXPECT_EQ(context_contrast(kind, ch, PolarizerAngle(0.4), PhaseShift(1.1), PhaseShift(1.1)).delta_sub_mean,
                      0.0);
        }
    }
}

TEST(ContextContrast, vanishes_only_at_diagonal_polarizer) {
    EXPECT_LE(std::abs(context_contrast(Preparation::product, Channel::t_prime, PolarizerAngle(oracle::kPi / 4),
                                        PhaseShift(0.0), PhaseShift(oracle::kPi / 2))
                           .delta_sub_mean),
              kExactTol);
    EXPECT_GT(std::abs(context_contrast(Preparation::product, Channel::r_prime, PolarizerAngle(0.2),
                                        PhaseShift(0.0), PhaseShift(oracle::kPi / 2))
                           .delta_sub_mean),
              0.1);
}

TEST(WholeEnsembleInvariance, constant_over_phase) {
    oracle::Random rnd(30);
    std::vector<PhaseShift> phis{PhaseShift(0.0), PhaseShift(oracle::kPi / 2), PhaseShift(oracle::kPi)};
    for (int i = 0; i < 20; ++i) phis.emplace_back(rnd.angle());
    for (int i = 0; i < 20; ++i) {
        const PolarizerAngle a(rnd.angle());
        EXPECT_LE(whole_ensemble_invariance_check(Preparation::product, a, phis), kExactTol);
        EXPECT_LE(whole_ensemble_invariance_check(Preparation::entangled, a, phis), kExactTol);
    }
    const std::vector<PhaseShift> one{PhaseShift(0.3)};
    EXPECT_EQ(whole_ensemble_invariance_check(Preparation::product, PolarizerAngle(0.1), one), 0.0);
    EXPECT_THROW(whole_ensemble_invariance_check(Preparation::product, PolarizerAngle(0.1), {}), ArgumentError);
}
