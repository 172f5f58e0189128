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

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "mzx/elements.hpp"
#include "mzx/qcore.hpp"

namespace mzx {

enum class Preparation : std::uint8_t;

/// Channels with probability below this are treated as empty subensembles.
inline constexpr double kEmptyChannelTol = 1e-15;

/// Polarization statistics of one exit-channel subensemble.
///
/// `sub_mean` is the unnormalized mean <Pi_ch (I (x) delta)>, so the two
/// channels add up to the whole-ensemble mean. `cond_mean` is the mean
/// conditioned on exiting through the channel and is empty when the channel
/// carries no photons.
struct ChannelStats {
    Channel channel = Channel::t_prime;
    double probability = 0.0;
    double sub_mean = 0.0;
    std::optional<double> cond_mean;
};

struct ContextContrast {
    Channel channel = Channel::t_prime;
    PhaseShift phi_a{0.0};
    PhaseShift phi_b{0.0};
    /// sub_mean(phi_a) - sub_mean(phi_b)
    double delta_sub_mean = 0.0;
};

/// Requires an output-side state.
ChannelStats channel_stats(const PathPolState &s, Channel channel, PolarizerAngle alpha);

/// <s| I (x) delta(alpha) |s>.
double whole_ensemble_mean(const PathPolState &s, PolarizerAngle alpha);

/// |whole mean - (sub_mean_t' + sub_mean_r')|. Throws ConsistencyError above kExactTol.
double sum_rule_residual(const PathPolState &s, PolarizerAngle alpha);

/// Re-runs the full preparation and interferometer at both phases.
ContextContrast context_contrast(Preparation kind, Channel channel, PolarizerAngle alpha,
                                 PhaseShift phi_a, PhaseShift phi_b);

/// Largest pairwise spread of the whole-ensemble mean across `phis`.
/// Throws ArgumentError for an empty list.
double whole_ensemble_invariance_check(Preparation kind, PolarizerAngle alpha,
                                       std::span<const PhaseShift> phis);

}  // namespace mzx
