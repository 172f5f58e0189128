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

#include <algorithm>
#include <cmath>
#include <string>

#include "mzx/errors.hpp"
#include "mzx/scenario.hpp"

namespace mzx {

namespace {

void require_output(const PathPolState &s) {
    if (s.side() != Side::output) {
        throw BasisSideError("subensemble statistics need an output-side state");
    }
}

}  // namespace

ChannelStats channel_stats(const PathPolState &s, Channel channel, PolarizerAngle alpha) {
    require_output(s);
    const ElementOp projector = channel_projector(channel);
    // The projector and delta commute, so the product is Hermitian.
    const ElementOp joint = ElementOp(projector.matrix() * pol_observable(alpha).matrix(),
                                      OpKind::hermitian, "Pi*delta", SideAction::output_only);
    ChannelStats out;
    out.channel = channel;
    out.probability = std::clamp(expectation(projector, s), 0.0, 1.0);
    if (out.probability < kEmptyChannelTol) {
        out.sub_mean = 0.0;
        return out;
    }
    out.sub_mean = expectation(joint, s);
    out.cond_mean = out.sub_mean / out.probability;
    return out;
}

double whole_ensemble_mean(const PathPolState &s, PolarizerAngle alpha) {
    return expectation(pol_observable(alpha), s);
}

double sum_rule_residual(const PathPolState &s, PolarizerAngle alpha) {
    const double whole = whole_ensemble_mean(s, alpha);
    const double parts = channel_stats(s, Channel::t_prime, alpha).sub_mean +
                         channel_stats(s, Channel::r_prime, alpha).sub_mean;
    const double residual = std::abs(whole - parts);
    if (residual > kExactTol) {
        throw ConsistencyError("sum rule violated: whole " + std::to_string(whole) + " vs parts " +
                               std::to_string(parts));
    }
    return residual;
}

ContextContrast context_contrast(Preparation kind, Channel channel, PolarizerAngle alpha,
                                 PhaseShift phi_a, PhaseShift phi_b) {
    const double a = channel_stats(emerge(kind, phi_a), channel, alpha).sub_mean;
    const double b = channel_stats(emerge(kind, phi_b), channel, alpha).sub_mean;
    return ContextContrast{channel, phi_a, phi_b, a - b};
}

double whole_ensemble_invariance_check(Preparation kind, PolarizerAngle alpha,
                                       std::span<const PhaseShift> phis) {
    if (phis.empty()) {
        throw ArgumentError("invariance check needs at least one phase");
    }
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (const PhaseShift &phi : phis) {
        const double m = whole_ensemble_mean(emerge(kind, phi), alpha);
        lo = first ? m : std::min(lo, m);
        hi = first ? m : std::max(hi, m);
        first = false;
    }
    return hi - lo;
}

}  // namespace mzx
