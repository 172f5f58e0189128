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
#include <string_view>
#include <vector>

#include "mzx/elements.hpp"
#include "mzx/observables.hpp"
#include "mzx/qcore.hpp"

namespace mzx {

enum class Preparation : std::uint8_t { product, entangled };

std::string_view to_string(Preparation kind);

/// Parses "product" or "entangled".
std::optional<Preparation> parse_preparation(std::string_view text);

/// A horizontally polarized photon entering BS1's incident port.
PathPolState incident_photon();

/// Elements that turn the incident photon into the prepared state:
/// BS1 for `product`, then HWP(t) for `entangled`.
std::vector<ElementOp> preparation_stages(Preparation kind);

/// Elements between preparation and detection: mirror, PS(phi), BS2.
std::vector<ElementOp> interferometer_stages(PhaseShift phi);

/// Input-side prepared state.
///   product:   (|t> + i|r>)|H> / sqrt(2)
///   entangled: (|t>|V> + i|r>|H>) / sqrt(2)
PathPolState prepare(Preparation kind);

/// Output-side state leaving BS2, obtained by staged application.
PathPolState emerge(Preparation kind, PhaseShift phi);

/// Per-channel statistics and the whole-ensemble mean for one setting.
struct SubensembleTable {
    ChannelStats t_prime;
    ChannelStats r_prime;
    double whole_mean = 0.0;
};

SubensembleTable subensemble_table(Preparation kind, PhaseShift phi, PolarizerAngle alpha);

}  // namespace mzx
