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

#include "mzx/scenario.hpp"

namespace mzx {

std::string_view to_string(Preparation kind) {
    return kind == Preparation::product ? "product" : "entangled";
}

std::optional<Preparation> parse_preparation(std::string_view text) {
    if (text == "product") return Preparation::product;
    if (text == "entangled") return Preparation::entangled;
    return std::nullopt;
}

PathPolState incident_photon() { return PathPolState({1.0, 0.0, 0.0, 0.0}, Side::input); }

std::vector<ElementOp> preparation_stages(Preparation kind) {
    std::vector<ElementOp> stages{bs1()};
    if (kind == Preparation::entangled) {
        stages.push_back(hwp_on_t());
    }
    return stages;
}

std::vector<ElementOp> interferometer_stages(PhaseShift phi) {
    return {mirror(), phase_shifter(phi), bs2()};
}

PathPolState prepare(Preparation kind) {
    PathPolState s = incident_photon();
    for (const ElementOp &op : preparation_stages(kind)) {
        s = apply(op, s);
    }
    return s;
}

PathPolState emerge(Preparation kind, PhaseShift phi) {
    PathPolState s = prepare(kind);
    for (const ElementOp &op : interferometer_stages(phi)) {
        s = apply(op, s);
    }
    return s;
}

SubensembleTable subensemble_table(Preparation kind, PhaseShift phi, PolarizerAngle alpha) {
    const PathPolState out = emerge(kind, phi);
    SubensembleTable table;
    table.t_prime = channel_stats(out, Channel::t_prime, alpha);
    table.r_prime = channel_stats(out, Channel::r_prime, alpha);
    table.whole_mean = whole_ensemble_mean(out, alpha);
    return table;
}

}  // namespace mzx
