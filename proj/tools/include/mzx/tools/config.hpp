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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzx/errors.hpp"
#include "mzx/scenario.hpp"

namespace mzx::tools {

enum class Mode : std::uint8_t { analytic, montecarlo, both };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Invalid configuration; the message carries source, line and field.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// A fully validated experiment description. Angles are in radians.
struct ExperimentConfig {
    Preparation preparation = Preparation::product;
    std::vector<double> phi;
    std::vector<double> alpha;
    Mode mode = Mode::analytic;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    bool degrees = false;
    std::size_t block_size = std::size_t{1} << 16;
    unsigned threads = 0;
};

/// Parses the key-value config format:
///
///     # comment
///     preparation = product | entangled
///     phi   = sweep(start, stop, steps) | v1, v2, ...
///     alpha = sweep(start, stop, steps) | v1, v2, ...
///     mode  = analytic | montecarlo | both
///     shots = 1000000
///     seed  = 7
///     output = results.csv
///     degrees = false
///
/// A sweep is an inclusive linspace; steps = 1 yields just `start`. Any angle
/// may carry a `deg` or `rad` suffix, which overrides `degrees`.
ExperimentConfig parse_config(std::string_view text, std::string_view source = "<config>");

ExperimentConfig load_config(const std::string &path);

}  // namespace mzx::tools
