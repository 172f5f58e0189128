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
#include <ostream>
#include <string>
#include <vector>

#include "mzx/montecarlo.hpp"
#include "mzx/scenario.hpp"
#include "mzx/tools/config.hpp"

namespace mzx::tools {

/// One (phi, alpha) grid point.
struct ResultRow {
    Preparation preparation = Preparation::product;
    double phi = 0.0;
    double alpha = 0.0;
    SubensembleTable table;
    double sum_rule_residual = 0.0;
    std::optional<SampleReport> sampled;
};

struct RunSummary {
    std::size_t rows = 0;
    double max_sum_rule_residual = 0.0;
    /// Largest spread of the whole-ensemble mean over phi at fixed alpha.
    double max_whole_phi_variation = 0.0;
};

/// Seed used for grid point `index` (phi-major order).
std::uint64_t grid_point_seed(std::uint64_t seed, std::uint64_t index);

/// Evaluates the grid in phi-major order. Throws ConsistencyError if any
/// row breaks the sum rule.
std::vector<ResultRow> run_grid(const ExperimentConfig &config);

RunSummary summarize(const std::vector<ResultRow> &rows);

/// Long-format CSV with a header row. Numbers use 17 significant digits and
/// an empty subensemble's conditional mean is written as NA.
void write_csv(std::ostream &out, Mode mode, const std::vector<ResultRow> &rows);

std::string to_csv(Mode mode, const std::vector<ResultRow> &rows);

}  // namespace mzx::tools
