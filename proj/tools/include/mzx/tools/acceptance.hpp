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
#include <ostream>
#include <string>
#include <vector>

namespace mzx::tools {

/// Seed pinned for the Monte Carlo acceptance criterion.
inline constexpr std::uint64_t kAcceptanceSeed = 20260416;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    /// Measured residuals and timings.
    std::string detail;
};

/// Runs every acceptance criterion at its pinned tolerance.
std::vector<CriterionResult> run_acceptance();

/// One "PASS"/"FAIL" line per criterion; returns true iff all passed.
bool print_acceptance(std::ostream &out, const std::vector<CriterionResult> &results);

}  // namespace mzx::tools
