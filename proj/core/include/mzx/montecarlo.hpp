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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mzx/elements.hpp"
#include "mzx/qcore.hpp"

namespace mzx {

enum class Preparation : std::uint8_t;

/// Polarizer outcome: +1 passes |H'>, -1 is |V'>.
enum class PolOutcome : std::int8_t { plus = 1, minus = -1 };

struct OutcomeCell {
    Channel channel = Channel::t_prime;
    PolOutcome pol = PolOutcome::plus;
    double prob = 0.0;
};

/// Cell order is fixed: (t',+), (t',-), (r',+), (r',-). It is part of the
/// sampling reproducibility contract.
using OutcomeTable = std::array<OutcomeCell, 4>;

constexpr std::size_t cell_index(Channel channel, PolOutcome pol) {
    return static_cast<std::size_t>(channel) * 2 + (pol == PolOutcome::plus ? 0 : 1);
}

/// Born-rule probabilities of the joint (exit channel, polarizer) measurement.
/// Requires an output-side state.
OutcomeTable outcome_distribution(const PathPolState &s, PolarizerAngle alpha);

/// Counter-based random stream.
///
/// Shot j of block k draws the top 53 bits of mix64(key_k + (j + 1) * gamma)
/// with key_k = mix64(mix64(seed) + k * gamma), where mix64 is the SplitMix64
/// finalizer and gamma = 0x9E3779B97F4A7C15. A shot's uniform depends only on
/// (seed, k, j), never on scheduling.
namespace rng {

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t block_key(std::uint64_t seed, std::uint64_t block) {
    return mix64(mix64(seed) + block * kGamma);
}

/// Uniform double in [0, 1).
constexpr double uniform(std::uint64_t key, std::uint64_t counter) {
    return static_cast<double>(mix64(key + (counter + 1) * kGamma) >> 11) * 0x1.0p-53;
}

}  // namespace rng

inline constexpr std::size_t kDefaultBlockSize = std::size_t{1} << 16;

struct SampleOptions {
    /// Shots per independent block. Part of the reproducibility contract.
    std::size_t block_size = kDefaultBlockSize;
    /// Worker threads; 0 picks the hardware concurrency. Never affects results.
    unsigned threads = 0;
};

struct SampleReport {
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t block_size = kDefaultBlockSize;

    /// (count[ch,+] - count[ch,-]) / N, indexed by Channel.
    std::array<double, 2> est_sub_mean{};
    std::array<double, 2> std_err_sub_mean{};
    /// Sum of +-1 outcomes over all shots / N.
    double est_whole_mean = 0.0;
    double std_err_whole_mean = 0.0;

    friend bool operator==(const SampleReport &, const SampleReport &) = default;
};

/// Draws `shots` categorical outcomes by inverse CDF over the fixed cell order.
/// Throws ArgumentError if shots == 0 or block_size == 0.
std::array<std::uint64_t, 4> sample_counts(const OutcomeTable &table, std::uint64_t shots,
                                           std::uint64_t seed, const SampleOptions &options = {});

/// Derives estimators and standard errors from raw counts.
SampleReport make_report(const std::array<std::uint64_t, 4> &counts, std::uint64_t seed,
                         std::size_t block_size);

SampleReport sample(const PathPolState &s, PolarizerAngle alpha, std::uint64_t shots,
                    std::uint64_t seed, const SampleOptions &options = {});

struct EstimatorError {
    double analytic = 0.0;
    double estimate = 0.0;
    double abs_error = 0.0;
    double std_err = 0.0;
};

struct ConvergenceRow {
    std::uint64_t shots = 0;
    EstimatorError sub_mean_t_prime;
    EstimatorError sub_mean_r_prime;
    EstimatorError whole_mean;
};

/// One row per ladder entry; the ladder must be strictly increasing and
/// every entry at least 1. All rungs share `seed`.
std::vector<ConvergenceRow> convergence_report(Preparation kind, PolarizerAngle alpha,
                                               PhaseShift phi,
                                               std::span<const std::uint64_t> shot_ladder,
                                               std::uint64_t seed,
                                               const SampleOptions &options = {});

}  // namespace mzx
