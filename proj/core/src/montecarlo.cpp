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

#include "mzx/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "mzx/errors.hpp"
#include "mzx/observables.hpp"
#include "mzx/scenario.hpp"

namespace mzx {

namespace {

using Counts = std::array<std::uint64_t, 4>;

/// Inverse-CDF lookup over the four cells. Zero-probability cells are never
/// selected, including when rounding leaves the last cumulative just below 1.
class CellSampler {
  public:
    explicit CellSampler(const OutcomeTable &table) {
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            acc += table[k].prob;
            cumulative_[k] = acc;
            if (table[k].prob > 0.0) last_nonzero_ = k;
        }
    }

    std::size_t operator()(double u) const {
        for (std::size_t k = 0; k < 3; ++k) {
            if (u < cumulative_[k]) return k;
        }
        return last_nonzero_;
    }

  private:
    std::array<double, 4> cumulative_{};
    std::size_t last_nonzero_ = 0;
};

Counts sample_block(const CellSampler &sampler, std::uint64_t key, std::uint64_t n) {
    Counts counts{};
    for (std::uint64_t j = 0; j < n; ++j) {
        ++counts[sampler(rng::uniform(key, j))];
    }
    return counts;
}

/// Sample standard error of the mean of a variable with the given sum and
/// sum of squares over n draws.
double std_err_of(double sum, double sum_sq, double n) {
    if (n < 2.0) return 0.0;
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    return std::sqrt(var / n);
}

}  // namespace

OutcomeTable outcome_distribution(const PathPolState &s, PolarizerAngle alpha) {
    if (s.side() != Side::output) {
        throw BasisSideError("outcome distribution needs an output-side state");
    }
    const double c = std::cos(alpha.radians());
    const double sn = std::sin(alpha.radians());
    OutcomeTable table;
    for (Channel ch : {Channel::t_prime, Channel::r_prime}) {
        const std::size_t path = static_cast<std::size_t>(ch);
        const Amp h = s[basis_index(path, 0)];
        const Amp v = s[basis_index(path, 1)];
        // <H'|a> and <V'|a>; the eigenvectors are real.
        const Amp plus = c * h + sn * v;
        const Amp minus = sn * h - c * v;
        table[cell_index(ch, PolOutcome::plus)] = {ch, PolOutcome::plus, std::norm(plus)};
        table[cell_index(ch, PolOutcome::minus)] = {ch, PolOutcome::minus, std::norm(minus)};
    }
    return table;
}

Counts sample_counts(const OutcomeTable &table, std::uint64_t shots, std::uint64_t seed,
                     const SampleOptions &options) {
    if (shots == 0) {
        throw ArgumentError("sample needs at least one shot");
    }
    if (options.block_size == 0) {
        throw ArgumentError("block size must be positive");
    }
    const CellSampler sampler(table);
    const std::uint64_t block = options.block_size;
    const std::uint64_t num_blocks = (shots + block - 1) / block;

    std::vector<Counts> per_block(num_blocks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < num_blocks; k = next++) {
            const std::uint64_t n = std::min(block, shots - k * block);
            per_block[k] = sample_block(sampler, rng::block_key(seed, k), n);
        }
    };

    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, num_blocks));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    Counts total{};
    for (const Counts &c : per_block) {
        for (std::size_t k = 0; k < 4; ++k) total[k] += c[k];
    }
    return total;
}

SampleReport make_report(const Counts &counts, std::uint64_t seed, std::size_t block_size) {
    SampleReport r;
    r.counts = counts;
    r.seed = seed;
    r.block_size = block_size;
    for (std::uint64_t c : counts) r.shots += c;
    if (r.shots == 0) {
        throw ArgumentError("report needs at least one shot");
    }
    const double n = static_cast<double>(r.shots);

    double whole_sum = 0.0;
    for (Channel ch : {Channel::t_prime, Channel::r_prime}) {
        const double plus = static_cast<double>(counts[cell_index(ch, PolOutcome::plus)]);
        const double minus = static_cast<double>(counts[cell_index(ch, PolOutcome::minus)]);
        const std::size_t i = static_cast<std::size_t>(ch);
        // Each shot contributes +1, -1, or 0 when it left through the other channel.
        r.est_sub_mean[i] = (plus - minus) / n;
        r.std_err_sub_mean[i] = std_err_of(plus - minus, plus + minus, n);
        whole_sum += plus - minus;
    }
    r.est_whole_mean = whole_sum / n;
    r.std_err_whole_mean = std_err_of(whole_sum, n, n);
    return r;
}

SampleReport sample(const PathPolState &s, PolarizerAngle alpha, std::uint64_t shots,
                    std::uint64_t seed, const SampleOptions &options) {
    const Counts counts = sample_counts(outcome_distribution(s, alpha), shots, seed, options);
    return make_report(counts, seed, options.block_size);
}

std::vector<ConvergenceRow> convergence_report(Preparation kind, PolarizerAngle alpha,
                                               PhaseShift phi,
                                               std::span<const std::uint64_t> shot_ladder,
                                               std::uint64_t seed, const SampleOptions &options) {
    for (std::size_t i = 0; i < shot_ladder.size(); ++i) {
        if (shot_ladder[i] == 0 || (i > 0 && shot_ladder[i] <= shot_ladder[i - 1])) {
            throw ArgumentError("shot ladder must be strictly increasing and positive");
        }
    }
    const PathPolState out = emerge(kind, phi);
    const ChannelStats t = channel_stats(out, Channel::t_prime, alpha);
    const ChannelStats r = channel_stats(out, Channel::r_prime, alpha);
    const double whole = whole_ensemble_mean(out, alpha);

    auto row_of = [](double analytic, double estimate, double std_err) {
        return EstimatorError{analytic, estimate, std::abs(estimate - analytic), std_err};
    };

    std::vector<ConvergenceRow> rows;
    rows.reserve(shot_ladder.size());
    for (std::uint64_t n : shot_ladder) {
        const SampleReport rep = sample(out, alpha, n, seed, options);
        rows.push_back(ConvergenceRow{
            n,
            row_of(t.sub_mean, rep.est_sub_mean[0], rep.std_err_sub_mean[0]),
            row_of(r.sub_mean, rep.est_sub_mean[1], rep.std_err_sub_mean[1]),
            row_of(whole, rep.est_whole_mean, rep.std_err_whole_mean),
        });
    }
    return rows;
}

}  // namespace mzx
