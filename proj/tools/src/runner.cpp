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

#include "mzx/tools/runner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "mzx/observables.hpp"

namespace mzx::tools {

namespace {

std::string num(double x) {
    if (x == 0.0) x = 0.0;  // no "-0" in output
    return fmt::format("{:.17g}", x);
}

std::string opt_num(const std::optional<double> &x) { return x ? num(*x) : "NA"; }

}  // namespace

std::uint64_t grid_point_seed(std::uint64_t seed, std::uint64_t index) {
    return rng::mix64(seed + index * rng::kGamma);
}

std::vector<ResultRow> run_grid(const ExperimentConfig &config) {
    std::vector<ResultRow> rows;
    rows.reserve(config.phi.size() * config.alpha.size());
    const SampleOptions options{config.block_size, config.threads};
    std::uint64_t index = 0;
    for (double phi_value : config.phi) {
        const PhaseShift phi(phi_value);
        const PathPolState out = emerge(config.preparation, phi);
        for (double alpha_value : config.alpha) {
            const PolarizerAngle alpha(alpha_value);
            ResultRow row;
            row.preparation = config.preparation;
            row.phi = phi_value;
            row.alpha = alpha_value;
            row.table = subensemble_table(config.preparation, phi, alpha);
            row.sum_rule_residual = sum_rule_residual(out, alpha);
            if (config.mode != Mode::analytic) {
                row.sampled = sample(out, alpha, config.shots, grid_point_seed(config.seed, index),
                                     options);
            }
            rows.push_back(std::move(row));
            ++index;
        }
    }
    return rows;
}

RunSummary summarize(const std::vector<ResultRow> &rows) {
    RunSummary s;
    s.rows = rows.size();
    std::map<double, std::pair<double, double>> range_by_alpha;
    for (const ResultRow &r : rows) {
        s.max_sum_rule_residual = std::max(s.max_sum_rule_residual, r.sum_rule_residual);
        const double m = r.table.whole_mean;
        auto [it, inserted] = range_by_alpha.try_emplace(r.alpha, m, m);
        if (!inserted) {
            it->second.first = std::min(it->second.first, m);
            it->second.second = std::max(it->second.second, m);
        }
    }
    for (const auto &[alpha, range] : range_by_alpha) {
        s.max_whole_phi_variation = std::max(s.max_whole_phi_variation, range.second - range.first);
    }
    return s;
}

void write_csv(std::ostream &out, Mode mode, const std::vector<ResultRow> &rows) {
    const bool analytic = mode != Mode::montecarlo;
    const bool sampled = mode != Mode::analytic;

    std::string header = "preparation,phi,alpha";
    if (analytic) {
        header +=
            ",p_tprime,p_rprime,sub_mean_tprime,sub_mean_rprime,cond_mean_tprime,"
            "cond_mean_rprime,whole_mean,sum_rule_residual";
    }
    if (sampled) {
        header +=
            ",shots,seed,block_size,count_tprime_plus,count_tprime_minus,count_rprime_plus,"
            "count_rprime_minus,est_sub_mean_tprime,est_sub_mean_rprime,est_whole_mean,"
            "std_err_sub_mean_tprime,std_err_sub_mean_rprime,std_err_whole_mean";
    }
    out << header << '\n';

    for (const ResultRow &r : rows) {
        std::string line = fmt::format("{},{},{}", to_string(r.preparation), num(r.phi), num(r.alpha));
        if (analytic) {
            const SubensembleTable &t = r.table;
            line += fmt::format(",{},{},{},{},{},{},{},{}", num(t.t_prime.probability),
                                num(t.r_prime.probability), num(t.t_prime.sub_mean),
                                num(t.r_prime.sub_mean), opt_num(t.t_prime.cond_mean),
                                opt_num(t.r_prime.cond_mean), num(t.whole_mean),
                                num(r.sum_rule_residual));
        }
        if (sampled) {
            const SampleReport &s = r.sampled.value();
            line += fmt::format(",{},{},{},{},{},{},{},{},{},{},{},{},{}", s.shots, s.seed,
                                s.block_size, s.counts[0], s.counts[1], s.counts[2], s.counts[3],
                                num(s.est_sub_mean[0]), num(s.est_sub_mean[1]),
                                num(s.est_whole_mean), num(s.std_err_sub_mean[0]),
                                num(s.std_err_sub_mean[1]), num(s.std_err_whole_mean));
        }
        out << line << '\n';
    }
}

std::string to_csv(Mode mode, const std::vector<ResultRow> &rows) {
    std::ostringstream os;
    write_csv(os, mode, rows);
    return os.str();
}

}  // namespace mzx::tools
