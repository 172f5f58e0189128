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

#include "mzx/tools/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "mzx/mzx.hpp"
#include "mzx/tools/config.hpp"
#include "mzx/tools/runner.hpp"

namespace mzx::tools {

namespace {

constexpr Amp kI{0.0, 1.0};
constexpr double kMcSigmas = 5.0;
constexpr std::uint64_t kMcShots = 1'000'000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// k * 2pi / n for k in [0, n).
std::vector<double> phi_grid(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    return out;
}

/// k * pi / (n - 1) for k in [0, n), covering [0, pi].
std::vector<double> alpha_grid(std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = kPi * static_cast<double>(k) / static_cast<double>(n - 1);
    return out;
}

/// Deterministic uniforms and normals for the randomized checks.
class Draws {
  public:
    explicit Draws(std::uint64_t stream) : key_(rng::block_key(0xACCE97ULL, stream)) {}

    double uniform() { return rng::uniform(key_, counter_++); }

    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    PathPolState::Amps unit_vector() {
        PathPolState::Amps a;
        double n2 = 0.0;
        for (Amp &z : a) {
            z = Amp(normal(), normal());
            n2 += std::norm(z);
        }
        for (Amp &z : a) z /= std::sqrt(n2);
        return a;
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Closed-form output amplitudes, written out independently of the element chain.
PathPolState::Amps closed_form_output(Preparation kind, double phi) {
    const Amp e = std::polar(1.0, phi);
    if (kind == Preparation::product) {
        return {kI * (1.0 + e) / 2.0, 0.0, (1.0 - e) / 2.0, 0.0};
    }
    return {kI * e / 2.0, kI / 2.0, -e / 2.0, 0.5};
}

double max_amp_diff(const PathPolState::Amps &a, const PathPolState::Amps &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

struct Tracker {
    double worst = 0.0;
    void operator()(double residual) { worst = std::max(worst, std::isnan(residual) ? INFINITY : residual); }
};

constexpr Preparation kBoth[] = {Preparation::product, Preparation::entangled};

CriterionResult output_amplitudes() {
    const auto start = Clock::now();
    Tracker err;
    for (Preparation kind : kBoth) {
        for (double phi : phi_grid(64)) {
            err(max_amp_diff(emerge(kind, PhaseShift(phi)).amps(), closed_form_output(kind, phi)));
        }
    }
    const double t = seconds_since(start);
    return {1, "staged output amplitudes match closed form (64 phi x 2 preparations)",
            err.worst <= kExactTol && t < 1.0,
            fmt::format("max |diff| = {:.3e} (tol 1e-12), runtime {:.3f} s (limit 1 s)", err.worst, t)};
}

CriterionResult product_whole_mean() {
    Tracker err;
    Tracker spread;
    for (double a : alpha_grid(64)) {
        double lo = INFINITY;
        double hi = -INFINITY;
        for (double phi : phi_grid(64)) {
            const double m = whole_ensemble_mean(emerge(Preparation::product, PhaseShift(phi)), PolarizerAngle(a));
            err(std::abs(m - std::cos(2.0 * a)));
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        spread(hi - lo);
    }
    return {2, "product whole-ensemble mean = cos 2a and constant in phi (64x64)",
            err.worst <= kExactTol && spread.worst <= kExactTol,
            fmt::format("max |mean - cos2a| = {:.3e}, max phi-variation = {:.3e} (tol 1e-12)",
                        err.worst, spread.worst)};
}

CriterionResult entangled_whole_mean() {
    Tracker err;
    for (double a : alpha_grid(64)) {
        for (double phi : phi_grid(64)) {
            err(std::abs(whole_ensemble_mean(emerge(Preparation::entangled, PhaseShift(phi)), PolarizerAngle(a))));
        }
    }
    return {3, "entangled whole-ensemble mean vanishes (64x64)", err.worst <= kExactTol,
            fmt::format("max |mean| = {:.3e} (tol 1e-12)", err.worst)};
}

CriterionResult product_subensembles() {
    Tracker err;
    for (double a : alpha_grid(64)) {
        const PolarizerAngle alpha(a);
        const double c2a = std::cos(2.0 * a);
        for (double phi : phi_grid(64)) {
            const SubensembleTable t = subensemble_table(Preparation::product, PhaseShift(phi), alpha);
            err(std::abs(t.t_prime.sub_mean - (1.0 + std::cos(phi)) * c2a / 2.0));
            err(std::abs(t.r_prime.sub_mean - (1.0 - std::cos(phi)) * c2a / 2.0));
        }
        const SubensembleTable at0 = subensemble_table(Preparation::product, PhaseShift(0.0), alpha);
        err(std::abs(at0.t_prime.sub_mean - c2a));
        err(std::abs(at0.r_prime.sub_mean));
        const SubensembleTable at90 = subensemble_table(Preparation::product, PhaseShift(kPi / 2.0), alpha);
        err(std::abs(at90.t_prime.sub_mean - c2a / 2.0));
        err(std::abs(at90.r_prime.sub_mean - c2a / 2.0));
    }
    return {4, "product subensemble means = (1 +- cos phi) cos 2a / 2, incl. phi = 0 and pi/2",
            err.worst <= kExactTol, fmt::format("max |diff| = {:.3e} (tol 1e-12)", err.worst)};
}

CriterionResult entangled_subensembles() {
    Tracker err;
    Tracker anti;
    for (double a : alpha_grid(64)) {
        for (double phi : phi_grid(64)) {
            const SubensembleTable t = subensemble_table(Preparation::entangled, PhaseShift(phi), PolarizerAngle(a));
            const double expected = std::sin(2.0 * a) * std::cos(phi) / 2.0;
            err(std::abs(t.t_prime.sub_mean - expected));
            err(std::abs(t.r_prime.sub_mean + expected));
            anti(std::abs(t.t_prime.sub_mean + t.r_prime.sub_mean));
        }
    }
    return {5, "entangled subensemble means = +-sin 2a cos phi / 2, antisymmetric",
            err.worst <= kExactTol && anti.worst <= kExactTol,
            fmt::format("max |diff| = {:.3e}, max |t' + r'| = {:.3e} (tol 1e-12)", err.worst, anti.worst)};
}

CriterionResult sum_rule() {
    Tracker grid;
    Tracker random;
    try {
        for (Preparation kind : kBoth) {
            for (double a : alpha_grid(64)) {
                for (double phi : phi_grid(64)) {
                    grid(sum_rule_residual(emerge(kind, PhaseShift(phi)), PolarizerAngle(a)));
                }
            }
        }
        Draws draws(6);
        for (int i = 0; i < 1000; ++i) {
            const PathPolState s(draws.unit_vector(), Side::output);
            random(sum_rule_residual(s, PolarizerAngle(2.0 * kPi * draws.uniform())));
        }
    } catch (const ConsistencyError &e) {
        return {6, "whole mean = sum of subensemble means", false, e.what()};
    }
    return {6, "whole mean = sum of subensemble means (grid + 1000 random states)",
            grid.worst <= kExactTol && random.worst <= kExactTol,
            fmt::format("grid max residual = {:.3e}, random max residual = {:.3e} (tol 1e-12)",
                        grid.worst, random.worst)};
}

CriterionResult context_dependence() {
    Tracker err;
    for (double a : alpha_grid(64)) {
        const ContextContrast c = context_contrast(Preparation::product, Channel::t_prime, PolarizerAngle(a),
                                                   PhaseShift(0.0), PhaseShift(kPi / 2.0));
        err(std::abs(c.delta_sub_mean - std::cos(2.0 * a) / 2.0));
    }
    auto contrast_at = [](double a) {
        return context_contrast(Preparation::product, Channel::t_prime, PolarizerAngle(a), PhaseShift(0.0),
                                PhaseShift(kPi / 2.0))
            .delta_sub_mean;
    };
    const double at0 = contrast_at(0.0);
    const double at45 = contrast_at(kPi / 4.0);
    const double ent45 = context_contrast(Preparation::entangled, Channel::t_prime, PolarizerAngle(kPi / 4.0),
                                          PhaseShift(0.0), PhaseShift(kPi / 2.0))
                             .delta_sub_mean;
    return {7, "t' subensemble contrast between phi = 0 and pi/2 equals cos 2a / 2",
            err.worst <= kExactTol && std::abs(at0) >= 0.1 && std::abs(at45) <= kExactTol,
            fmt::format("max |diff| = {:.3e}; contrast(a=0) = {:.6f} (need >= 0.1); "
                        "contrast(a=pi/4) = {:.3e} (tol 1e-12); entangled contrast(a=pi/4) = {:.6f}",
                        err.worst, at0, at45, ent45)};
}

CriterionResult path_observable_forms() {
    Draws draws(8);
    Tracker forms;
    Tracker square;
    Tracker comm;
    for (int i = 0; i < 100; ++i) {
        const double phi = 2.0 * kPi * draws.uniform();
        const Mat2 matrix_form = path_observable_2x2(PhaseShift(phi));
        const Mat2 pauli_form = Amp(-std::sin(phi)) * Mat2::pauli_x() + Amp(std::cos(phi)) * Mat2::pauli_y();
        forms(max_abs_diff(matrix_form, pauli_form));
        square(max_abs_diff(matrix_form * matrix_form, Mat2::identity()));
    }
    for (int i = 0; i < 100; ++i) {
        const double phi = 2.0 * kPi * draws.uniform();
        const double alpha = 2.0 * kPi * draws.uniform();
        comm(commutator_norm(path_observable(PhaseShift(phi)), pol_observable(PolarizerAngle(alpha))));
    }
    return {8, "path observable matrix = Pauli decomposition, squares to I, commutes with delta",
            forms.worst <= kExactTol && square.worst <= kExactTol && comm.worst <= kExactTol,
            fmt::format("max |matrix - pauli| = {:.3e}, max |b^2 - I| = {:.3e}, max |[b, d]| = {:.3e} "
                        "(tol 1e-12)",
                        forms.worst, square.worst, comm.worst)};
}

CriterionResult monte_carlo() {
    const auto start = Clock::now();
    const double phis[] = {0.0, kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0, kPi};
    const double alphas[] = {0.0, kPi / 8.0, kPi / 4.0, 3.0 * kPi / 8.0, kPi / 2.0};
    double worst_sigma = 0.0;
    double max_std_err = 0.0;
    bool within = true;
    bool identical = true;
    std::uint64_t index = 0;
    for (Preparation kind : kBoth) {
        for (double phi : phis) {
            const PathPolState out = emerge(kind, PhaseShift(phi));
            for (double a : alphas) {
                const PolarizerAngle alpha(a);
                const std::uint64_t seed = grid_point_seed(kAcceptanceSeed, index++);
                const SampleReport rep = sample(out, alpha, kMcShots, seed, SampleOptions{kDefaultBlockSize, 1});
                const SampleReport again = sample(out, alpha, kMcShots, seed, SampleOptions{kDefaultBlockSize, 4});
                identical = identical && rep == again;

                const double analytic[] = {channel_stats(out, Channel::t_prime, alpha).sub_mean,
                                           channel_stats(out, Channel::r_prime, alpha).sub_mean,
                                           whole_ensemble_mean(out, alpha)};
                const double estimate[] = {rep.est_sub_mean[0], rep.est_sub_mean[1], rep.est_whole_mean};
                const double std_err[] = {rep.std_err_sub_mean[0], rep.std_err_sub_mean[1],
                                          rep.std_err_whole_mean};
                for (int k = 0; k < 3; ++k) {
                    const double diff = std::abs(estimate[k] - analytic[k]);
                    // The absolute floor only matters for degenerate estimators (std_err = 0).
                    within = within && diff <= kMcSigmas * std_err[k] + kExactTol;
                    if (std_err[k] > 0.0) worst_sigma = std::max(worst_sigma, diff / std_err[k]);
                    max_std_err = std::max(max_std_err, std_err[k]);
                }
            }
        }
    }
    const double t = seconds_since(start);
    return {9, "Monte Carlo estimates within 5 std_err at N = 1e6 (5x5 grid x 2 preparations)",
            within && identical && t < 30.0,
            fmt::format("worst |est - exact| / std_err = {:.2f} (limit 5), max std_err = {:.2e}, "
                        "bit-identical rerun = {}, runtime {:.2f} s (limit 30 s)",
                        worst_sigma, max_std_err, identical ? "yes" : "no", t)};
}

CriterionResult unitarity() {
    Draws draws(10);
    Tracker unit;
    Tracker norm;
    std::vector<ElementOp> ops{bs1(), hwp_on_t(), bs2(), mirror()};
    for (int i = 0; i < 20; ++i) {
        const double phi = 2.0 * kPi * draws.uniform();
        const double alpha = 2.0 * kPi * draws.uniform();
        ops.push_back(phase_shifter(PhaseShift(phi)));
        ops.push_back(path_observable(PhaseShift(phi)));
        ops.push_back(pol_observable(PolarizerAngle(alpha)));
    }
    for (const ElementOp &op : ops) {
        unit(max_abs_diff(op.matrix().adjoint() * op.matrix(), Mat4::identity()));
    }
    for (int i = 0; i < 1000; ++i) {
        const PathPolState s(draws.unit_vector(), Side::input);
        for (const ElementOp &op : ops) {
            norm(std::abs(apply(op, s).norm_squared() - 1.0));
        }
    }
    return {10, "every element is unitary and preserves the norm of 1000 random states",
            unit.worst <= kExactTol && norm.worst <= kExactTol,
            fmt::format("max |U^dag U - I| = {:.3e} over {} elements, max |norm^2 - 1| = {:.3e} (tol 1e-12)",
                        unit.worst, ops.size(), norm.worst)};
}

constexpr const char *kDeterminismConfig = R"(
preparation = entangled
phi = sweep(0, 6.283185307179586, 9)
alpha = 0, 22.5deg, 45deg
mode = both
shots = 20000
seed = 11
)";

CriterionResult cli_determinism() {
    const ExperimentConfig cfg = parse_config(kDeterminismConfig, "<verify>");
    const std::string first = to_csv(cfg.mode, run_grid(cfg));
    const std::string second = to_csv(cfg.mode, run_grid(cfg));
    return {11, "run output is byte-identical across invocations", first == second && !first.empty(),
            fmt::format("{} bytes, identical = {}", first.size(), first == second ? "yes" : "no")};
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    struct Criterion {
        const char *name;
        std::function<CriterionResult()> run;
    };
    const Criterion criteria[] = {
        {"staged output amplitudes match closed form", output_amplitudes},
        {"product whole-ensemble mean", product_whole_mean},
        {"entangled whole-ensemble mean", entangled_whole_mean},
        {"product subensemble means", product_subensembles},
        {"entangled subensemble means", entangled_subensembles},
        {"sum rule", sum_rule},
        {"subensemble context contrast", context_dependence},
        {"path observable forms", path_observable_forms},
        {"Monte Carlo consistency", monte_carlo},
        {"unitarity and norm preservation", unitarity},
        {"run output determinism", cli_determinism},
    };
    std::vector<CriterionResult> results;
    int id = 1;
    for (const Criterion &criterion : criteria) {
        try {
            results.push_back(criterion.run());
        } catch (const std::exception &e) {
            results.push_back({id, criterion.name, false, std::string("raised: ") + e.what()});
        }
        ++id;
    }
    return results;
}

bool print_acceptance(std::ostream &out, const std::vector<CriterionResult> &results) {
    bool all = true;
    for (const CriterionResult &r : results) {
        out << fmt::format("[{}] {:>2}. {}: {}\n", r.passed ? "PASS" : "FAIL", r.id, r.name, r.detail);
        all = all && r.passed;
    }
    return all;
}

}  // namespace mzx::tools
