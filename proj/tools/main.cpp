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

// mzx: batch front-end for the Mach-Zehnder path-polarization simulator.
//
//   mzx run --config <path> [--output <path>] [--seed <u64>] [--mode <mode>]
//   mzx verify
//
// Exit codes: 0 ok, 1 invalid config or arguments, 2 unwritable output,
// 3 internal consistency failure, 4 acceptance failure.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mzx/errors.hpp"
#include "mzx/tools/acceptance.hpp"
#include "mzx/tools/config.hpp"
#include "mzx/tools/runner.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kBadConfig = 1,
    kUnwritable = 2,
    kInconsistent = 3,
    kAcceptanceFailed = 4,
};

struct RunArgs {
    std::string config;
    std::optional<std::string> output;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
};

std::optional<std::uint64_t> env_seed() {
    const char *raw = std::getenv("MZX_SEED");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string_view text(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw mzx::tools::ConfigError("MZX_SEED: expected a non-negative integer, got '" +
                                      std::string(text) + "'");
    }
    return value;
}

int run(const RunArgs &args) {
    using namespace mzx::tools;
    ExperimentConfig cfg;
    try {
        cfg = load_config(args.config);
        if (args.mode) {
            const auto mode = parse_mode(*args.mode);
            if (!mode) throw ConfigError("--mode: expected analytic, montecarlo or both");
            cfg.mode = *mode;
            if (cfg.mode != Mode::analytic && cfg.shots == 0) {
                throw ConfigError(args.config + ": shots: must be >= 1 for --mode " + *args.mode);
            }
        }
        // flag > env > config
        if (args.seed) {
            cfg.seed = *args.seed;
        } else if (auto s = env_seed()) {
            cfg.seed = *s;
        }
        if (args.output) cfg.output = args.output;
        if (cfg.output && *cfg.output == "-") cfg.output.reset();
    } catch (const mzx::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadConfig;
    }

    std::vector<ResultRow> rows;
    try {
        rows = run_grid(cfg);
    } catch (const mzx::ConsistencyError &e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kInconsistent;
    } catch (const mzx::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadConfig;
    }

    std::ostream *summary = &std::cout;
    if (cfg.output) {
        std::ofstream out(*cfg.output, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "error: cannot write " << *cfg.output << '\n';
            return kUnwritable;
        }
        write_csv(out, cfg.mode, rows);
        out.flush();
        if (!out) {
            std::cerr << "error: failed writing " << *cfg.output << '\n';
            return kUnwritable;
        }
    } else {
        write_csv(std::cout, cfg.mode, rows);
        summary = &std::cerr;
    }

    const RunSummary s = summarize(rows);
    *summary << fmt::format(
        "{} rows ({} {}, mode {}); max sum-rule residual {:.3e}; max whole-ensemble phi-variation "
        "{:.3e}\n",
        s.rows, to_string(cfg.preparation), "preparation", to_string(cfg.mode),
        s.max_sum_rule_residual, s.max_whole_phi_variation);
    return kOk;
}

int verify() {
    const auto results = mzx::tools::run_acceptance();
    const bool ok = mzx::tools::print_acceptance(std::cout, results);
    std::cout << (ok ? "all criteria passed\n" : "acceptance FAILED\n");
    return ok ? kOk : kAcceptanceFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mach-Zehnder path-polarization simulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App *run_cmd = app.add_subcommand("run", "Evaluate a phi/alpha grid and write CSV");
    run_cmd->add_option("--config", run_args.config, "Experiment config file")->required();
    run_cmd->add_option("--output", run_args.output, "CSV destination, - for stdout (overrides config)");
    run_cmd->add_option("--seed", run_args.seed, "RNG seed (overrides MZX_SEED and config)");
    run_cmd->add_option("--mode", run_args.mode, "analytic | montecarlo | both");

    CLI::App *verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadConfig;
    }

    if (*run_cmd) return run(run_args);
    if (*verify_cmd) return verify();
    return kBadConfig;
}
