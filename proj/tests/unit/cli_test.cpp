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

// Drives the built mzx binary through its exit-code and override contract.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace fs = std::filesystem;

namespace {

int run_shell(const std::string &cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mzx_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string &name, const std::string &text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    int mzx(const std::string &args, const std::string &env = "") {
        return run_shell("env -u MZX_SEED " + env + " '" + std::string(MZX_CLI_PATH) + "' " + args + " > '" +
                         (dir_ / "stdout.txt").string() + "' 2> '" + (dir_ / "stderr.txt").string() + "'");
    }

    std::string stderr_text() { return slurp(dir_ / "stderr.txt"); }
    std::string stdout_text() { return slurp(dir_ / "stdout.txt"); }

    fs::path dir_;
};

const char *kMonteCarlo = "preparation = product\nphi = 0.5, 1\nalpha = 0.25\nmode = montecarlo\nshots = 2000\nseed = 1\n";

}  // namespace

TEST_F(Cli, run_writes_csv_and_summary) {
    const fs::path cfg = write_config("a.cfg", "preparation = product\nphi = 0, 1.5707963267948966\nalpha = 0\n");
    const fs::path out = dir_ / "a.csv";
    ASSERT_EQ(mzx("run --config '" + cfg.string() + "' --output '" + out.string() + "'"), 0);
    const std::string csv = slurp(out);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_NE(stdout_text().find("max sum-rule residual"), std::string::npos);
}

TEST_F(Cli, csv_to_stdout_without_output) {
    const fs::path cfg = write_config("a.cfg", "preparation = product\nphi = 0\nalpha = 0\n");
    ASSERT_EQ(mzx("run --config '" + cfg.string() + "'"), 0);
    EXPECT_EQ(stdout_text().rfind("preparation,phi,alpha", 0), 0U);
    EXPECT_NE(stderr_text().find("1 rows"), std::string::npos);
}

TEST_F(Cli, dash_output_means_stdout) {
    const fs::path cfg = write_config("a.cfg", "preparation = product\nphi = 0\nalpha = 0\noutput = x.csv\n");
    ASSERT_EQ(mzx("run --config '" + cfg.string() + "' --output -"), 0);
    EXPECT_EQ(stdout_text().rfind("preparation,phi,alpha", 0), 0U);
    EXPECT_FALSE(fs::exists(dir_ / "-"));
}

TEST_F(Cli, invalid_config_exits_1_with_location) {
    const fs::path cfg = write_config("bad.cfg", "preparation = product\nphi = 0\nalpha = oops\n");
    EXPECT_EQ(mzx("run --config '" + cfg.string() + "'"), 1);
    EXPECT_NE(stderr_text().find("bad.cfg:3: alpha"), std::string::npos) << stderr_text();
    EXPECT_EQ(mzx("run --config '" + (dir_ / "missing.cfg").string() + "'"), 1);
    EXPECT_EQ(mzx("frobnicate"), 1);
    EXPECT_EQ(mzx("run --config '" + cfg.string() + "' --mode turbo"), 1);
}

TEST_F(Cli, unwritable_output_exits_2) {
    const fs::path cfg = write_config("a.cfg", "preparation = product\nphi = 0\nalpha = 0\n");
    EXPECT_EQ(mzx("run --config '" + cfg.string() + "' --output /nonexistent-dir/x/out.csv"), 2);
}

TEST_F(Cli, seed_precedence_flag_env_config) {
    const fs::path cfg = write_config("mc.cfg", kMonteCarlo);
    auto csv_for = [&](const std::string &extra, const std::string &env, const std::string &name) {
        const fs::path out = dir_ / name;
        EXPECT_EQ(mzx("run --config '" + cfg.string() + "' --output '" + out.string() + "' " + extra, env), 0);
        return slurp(out);
    };
    const std::string config_seed = csv_for("", "", "c.csv");
    const std::string env_seed = csv_for("", "MZX_SEED=9", "e.csv");
    const std::string flag_seed = csv_for("--seed 9", "MZX_SEED=4", "f.csv");
    const std::string flag_only = csv_for("--seed 9", "", "g.csv");
    EXPECT_NE(config_seed, env_seed);
    EXPECT_EQ(env_seed, flag_seed);
    EXPECT_EQ(flag_seed, flag_only);
    EXPECT_EQ(mzx("run --config '" + cfg.string() + "'", "MZX_SEED=abc"), 1);
}

TEST_F(Cli, mode_override) {
    const fs::path cfg = write_config("a.cfg", "preparation = product\nphi = 0\nalpha = 0\nshots = 100\n");
    ASSERT_EQ(mzx("run --config '" + cfg.string() + "' --mode both"), 0);
    EXPECT_NE(stdout_text().find("est_whole_mean"), std::string::npos);
    const fs::path no_shots = write_config("b.cfg", "preparation = product\nphi = 0\nalpha = 0\n");
    EXPECT_EQ(mzx("run --config '" + no_shots.string() + "' --mode montecarlo"), 1);
}
