// Copyright 2026 The discord_lab Authors
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


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string command = env + " '" DISCORD_LAB_CLI "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    Run r;
    if (pipe == nullptr) return r;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string state(const char* name) { return std::string("'" DISCORD_LAB_DATA "/") + name + "'"; }

double value_of(const Run& r) { return json::parse(r.out)["value"].get<double>(); }

TEST(Cli, HelpAndVersion) {
    EXPECT_EQ(run("--help").code, 0);
    const auto v = run("--version");
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("0.1.0"), std::string::npos);
}

TEST(Cli, ComputeGlobalDiscord) {
    const auto r = run("compute " + state("ghz3.json") + " --quantity global_discord");
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(value_of(r), 1.0, 1e-6);
    EXPECT_NEAR(value_of(run("compute " + state("w3.json") + " --quantity global_discord")), std::log2(3.0), 1e-6);
}

TEST(Cli, ComputeSymmetricDiscordReportsBasis) {
    const auto r = run("compute " + state("w3.json") + " --quantity symmetric_discord --cut A:B");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 0.568318, 1e-6);
    EXPECT_NEAR(j["argmin"][0]["theta"].get<double>(), M_PI / 2, 1e-3);
}

TEST(Cli, ComputeEntropyAndDPhi) {
    EXPECT_NEAR(value_of(run("compute " + state("ghz3.json") + " --quantity entropy --cut A")), 1.0, 1e-12);
    EXPECT_NEAR(value_of(run("compute " + state("maximally_mixed_qubit.json") + " --quantity entropy")), 1.0, 1e-12);
    const auto d = run("compute " + state("ghz3.json") + " --quantity d_phi --theta 1.5707963267948966,1.5707963267948966,1.5707963267948966");
    ASSERT_EQ(d.code, 0);
    EXPECT_NEAR(value_of(d), 2.0, 1e-12);
}

TEST(Cli, ComputeJointBlock) {
    const auto r = run("compute " + state("counterexample.json") + " --quantity block_discord --cut A:BC --joint");
    ASSERT_EQ(r.code, 0);
    EXPECT_LT(value_of(r), 1e-4);
}

TEST(Cli, ComputeWritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "discord_lab_cli_out.json";
    const auto r = run("compute " + state("schmidt4.json") + " --quantity global_discord --out '" + path.string() + "'");
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::stringstream text;
    text << std::ifstream(path).rdbuf();
    const double h = -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75));
    EXPECT_NEAR(json::parse(text.str())["value"].get<double>(), h, 1e-6);
    std::filesystem::remove(path);
}

TEST(Cli, Decompose) {
    const auto r = run("decompose " + state("ghz3.json") + " --theta 0,0,0");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_NEAR(j["total"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["terms"][0].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["terms"][1].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(run("decompose " + state("ghz3.json")).code, 2);
}

TEST(Cli, Audit) {
    const auto r = run("audit " + state("counterexample.json") + " --joint");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["holds"].get<bool>());
    EXPECT_NEAR(j["slack"].get<double>(), 0.0, 1e-5);
    EXPECT_FALSE(j["single_site_discard"][0]["satisfied"].get<bool>());
}

TEST(Cli, SweepCsv) {
    const auto r = run("sweep --lambda-step 0.5");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "lambda,gqd,d_ab,d_ac,d_bc,pairwise_sum,residual,holds,argmin_theta_gqd,argmin_phi_gqd");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 3);
    EXPECT_EQ(run("sweep --lambda-step 0").code, 2);
    EXPECT_EQ(run("sweep --lambda-step 0.5 --out /nonexistent/dir/sweep.csv").code, 3);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("compute /nonexistent/state.json --quantity entropy").code, 3);
    EXPECT_EQ(run("compute " + state("ghz3.json") + " --quantity negativity").code, 2);
    EXPECT_EQ(run("compute " + state("ghz3.json")).code, 2);
    EXPECT_EQ(run("compute " + state("ghz3.json") + " --quantity global_discord --cut A:B").code, 2);
    EXPECT_EQ(run("compute " + state("ghz3.json") + " --quantity entropy --out /nonexistent/dir/o.json").code, 3);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("audit " + state("w_ghz_half.json") + " --tol -1").code, 2);
}

TEST(Cli, MaxQubitsEnvironment) {
    const std::string args = "compute " + state("ghz3.json") + " --quantity entropy";
    EXPECT_EQ(run(args, "DISCORD_LAB_MAX_QUBITS=2").code, 2);
    EXPECT_EQ(run(args, "DISCORD_LAB_MAX_QUBITS=3").code, 0);
    EXPECT_EQ(run(args, "DISCORD_LAB_MAX_QUBITS=bogus").code, 2);
    EXPECT_EQ(run("sweep --lambda-step 0.5", "DISCORD_LAB_MAX_QUBITS=2").code, 2);
}

TEST(Cli, MixtureSpecs) {
    const auto a = value_of(run("compute " + state("w_ghz_half.json") + " --quantity global_discord"));
    EXPECT_NEAR(a, 1.2341543, 1e-5);
    const auto b = run("compute " + state("w_ghz_explicit_weights.json") + " --quantity entropy");
    ASSERT_EQ(b.code, 0);
    EXPECT_GT(value_of(b), 0.0);
}

}  // namespace
