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


#include "discord_lab.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct StateDeleter {
    void operator()(dl_state* s) const { dl_state_free(s); }
};
struct SweepDeleter {
    void operator()(dl_sweep* s) const { dl_sweep_free(s); }
};
using StatePtr = std::unique_ptr<dl_state, StateDeleter>;
using SweepPtr = std::unique_ptr<dl_sweep, SweepDeleter>;

StatePtr load(const char* spec) {
    dl_state* raw = nullptr;
    EXPECT_EQ(dl_state_from_json(spec, &raw), DL_OK) << dl_last_error();
    return StatePtr(raw);
}

std::string take(char* s) {
    std::string out = s == nullptr ? "" : s;
    dl_string_free(s);
    return out;
}

json compute(const dl_state* state, dl_request request, dl_status expected = DL_OK) {
    char* out = nullptr;
    const dl_status status = dl_compute(state, &request, nullptr, &out);
    EXPECT_EQ(status, expected) << dl_last_error();
    if (status != DL_OK) {
        EXPECT_EQ(out, nullptr);
        return json();
    }
    return json::parse(take(out));
}

dl_request request(const char* quantity, const char* cut = nullptr) {
    dl_request r{};
    r.quantity = quantity;
    r.cut = cut;
    return r;
}

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(dl_version(), "0.1.0");
    EXPECT_STREQ(dl_status_name(DL_OK), "ok");
    EXPECT_STRNE(dl_status_name(DL_ERROR_IO), dl_status_name(DL_ERROR_ARGUMENT));
    dl_string_free(nullptr);
}

TEST(CApi, DefaultConfig) {
    dl_optimizer_config c{};
    dl_optimizer_config_default(&c);
    EXPECT_EQ(c.starts, 10u);
    EXPECT_GT(c.grid_theta, 0u);
    EXPECT_GT(c.simplex_iterations, 0u);
    EXPECT_GT(c.tolerance, 0.0);
    dl_optimizer_config_default(nullptr);
}

TEST(CApi, StateAccessors) {
    const auto s = load(R"({"kind":"ghz","n":3})");
    size_t n = 0;
    size_t d = 0;
    ASSERT_EQ(dl_state_num_subsystems(s.get(), &n), DL_OK);
    ASSERT_EQ(dl_state_dimension(s.get(), &d), DL_OK);
    EXPECT_EQ(n, 3u);
    EXPECT_EQ(d, 8u);
    std::vector<double> buffer(2 * d * d);
    ASSERT_EQ(dl_state_entries(s.get(), buffer.data(), buffer.size()), DL_OK);
    EXPECT_NEAR(buffer[0], 0.5, 1e-15);
    EXPECT_NEAR(buffer[2 * 7], -0.5, 1e-15);
    EXPECT_NEAR(buffer[2 * (7 * 8 + 7)], 0.5, 1e-15);
    EXPECT_EQ(buffer[1], 0.0);
    EXPECT_EQ(dl_state_entries(s.get(), buffer.data(), 10), DL_ERROR_ARGUMENT);
    EXPECT_NE(std::string(dl_last_error()).find("buffer"), std::string::npos);
}

TEST(CApi, StateErrors) {
    dl_state* raw = reinterpret_cast<dl_state*>(0x1);
    EXPECT_EQ(dl_state_from_json("{not json", &raw), DL_ERROR_ARGUMENT);
    EXPECT_EQ(raw, nullptr);
    EXPECT_FALSE(std::string(dl_last_error()).empty());
    EXPECT_EQ(dl_state_from_json(R"({"kind":"ghz","n":9})", &raw), DL_ERROR_CAPACITY);
    EXPECT_EQ(dl_state_from_json(R"({"kind":"explicit","dims":[2],"entries":[[1,0],[0,0],[0,0],[1,0]]})", &raw),
              DL_ERROR_VALIDATION);
    EXPECT_EQ(dl_state_from_json(nullptr, &raw), DL_ERROR_ARGUMENT);
    EXPECT_EQ(dl_state_from_json(R"({"kind":"w"})", nullptr), DL_ERROR_ARGUMENT);
    EXPECT_EQ(dl_state_from_file("/nonexistent/state.json", &raw), DL_ERROR_IO);
    size_t n = 0;
    EXPECT_EQ(dl_state_num_subsystems(nullptr, &n), DL_ERROR_ARGUMENT);
    dl_state_free(nullptr);
}

TEST(CApi, StateFromFile) {
    const auto path = std::filesystem::temp_directory_path() / "discord_lab_capi_state.json";
    std::ofstream(path) << R"({"kind":"w"})";
    dl_state* raw = nullptr;
    ASSERT_EQ(dl_state_from_file(path.c_str(), &raw), DL_OK) << dl_last_error();
    StatePtr s(raw);
    const auto j = compute(s.get(), request("global_discord"));
    EXPECT_NEAR(j["value"].get<double>(), std::log2(3.0), 1e-6);
    std::filesystem::remove(path);
}

TEST(CApi, ComputeQuantities) {
    const auto ghz = load(R"({"kind":"ghz","n":3})");
    EXPECT_NEAR(compute(ghz.get(), request("entropy"))["value"].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(compute(ghz.get(), request("entropy", "A"))["value"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(compute(ghz.get(), request("mutual_info"))["value"].get<double>(), 3.0, 1e-12);
    EXPECT_NEAR(compute(ghz.get(), request("mutual_info", "A:BC"))["value"].get<double>(), 2.0, 1e-12);
    EXPECT_NEAR(compute(ghz.get(), request("conditional_entropy", "A:BC"))["value"].get<double>(), -1.0, 1e-12);
    EXPECT_NEAR(compute(ghz.get(), request("global_discord"))["value"].get<double>(), 1.0, 1e-6);

    const auto w = load(R"({"kind":"w"})");
    const auto sym = compute(w.get(), request("symmetric_discord", "A:B"));
    EXPECT_EQ(sym["quantity"], "symmetric_discord");
    EXPECT_NEAR(sym["value"].get<double>(), 0.568318, 1e-6);
    EXPECT_EQ(sym["layout"]["labels"], json({"A", "B"}));

    const auto counter = load(R"({"kind":"counterexample"})");
    auto joint = request("block_discord", "A:BC");
    joint.joint = 1;
    EXPECT_LT(compute(counter.get(), joint)["value"].get<double>(), 1e-4);
    auto one = request("one_sided_discord", "A:B");
    EXPECT_NEAR(compute(counter.get(), one)["value"].get<double>(), 0.2017521, 1e-6);
    one.measured = "A";
    EXPECT_NEAR(compute(counter.get(), one)["value"].get<double>(), 0.0, 1e-7);
}

TEST(CApi, ComputeDPhi) {
    const auto ghz = load(R"({"kind":"ghz","n":3})");
    const double theta[] = {M_PI / 2, M_PI / 2, M_PI / 2};
    auto r = request("d_phi");
    r.theta = theta;
    r.num_angles = 3;
    EXPECT_NEAR(compute(ghz.get(), r)["value"].get<double>(), 2.0, 1e-12);
    r.theta = nullptr;
    compute(ghz.get(), r, DL_ERROR_ARGUMENT);
}

TEST(CApi, ComputeErrors) {
    const auto ghz = load(R"({"kind":"ghz","n":3})");
    compute(ghz.get(), request("negativity"), DL_ERROR_ARGUMENT);
    compute(ghz.get(), request("global_discord", "A:B"), DL_ERROR_ARGUMENT);
    compute(ghz.get(), request("symmetric_discord", "A:A"), DL_ERROR_ARGUMENT);
    compute(ghz.get(), request("symmetric_discord", "A:Q"), DL_ERROR_ARGUMENT);
    compute(ghz.get(), request("symmetric_discord"), DL_ERROR_ARGUMENT);
    compute(ghz.get(), request(nullptr), DL_ERROR_ARGUMENT);
    char* out = nullptr;
    EXPECT_EQ(dl_compute(ghz.get(), nullptr, nullptr, &out), DL_ERROR_ARGUMENT);
    const auto req = request("entropy");
    EXPECT_EQ(dl_compute(nullptr, &req, nullptr, &out), DL_ERROR_ARGUMENT);
    EXPECT_EQ(dl_compute(ghz.get(), &req, nullptr, nullptr), DL_ERROR_ARGUMENT);

    json spec = {{"kind", "explicit"}, {"dims", {3, 3}}, {"entries", json::array()}};
    for (int k = 0; k < 81; ++k) spec["entries"].push_back({k % 10 == 0 ? 1.0 / 9.0 : 0.0, 0.0});
    const auto qutrits = load(spec.dump().c_str());
    compute(qutrits.get(), request("symmetric_discord", "A:B"), DL_ERROR_LAYOUT);
}

TEST(CApi, ConfigIsHonoured) {
    const auto w = load(R"({"kind":"w"})");
    dl_optimizer_config c{};
    dl_optimizer_config_default(&c);
    c.starts = 3;
    const auto r = request("global_discord");
    char* out = nullptr;
    ASSERT_EQ(dl_compute(w.get(), &r, &c, &out), DL_OK) << dl_last_error();
    EXPECT_EQ(json::parse(take(out))["diagnostics"]["starts"], 3);
    c.tolerance = -1.0;
    EXPECT_EQ(dl_compute(w.get(), &r, &c, &out), DL_ERROR_ARGUMENT);
}

TEST(CApi, AuditResidualDecompose) {
    const auto counter = load(R"({"kind":"counterexample"})");
    char* out = nullptr;
    ASSERT_EQ(dl_audit(counter.get(), 1, nullptr, &out), DL_OK) << dl_last_error();
    const auto a = json::parse(take(out));
    EXPECT_TRUE(a["holds"].get<bool>());
    EXPECT_FALSE(a["single_site_discard"][0]["satisfied"].get<bool>());

    double residual = -1.0;
    ASSERT_EQ(dl_residual(counter.get(), 0, nullptr, &residual), DL_OK);
    EXPECT_EQ(residual, a["slack"].get<double>());
    EXPECT_EQ(dl_residual(counter.get(), 0, nullptr, nullptr), DL_ERROR_ARGUMENT);

    const auto ghz = load(R"({"kind":"ghz","n":3})");
    const double theta[] = {0.0, 0.0, 0.0};
    ASSERT_EQ(dl_decompose(ghz.get(), theta, nullptr, 3, &out), DL_OK) << dl_last_error();
    const auto d = json::parse(take(out));
    EXPECT_NEAR(d["terms"][1].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(dl_decompose(ghz.get(), theta, nullptr, 2, &out), DL_ERROR_ARGUMENT);

    const auto bell = load(R"({"kind":"ghz","n":2})");
    EXPECT_EQ(dl_audit(bell.get(), 0, nullptr, &out), DL_ERROR_ARGUMENT);
}

TEST(CApi, Sweep) {
    dl_sweep* raw = nullptr;
    ASSERT_EQ(dl_sweep_run(0.5, nullptr, 2, &raw), DL_OK) << dl_last_error();
    SweepPtr sweep(raw);
    ASSERT_EQ(dl_sweep_size(sweep.get()), 3u);
    dl_sweep_row row{};
    ASSERT_EQ(dl_sweep_row_at(sweep.get(), 2, &row), DL_OK);
    EXPECT_EQ(row.lambda, 1.0);
    EXPECT_NEAR(row.gqd, std::log2(3.0), 1e-6);
    EXPECT_EQ(row.holds, 1);
    EXPECT_EQ(dl_sweep_row_at(sweep.get(), 3, &row), DL_ERROR_ARGUMENT);

    char* csv = nullptr;
    ASSERT_EQ(dl_sweep_csv(sweep.get(), &csv), DL_OK);
    const std::string text = take(csv);
    EXPECT_EQ(text.rfind("lambda,gqd,", 0), 0u);

    const auto path = std::filesystem::temp_directory_path() / "discord_lab_capi_sweep.csv";
    ASSERT_EQ(dl_sweep_write_csv(sweep.get(), path.c_str()), DL_OK);
    std::stringstream written;
    written << std::ifstream(path).rdbuf();
    EXPECT_EQ(written.str(), text);
    std::filesystem::remove(path);
    EXPECT_EQ(dl_sweep_write_csv(sweep.get(), "/nonexistent/dir/out.csv"), DL_ERROR_IO);

    EXPECT_EQ(dl_sweep_run(0.0, nullptr, 0, &raw), DL_ERROR_ARGUMENT);
    EXPECT_EQ(dl_sweep_size(nullptr), 0u);
    dl_sweep_free(nullptr);
}

}  // namespace
