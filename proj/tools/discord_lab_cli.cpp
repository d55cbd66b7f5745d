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


// discord-lab: compute discord quantities, audit monogamy, verify the loss
// decomposition and run the W-GHZ sweep from the command line.
//
// Exit codes: 0 success, 2 input error, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "discord_lab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr long kHardQubitCap = 6;

struct Failure {
    int code;
    std::string message;
};

int exit_code(dl_status status) { return status == DL_ERROR_IO ? kExitIo : kExitInput; }

void check(dl_status status) {
    if (status != DL_OK) throw Failure{exit_code(status), std::string(dl_status_name(status)) + ": " + dl_last_error()};
}

struct StateDeleter {
    void operator()(dl_state* s) const { dl_state_free(s); }
};
struct SweepDeleter {
    void operator()(dl_sweep* s) const { dl_sweep_free(s); }
};
struct StringDeleter {
    void operator()(char* s) const { dl_string_free(s); }
};
using StatePtr = std::unique_ptr<dl_state, StateDeleter>;
using SweepPtr = std::unique_ptr<dl_sweep, SweepDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

long qubit_cap() {
    const char* env = std::getenv("DISCORD_LAB_MAX_QUBITS");
    if (env == nullptr || *env == '\0') return kHardQubitCap;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1) {
        throw Failure{kExitInput, std::string("DISCORD_LAB_MAX_QUBITS must be a positive integer, got '") + env + "'"};
    }
    return std::min(value, kHardQubitCap);
}

void check_cap(std::size_t subsystems) {
    const long cap = qubit_cap();
    if (static_cast<long>(subsystems) > cap) {
        throw Failure{kExitInput, "state has " + std::to_string(subsystems) + " subsystems; the limit is " +
                                      std::to_string(cap)};
    }
}

StatePtr load_state(const std::string& path) {
    dl_state* raw = nullptr;
    check(dl_state_from_file(path.c_str(), &raw));
    StatePtr state(raw);
    std::size_t n = 0;
    check(dl_state_num_subsystems(state.get(), &n));
    check_cap(n);
    return state;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        std::cout.flush();
        if (!std::cout) throw Failure{kExitIo, "cannot write to standard output"};
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{kExitIo, "cannot open " + out_path + " for writing"};
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    out.flush();
    if (!out) throw Failure{kExitIo, "cannot write " + out_path};
}

struct OptimizerFlags {
    std::optional<unsigned> grid;
    std::optional<unsigned> starts;
    std::optional<unsigned> simplex_iterations;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* cmd) {
        cmd->add_option("--grid", grid, "Seeding grid points per angle (theta and phi)");
        cmd->add_option("--starts", starts, "Number of grid seeds refined by the simplex search");
        cmd->add_option("--simplex-iters", simplex_iterations, "Simplex iteration cap per start");
        cmd->add_option("--tol", tolerance, "Convergence tolerance on the objective, in bits");
        cmd->add_option("--seed", seed, "Seed for pseudo-random start perturbations");
    }

    dl_optimizer_config config() const {
        dl_optimizer_config c;
        dl_optimizer_config_default(&c);
        if (grid) c.grid_theta = c.grid_phi = *grid;
        if (starts) c.starts = *starts;
        if (simplex_iterations) c.simplex_iterations = *simplex_iterations;
        if (tolerance) c.tolerance = *tolerance;
        if (seed) c.seed = *seed;
        return c;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum discord, global quantum discord and monogamy audits for multi-qubit states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dl_version()));

    OptimizerFlags opt;
    std::string spec_path;
    std::string out_path;

    auto* compute = app.add_subcommand("compute", "Evaluate one quantity on a state");
    std::string quantity;
    std::string cut;
    std::string measured;
    bool joint = false;
    std::vector<double> theta;
    std::vector<double> phi;
    compute->add_option("spec", spec_path, "State-spec JSON file")->required();
    compute->add_option("--quantity", quantity,
                        "entropy, mutual_info, conditional_entropy, d_phi, one_sided_discord, "
                        "symmetric_discord, block_discord or global_discord")
        ->required();
    compute->add_option("--cut", cut, "Subsystem set (AB) or bipartition (A:BC)");
    compute->add_option("--measured", measured, "Measured side for one_sided_discord");
    compute->add_flag("--joint", joint, "Measure each block with one joint basis");
    compute->add_option("--theta", theta, "Polar angles per subsystem for d_phi")->delimiter(',');
    compute->add_option("--phi", phi, "Azimuthal angles per subsystem for d_phi")->delimiter(',');
    compute->add_option("--out", out_path, "Write the report here instead of standard output");
    opt.attach(compute);

    auto* sweep = app.add_subcommand("sweep", "W-GHZ mixture sweep over lambda, as CSV");
    double step = 0.05;
    unsigned threads = 0;
    sweep->add_option("--lambda-step", step, "Grid step in (0, 0.5]")->capture_default_str();
    sweep->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
    sweep->add_option("--out", out_path, "CSV path (standard output if omitted)");
    opt.attach(sweep);

    auto* audit = app.add_subcommand("audit", "Monogamy audit of a 3- or 4-subsystem state");
    bool audit_joint = false;
    audit->add_option("spec", spec_path, "State-spec JSON file")->required();
    audit->add_flag("--joint", audit_joint, "Also compute block terms with joint block measurements");
    audit->add_option("--out", out_path, "Write the audit here instead of standard output");
    opt.attach(audit);

    auto* decompose = app.add_subcommand("decompose", "Loss of correlation and its cut terms for a product scheme");
    decompose->add_option("spec", spec_path, "State-spec JSON file")->required();
    decompose->add_option("--theta", theta, "Polar angle per subsystem")->delimiter(',')->required();
    decompose->add_option("--phi", phi, "Azimuthal angle per subsystem (default 0)")->delimiter(',');
    decompose->add_option("--out", out_path, "Write the result here instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        const auto config = opt.config();
        if (*compute) {
            auto state = load_state(spec_path);
            if (!phi.empty() && phi.size() != theta.size()) {
                throw Failure{kExitInput, "--phi needs one angle per --theta angle"};
            }
            dl_request request{};
            request.quantity = quantity.c_str();
            request.cut = cut.empty() ? nullptr : cut.c_str();
            request.measured = measured.empty() ? nullptr : measured.c_str();
            request.joint = joint ? 1 : 0;
            request.theta = theta.empty() ? nullptr : theta.data();
            request.phi = phi.empty() ? nullptr : phi.data();
            request.num_angles = theta.size();
            char* raw = nullptr;
            check(dl_compute(state.get(), &request, &config, &raw));
            emit(StringPtr(raw).get(), out_path);
        } else if (*sweep) {
            check_cap(3);
            dl_sweep* raw = nullptr;
            check(dl_sweep_run(step, &config, threads, &raw));
            SweepPtr rows(raw);
            if (out_path.empty()) {
                char* csv = nullptr;
                check(dl_sweep_csv(rows.get(), &csv));
                emit(StringPtr(csv).get(), "");
            } else {
                check(dl_sweep_write_csv(rows.get(), out_path.c_str()));
            }
        } else if (*audit) {
            auto state = load_state(spec_path);
            char* raw = nullptr;
            check(dl_audit(state.get(), audit_joint ? 1 : 0, &config, &raw));
            emit(StringPtr(raw).get(), out_path);
        } else if (*decompose) {
            auto state = load_state(spec_path);
            if (!phi.empty() && phi.size() != theta.size()) {
                throw Failure{kExitInput, "--phi needs one angle per --theta angle"};
            }
            char* raw = nullptr;
            check(dl_decompose(state.get(), theta.data(), phi.empty() ? nullptr : phi.data(), theta.size(), &raw));
            emit(StringPtr(raw).get(), out_path);
        }
    } catch (const Failure& f) {
        std::cerr << "discord-lab: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "discord-lab: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
