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


#include "discord_lab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>
#include <variant>

#include "discord_lab/errors.hpp"
#include "discord_lab/monogamy.hpp"

namespace discord {

std::vector<double> sweep_grid(double step) {
    if (!(step > 0.0 && step <= 0.5)) throw ArgumentError("lambda step must lie in (0, 0.5]");
    std::vector<double> grid;
    for (std::size_t i = 0;; ++i) {
        const double lambda = static_cast<double>(i) * step;
        if (lambda >= 1.0 - 1e-9) break;
        grid.push_back(lambda);
    }
    grid.push_back(1.0);
    return grid;
}

SweepRow sweep_row(double lambda, const OptimizerConfig& config) {
    const auto rho = w_ghz_mixture(lambda);
    const std::size_t a[] = {0};
    const std::size_t b[] = {1};
    const std::size_t c[] = {2};
    const auto mode = MeasurementMode::product_local;

    SweepRow row;
    row.lambda = lambda;
    const auto g = global_discord(rho, config);
    row.gqd = g.value;
    const auto basis = std::get<QubitBasis>(g.argmin->parts().front().basis).canonical();
    row.argmin_theta_gqd = basis.theta;
    row.argmin_phi_gqd = basis.phi;
    row.d_ab = block_discord(rho, a, b, mode, config).value;
    row.d_ac = block_discord(rho, a, c, mode, config).value;
    row.d_bc = block_discord(rho, b, c, mode, config).value;
    row.pairwise_sum = row.d_ab + row.d_ac;
    row.residual = row.gqd - row.pairwise_sum;
    row.holds = row.residual >= -kMonogamyTolerance;
    return row;
}

std::vector<SweepRow> run_sweep(double step, const OptimizerConfig& config, unsigned threads) {
    config.check();
    const auto grid = sweep_grid(step);
    std::vector<SweepRow> rows(grid.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                rows[i] = sweep_row(grid[i], config);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

namespace {

// Values in millionths, so derived columns are exact integer arithmetic.
long long micros(double x) { return std::llround(x * 1e6); }

void put_fixed6(std::ostream& out, long long m) {
    char buf[32];
    const unsigned long long mag = m < 0 ? static_cast<unsigned long long>(-m) : static_cast<unsigned long long>(m);
    std::snprintf(buf, sizeof buf, "%s%llu.%06llu", m < 0 ? "-" : "", mag / 1000000, mag % 1000000);
    out << buf;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "lambda,gqd,d_ab,d_ac,d_bc,pairwise_sum,residual,holds,argmin_theta_gqd,argmin_phi_gqd\n";
    for (const auto& r : rows) {
        const long long gqd = micros(r.gqd);
        const long long pair = micros(r.d_ab) + micros(r.d_ac);
        const long long fields[] = {micros(r.lambda), gqd, micros(r.d_ab), micros(r.d_ac), micros(r.d_bc), pair, gqd - pair};
        for (auto f : fields) {
            put_fixed6(out, f);
            out << ',';
        }
        out << (r.holds ? "true" : "false") << ',';
        put_fixed6(out, micros(r.argmin_theta_gqd));
        out << ',';
        put_fixed6(out, micros(r.argmin_phi_gqd));
        out << '\n';
    }
}

}  // namespace discord
