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

#include "discord_lab/monogamy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "discord_lab/errors.hpp"

namespace discord {

double LossDecomposition::identity_residual() const {
    return std::abs(total - std::accumulate(terms.begin(), terms.end(), 0.0));
}

LossDecomposition decompose_loss(const DensityMatrix& rho, const MeasurementScheme& scheme) {
    const std::size_t n = rho.num_subsystems();
    if (n < 2) throw ArgumentError("decomposition needs at least two subsystems");
    std::vector<std::size_t> everything(n);
    std::iota(everything.begin(), everything.end(), std::size_t{0});
    if (scheme.measured_sites() != everything) throw ArgumentError("scheme must measure every subsystem");

    std::vector<std::vector<std::size_t>> singles;
    for (std::size_t k = 0; k < n; ++k) singles.push_back({k});

    LossDecomposition out;
    out.total = channel_party_loss(rho, singles, scheme);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<std::size_t> keep(k + 1);
        std::iota(keep.begin(), keep.end(), std::size_t{0});
        const auto reduced = rho.marginal(keep);
        std::vector<std::size_t> head(k);
        std::iota(head.begin(), head.end(), std::size_t{0});
        const std::vector<std::vector<std::size_t>> parties{head, {k}};
        out.terms.push_back(channel_party_loss(reduced, parties, scheme.restricted(keep)));
    }
    return out;
}

namespace {

DiscordTerm run_term(const DensityMatrix& rho, std::vector<std::size_t> left, std::vector<std::size_t> right,
                     MeasurementMode mode, const OptimizerConfig& config) {
    const auto report = block_discord(rho, left, right, mode, config);
    return {std::move(left), std::move(right), mode, report.value, report.diagnostics->converged};
}

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> r;
    for (std::size_t k = from; k < to; ++k) r.push_back(k);
    return r;
}

}  // namespace

MonogamyAudit audit(const DensityMatrix& rho, const OptimizerConfig& config, bool joint) {
    const std::size_t n = rho.num_subsystems();
    if (n < 3 || n > 4) throw ArgumentError("monogamy audit supports 3 or 4 subsystems, got " + std::to_string(n));

    MonogamyAudit a;
    a.labels = rho.layout().labels();
    const auto g = global_discord(rho, config);
    a.gqd = g.value;
    a.gqd_converged = g.diagnostics->converged;

    for (std::size_t k = 1; k < n; ++k) {
        a.pairwise.push_back(run_term(rho, {0}, {k}, MeasurementMode::product_local, config));
        // k = 1 is the pairwise term itself.
        a.block_terms.push_back(k == 1 ? a.pairwise.back()
                                       : run_term(rho, range(0, k), {k}, MeasurementMode::product_local, config));
        if (joint) a.joint_block_terms.push_back(run_term(rho, range(0, k), {k}, MeasurementMode::joint, config));
    }
    for (std::size_t k = 2; k < n; ++k) {
        const double pair = a.pairwise[k - 1].value;
        a.discard_condition.push_back(a.block_terms[k - 1].value >= pair - kMonogamyTolerance);
        if (joint) a.joint_discard_condition.push_back(a.joint_block_terms[k - 1].value >= pair - kMonogamyTolerance);
    }

    a.single_site = run_term(rho, {0}, range(1, n), MeasurementMode::product_local, config);
    if (joint) a.joint_single_site = run_term(rho, {0}, range(1, n), MeasurementMode::joint, config);
    for (const auto& p : a.pairwise) {
        const double whole = joint ? std::min(a.single_site.value, a.joint_single_site->value) : a.single_site.value;
        a.single_site_discard.push_back(whole >= p.value - kMonogamyTolerance);
    }

    for (const auto& b : a.block_terms) a.block_sum += b.value;
    a.slack = a.gqd;
    for (const auto& p : a.pairwise) a.slack -= p.value;
    a.holds = a.slack >= -kMonogamyTolerance;
    if (n == 3) a.residual = a.slack;
    return a;
}

double residual(const DensityMatrix& rho, const OptimizerConfig& config, bool permutation_min) {
    if (rho.num_subsystems() != 3) throw ArgumentError("residual discord is defined for three subsystems");
    const double gqd = global_discord(rho, config).value;

    std::map<std::pair<std::size_t, std::size_t>, double> pair;
    auto pairwise = [&](std::size_t a, std::size_t b) {
        const auto key = std::minmax(a, b);
        auto it = pair.find(key);
        if (it == pair.end()) {
            const std::size_t l[] = {key.first};
            const std::size_t r[] = {key.second};
            it = pair.emplace(key, block_discord(rho, l, r, MeasurementMode::product_local, config).value).first;
        }
        return it->second;
    };

    std::array<std::size_t, 3> order{0, 1, 2};
    double best = std::numeric_limits<double>::infinity();
    do {
        double value = gqd;
        value -= pairwise(order[0], order[1]);
        value -= pairwise(order[0], order[2]);
        best = std::min(best, value);
        if (!permutation_min) break;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

DiscardCheck discard_monotonicity(const DensityMatrix& rho, std::span<const std::size_t> block,
                                  std::span<const std::size_t> other, std::span<const std::size_t> dropped,
                                  MeasurementMode mode, const OptimizerConfig& config) {
    std::vector<std::size_t> trimmed;
    for (auto s : block) {
        if (std::find(dropped.begin(), dropped.end(), s) == dropped.end()) trimmed.push_back(s);
    }
    for (auto d : dropped) {
        if (std::find(block.begin(), block.end(), d) == block.end()) {
            throw ArgumentError("dropped subsystem is not part of the block");
        }
    }
    if (trimmed.empty()) throw ArgumentError("cannot drop the whole block");
    DiscardCheck check;
    check.before = block_discord(rho, block, other, mode, config).value;
    check.after = block_discord(rho, trimmed, other, mode, config).value;
    check.monotone = check.before >= check.after - kMonogamyTolerance;
    return check;
}

}  // namespace discord
