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

// Monogamy of discord under the global discord:
//
//   D(A1 : ... : AN) >= sum_k D(A1 : A_{k+1})
//
// which follows from the exact telescoping of the loss of correlation over
// the cuts A1...Ak : A_{k+1} whenever each block discord does not grow
// when A2...Ak are discarded.

#pragma once

#include <optional>
#include <vector>

#include "discord_lab/correlations.hpp"

namespace discord {

/// Verdict tolerance (bits) for every inequality in this module.
inline constexpr double kMonogamyTolerance = 1e-4;

struct LossDecomposition {
    double total = 0.0;
    std::vector<double> terms;  // D_Phi(A1...Ak : A_{k+1}), k = 1..N-1

    double identity_residual() const;
};

/// Full loss of correlation and its N-1 telescoping cut terms under one scheme
/// (each term uses the scheme restricted to A1...A_{k+1}). Evaluated through
/// the measurement channel and eigenvalue entropies.
LossDecomposition decompose_loss(const DensityMatrix& rho, const MeasurementScheme& scheme);

struct DiscordTerm {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    MeasurementMode mode = MeasurementMode::product_local;
    double value = 0.0;
    bool converged = false;
};

struct MonogamyAudit {
    std::vector<std::string> labels;
    double gqd = 0.0;
    bool gqd_converged = false;
    std::vector<DiscordTerm> pairwise;     // D(A1 : A_{k+1}), k = 1..N-1
    std::vector<DiscordTerm> block_terms;  // D(A1...Ak : A_{k+1}), product-local
    std::vector<DiscordTerm> joint_block_terms;  // same cuts, joint mode (only when requested)
    /// For k = 2..N-1: D(A1...Ak : A_{k+1}) >= D(A1 : A_{k+1}) - tol, product-local block terms.
    std::vector<bool> discard_condition;
    std::vector<bool> joint_discard_condition;
    /// D(A1 : A2...AN) and whether it dominates each pairwise term.
    DiscordTerm single_site;
    std::optional<DiscordTerm> joint_single_site;
    std::vector<bool> single_site_discard;
    double block_sum = 0.0;  // sum of product-local block terms
    double slack = 0.0;      // gqd - sum of pairwise
    bool holds = false;      // slack >= -tol
    std::optional<double> residual;  // N = 3 only; equals slack
};

/// 3 <= N <= 4.
MonogamyAudit audit(const DensityMatrix& rho, const OptimizerConfig& config, bool joint = false);

/// D(A:B:C) - D(A:B) - D(A:C) for N = 3; with `permutation_min`, the minimum
/// over all six orderings of the subsystems.
double residual(const DensityMatrix& rho, const OptimizerConfig& config, bool permutation_min = false);

struct DiscardCheck {
    double before = 0.0;  // D(block : other)
    double after = 0.0;   // D(block \ dropped : other)
    bool monotone = false;
};

/// Whether discarding `dropped` from `block` can increase its discord with `other`.
DiscardCheck discard_monotonicity(const DensityMatrix& rho, std::span<const std::size_t> block,
                                  std::span<const std::size_t> other, std::span<const std::size_t> dropped,
                                  MeasurementMode mode, const OptimizerConfig& config);

}  // namespace discord
