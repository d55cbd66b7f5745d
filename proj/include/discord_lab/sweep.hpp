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


// The W-GHZ lambda sweep: global discord, pairwise discords and the residual
// of rho(lambda) = lambda |W><W| + (1 - lambda) |GHZ><GHZ| on a uniform grid.

#pragma once

#include <ostream>
#include <vector>

#include "discord_lab/optimize.hpp"

namespace discord {

struct SweepRow {
    double lambda = 0.0;
    double gqd = 0.0;
    double d_ab = 0.0;
    double d_ac = 0.0;
    double d_bc = 0.0;           // informational; not part of the bound
    double pairwise_sum = 0.0;   // d_ab + d_ac
    double residual = 0.0;       // gqd - pairwise_sum
    bool holds = false;          // residual >= -kMonogamyTolerance
    double argmin_theta_gqd = 0.0;  // qubit A of the global-discord argmin
    double argmin_phi_gqd = 0.0;
};

/// Grid 0, step, 2 step, ..., ending exactly at 1. ArgumentError unless step is in (0, 0.5].
std::vector<double> sweep_grid(double step);

SweepRow sweep_row(double lambda, const OptimizerConfig& config);

/// Rows in lambda order; rows are computed on up to `threads` workers
/// (0 picks the hardware concurrency). Results do not depend on `threads`.
std::vector<SweepRow> run_sweep(double step, const OptimizerConfig& config, unsigned threads = 0);

/// Header plus one line per row, 6-decimal fixed point. pairwise_sum and
/// residual are recomputed from the rounded gqd, d_ab, d_ac so every line
/// satisfies residual = gqd - pairwise_sum as printed.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace discord
