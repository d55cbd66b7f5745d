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

// Deterministic multi-start minimization: a coarse grid scan picks seeds,
// a short simplex descent screens them, the `starts` best seeds that reach
// distinct basins are refined by a bounded Nelder-Mead simplex, and the best
// refinement wins. grid_oracle() is the exhaustive reference used by tests.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace discord {

struct OptimizerConfig {
    std::size_t grid_theta = 8;           // seeding points per polar angle
    std::size_t grid_phi = 8;             // seeding points per azimuthal angle
    std::size_t simplex_iterations = 400;  // per start, restarts included
    double tolerance = 1e-7;              // bits, spread of simplex values
    std::size_t starts = 10;
    std::uint64_t seed = 0;
    std::size_t grid_budget = 1u << 15;  // coarse scan is subsampled above this

    /// ArgumentError unless every count is positive and tolerance > 0.
    void check() const;
};

/// One search coordinate. Periodic axes exclude the upper endpoint from the
/// grid and wrap instead of clamping. `points == 0` disables scanning along
/// the axis (and so the whole coarse scan); seeds must then be supplied.
struct Axis {
    double lower = 0.0;
    double upper = 1.0;
    bool periodic = false;
    std::size_t points = 8;
};

using Objective = std::function<double(std::span<const double>)>;
/// Maps a parameter vector to its canonical representative; used for tie-breaks.
using Canonicalizer = std::function<std::vector<double>(std::span<const double>)>;

struct OptimizationResult {
    double best_value = 0.0;
    std::vector<double> best_params;
    bool converged = false;
    std::size_t evaluations = 0;
    std::size_t starts_used = 0;
    double runner_up_gap = 0.0;  // second-best refined value minus best; 0 with one start
};

OptimizationResult minimize(const Objective& objective, std::span<const Axis> axes, const OptimizerConfig& config,
                            std::span<const std::vector<double>> seeds = {},
                            const Canonicalizer& canonicalize = {});

/// Exhaustive evaluation on `resolution` points per axis. dimension <= 6 and
/// resolution^dimension <= 1e8, else CapacityError.
OptimizationResult grid_oracle(const Objective& objective, std::span<const Axis> axes, std::size_t resolution);

/// Grid node i of `points` along an axis.
double axis_node(const Axis& axis, std::size_t i, std::size_t points);

}  // namespace discord
