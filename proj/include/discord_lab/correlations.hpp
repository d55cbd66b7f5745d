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

// Entropic correlation measures, all in bits.
//
// Every discord here is a minimum over local rank-1 projective measurements of
// the loss of mutual information
//
//   D_Phi = sum_p [S(rho_p) - S(Phi(rho_p))] - [S(rho) - S(Phi(rho))]
//
// where p runs over the "parties" of the cut: single subsystems for the
// global discord, the two blocks for a bipartite (block) discord. For a
// complete rank-1 measurement S(Phi(.)) is the Shannon entropy of the outcome
// distribution, which is what the minimizers evaluate.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discord_lab/measure.hpp"
#include "discord_lab/optimize.hpp"
#include "discord_lab/states.hpp"

namespace discord {

/// Eigenvalues at or below this count as zero in -sum l log2 l.
inline constexpr double kEntropyCutoff = 1e-12;
/// Discord values in [-kDiscordClamp, 0) are reported as 0.
inline constexpr double kDiscordClamp = 1e-7;

enum class Quantity {
    entropy,
    mutual_info,
    conditional_entropy,
    d_phi,
    one_sided_discord,
    symmetric_discord,
    block_discord,
    global_discord,
};

std::string_view to_string(Quantity q);
/// ArgumentError for unknown names.
Quantity parse_quantity(std::string_view name);

enum class MeasurementMode { product_local, joint };

struct OptimizerDiagnostics {
    std::size_t starts = 0;
    std::size_t evaluations = 0;
    double runner_up_gap = 0.0;
    bool converged = false;
};

struct CorrelationReport {
    Quantity quantity = Quantity::entropy;
    double value = 0.0;
    /// Present iff the quantity is a minimization. Site indices refer to `layout`.
    std::optional<MeasurementScheme> argmin;
    std::optional<OptimizerDiagnostics> diagnostics;
    /// Layout of the (possibly reduced) state the scheme acts on.
    SubsystemLayout layout;
};

double shannon_entropy(std::span<const double> probabilities);
/// -Tr m log2 m for a Hermitian matrix with non-negative spectrum.
double matrix_entropy(const ComplexMatrix& m);

double entropy(const DensityMatrix& rho);
/// sum_k S(rho_k) - S(rho) over single-subsystem marginals; N >= 2.
double mutual_information(const DensityMatrix& rho);
/// S(target u given) - S(given). Sets must be disjoint and non-empty.
double conditional_entropy(const DensityMatrix& rho, std::span<const std::size_t> target,
                           std::span<const std::size_t> given);

/// Multipartite loss of correlation for a scheme that measures every subsystem
/// with a complete rank-1 basis.
double loss_of_correlation(const DensityMatrix& rho, const MeasurementScheme& scheme);

/// Loss of correlation with the given parties (a partition of all subsystems)
/// as the subsystems of the mutual information. Outcome-distribution route.
double party_loss(const DensityMatrix& rho, std::span<const std::vector<std::size_t>> parties,
                  const MeasurementScheme& scheme);

/// Same quantity evaluated literally: apply_channel on the state and on each
/// party marginal, then eigenvalue entropies.
double channel_party_loss(const DensityMatrix& rho, std::span<const std::vector<std::size_t>> parties,
                          const MeasurementScheme& scheme);

/// D(unmeasured | measured): minimum over bases on `measured` of I(rho) - I(Phi_measured(rho)).
/// Subsystems outside both sets are traced out first.
CorrelationReport one_sided_discord(const DensityMatrix& rho, std::span<const std::size_t> unmeasured,
                                    std::span<const std::size_t> measured, MeasurementMode mode,
                                    const OptimizerConfig& config);

/// D(left : right) with both blocks measured. Subsystems outside both are traced
/// out first. Product-local mode gives every qubit its own (theta, phi); joint
/// mode gives each block one BlockBasis.
CorrelationReport block_discord(const DensityMatrix& rho, std::span<const std::size_t> left,
                                std::span<const std::size_t> right, MeasurementMode mode,
                                const OptimizerConfig& config);

/// Symmetric discord across a cut; identical to block_discord, reported as such.
CorrelationReport symmetric_discord(const DensityMatrix& rho, std::span<const std::size_t> left,
                                    std::span<const std::size_t> right, MeasurementMode mode,
                                    const OptimizerConfig& config);

/// Minimum of loss_of_correlation over all product-local qubit schemes.
CorrelationReport global_discord(const DensityMatrix& rho, const OptimizerConfig& config);

/// Parameter layout shared by the minimizers: (theta, phi) per qubit, in site order.
std::vector<Axis> qubit_angle_axes(std::size_t qubits, const OptimizerConfig& config);
MeasurementScheme scheme_from_angles(std::span<const double> angles, std::span<const std::size_t> sites);

}  // namespace discord
