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

#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "discord_lab/qmat.hpp"
#include "discord_lab/states.hpp"

namespace discord {

/// Rank-1 projective qubit measurement along the Bloch direction (theta, phi):
/// |v> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, and its orthogonal complement.
struct QubitBasis {
    double theta = 0.0;
    double phi = 0.0;

    /// Same projector pair with theta in [0, pi/2], phi in [0, 2pi), phi = 0 at the poles
    /// and phi in [0, pi) on the equator.
    QubitBasis canonical() const;
    /// Columns |v>, |v_perp>.
    ComplexMatrix unitary() const;

    bool operator==(const QubitBasis&) const = default;
};

/// Joint rank-1 basis over a composite block: the columns of exp(iH(generator)).
struct BlockBasis {
    std::size_t dim = 0;
    std::vector<double> generator;  // dim^2 reals

    ComplexMatrix unitary() const;
};

using LocalBasis = std::variant<QubitBasis, BlockBasis>;

struct SiteMeasurement {
    std::vector<std::size_t> sites;  // one site for QubitBasis; any ordered set for BlockBasis
    LocalBasis basis;
};

/// Local projective measurement on some or all subsystems; unmeasured sites are left alone.
class MeasurementScheme {
   public:
    MeasurementScheme() = default;

    /// One QubitBasis per site, sites 0..n-1.
    static MeasurementScheme product(std::span<const QubitBasis> bases);

    MeasurementScheme& add(std::size_t site, QubitBasis basis);
    MeasurementScheme& add(std::vector<std::size_t> sites, BlockBasis basis);

    const std::vector<SiteMeasurement>& parts() const noexcept { return parts_; }
    /// Sorted list of all measured sites.
    std::vector<std::size_t> measured_sites() const;

    /// Throws LayoutError if a site is out of range, measured twice, or its
    /// basis dimension disagrees with the layout.
    void check(const SubsystemLayout& layout) const;

    /// Unitary on the full space whose columns are the product measurement
    /// basis (identity on unmeasured sites).
    ComplexMatrix basis_unitary(const SubsystemLayout& layout) const;

    /// Restriction to the sites in `keep`, re-indexed to positions within `keep`
    /// (which must be sorted). Block parts must lie entirely inside or outside `keep`.
    MeasurementScheme restricted(std::span<const std::size_t> keep) const;

   private:
    std::vector<SiteMeasurement> parts_;
};

std::pair<ComplexMatrix, ComplexMatrix> qubit_projectors(const QubitBasis& basis);

/// The `dim` projectors onto the columns of the basis unitary.
std::vector<ComplexMatrix> block_projectors(const BlockBasis& basis, std::size_t dim);

/// Non-selective measurement sum_k Pi_k rho Pi_k over all outcome strings.
DensityMatrix apply_channel(const DensityMatrix& rho, const MeasurementScheme& scheme);

/// Dephases a single-subsystem state in the given basis.
DensityMatrix marginal_channel(const DensityMatrix& rho, const LocalBasis& basis);

/// diag(U^dagger rho U): outcome distribution of a complete rank-1 measurement.
std::vector<double> outcome_probabilities(const ComplexMatrix& rho, const ComplexMatrix& basis_unitary);

}  // namespace discord
