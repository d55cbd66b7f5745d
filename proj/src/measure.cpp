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

#include "discord_lab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "discord_lab/errors.hpp"

namespace discord {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-12;

double wrap(double angle, double period) {
    double r = std::fmod(angle, period);
    if (r < 0.0) r += period;
    if (r >= period) r -= period;
    return r;
}

}  // namespace

QubitBasis QubitBasis::canonical() const {
    double t = wrap(theta, 2.0 * kPi);
    double p = phi;
    if (t > kPi) {
        // (theta, phi) and (2pi - theta, phi + pi) name the same Bloch vector.
        t = 2.0 * kPi - t;
        p += kPi;
    }
    if (t > 0.5 * kPi) {
        // Swapping the two outcomes flips the Bloch vector.
        t = kPi - t;
        p += kPi;
    }
    p = wrap(p, 2.0 * kPi);
    if (t < kAngleEps) {
        t = 0.0;
        p = 0.0;
    } else if (std::abs(t - 0.5 * kPi) < kAngleEps) {
        t = 0.5 * kPi;
        if (p >= kPi - kAngleEps) p -= kPi;
        if (p < kAngleEps) p = 0.0;
    }
    return {t, p};
}

ComplexMatrix QubitBasis::unitary() const {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex e = std::polar(1.0, phi);
    ComplexMatrix u(2, 2);
    u(0, 0) = c;
    u(1, 0) = e * s;
    u(0, 1) = s;
    u(1, 1) = -e * c;
    return u;
}

ComplexMatrix BlockBasis::unitary() const { return unitary_from_generator(generator, dim); }

MeasurementScheme MeasurementScheme::product(std::span<const QubitBasis> bases) {
    MeasurementScheme scheme;
    for (std::size_t k = 0; k < bases.size(); ++k) scheme.add(k, bases[k]);
    return scheme;
}

MeasurementScheme& MeasurementScheme::add(std::size_t site, QubitBasis basis) {
    parts_.push_back({{site}, basis});
    return *this;
}

MeasurementScheme& MeasurementScheme::add(std::vector<std::size_t> sites, BlockBasis basis) {
    if (sites.empty()) throw ArgumentError("block measurement needs at least one site");
    if (basis.generator.size() != basis.dim * basis.dim) {
        throw ArgumentError("block basis of dimension " + std::to_string(basis.dim) + " needs " +
                            std::to_string(basis.dim * basis.dim) + " generator parameters");
    }
    parts_.push_back({std::move(sites), std::move(basis)});
    return *this;
}

std::vector<std::size_t> MeasurementScheme::measured_sites() const {
    std::vector<std::size_t> sites;
    for (const auto& p : parts_) sites.insert(sites.end(), p.sites.begin(), p.sites.end());
    std::sort(sites.begin(), sites.end());
    return sites;
}

void MeasurementScheme::check(const SubsystemLayout& layout) const {
    std::vector<bool> seen(layout.size(), false);
    for (const auto& part : parts_) {
        std::size_t dim = 1;
        for (auto s : part.sites) {
            if (s >= layout.size()) {
                throw LayoutError("measurement on subsystem " + std::to_string(s) + " but layout has " +
                                  std::to_string(layout.size()));
            }
            if (seen[s]) throw LayoutError("subsystem " + layout.label(s) + " measured twice");
            seen[s] = true;
            dim *= layout.dim(s);
        }
        if (std::holds_alternative<QubitBasis>(part.basis)) {
            if (part.sites.size() != 1 || dim != 2) {
                throw LayoutError("qubit basis applied to a non-qubit subsystem");
            }
        } else if (std::get<BlockBasis>(part.basis).dim != dim) {
            throw LayoutError("block basis dimension " + std::to_string(std::get<BlockBasis>(part.basis).dim) +
                              " does not match block dimension " + std::to_string(dim));
        }
    }
}

namespace {

ComplexMatrix local_unitary(const LocalBasis& basis) {
    return std::visit([](const auto& b) { return b.unitary(); }, basis);
}

}  // namespace

ComplexMatrix MeasurementScheme::basis_unitary(const SubsystemLayout& layout) const {
    check(layout);
    // Fast path: one qubit basis per site in site order.
    bool simple = parts_.size() == layout.size();
    for (std::size_t k = 0; simple && k < parts_.size(); ++k) {
        simple = parts_[k].sites.front() == k && std::holds_alternative<QubitBasis>(parts_[k].basis);
    }
    if (simple) {
        ComplexMatrix u = std::get<QubitBasis>(parts_.front().basis).unitary();
        for (std::size_t k = 1; k < parts_.size(); ++k) u = kron(u, std::get<QubitBasis>(parts_[k].basis).unitary());
        return u;
    }
    ComplexMatrix u = ComplexMatrix::identity(layout.total_dimension());
    for (const auto& part : parts_) u = u * embed(local_unitary(part.basis), layout, part.sites);
    return u;
}

MeasurementScheme MeasurementScheme::restricted(std::span<const std::size_t> keep) const {
    auto position = [&](std::size_t site) -> std::ptrdiff_t {
        auto it = std::find(keep.begin(), keep.end(), site);
        return it == keep.end() ? -1 : it - keep.begin();
    };
    MeasurementScheme out;
    for (const auto& part : parts_) {
        std::vector<std::size_t> mapped;
        for (auto s : part.sites) {
            const auto pos = position(s);
            if (pos >= 0) mapped.push_back(static_cast<std::size_t>(pos));
        }
        if (mapped.empty()) continue;
        if (mapped.size() != part.sites.size()) {
            throw ArgumentError("cannot restrict a block measurement that straddles the kept set");
        }
        out.parts_.push_back({std::move(mapped), part.basis});
    }
    return out;
}

std::pair<ComplexMatrix, ComplexMatrix> qubit_projectors(const QubitBasis& basis) {
    const double c = std::cos(0.5 * basis.theta);
    const double s = std::sin(0.5 * basis.theta);
    const std::vector<Complex> v{c, std::polar(s, basis.phi)};
    auto p0 = ComplexMatrix::projector(v);
    auto p1 = ComplexMatrix::identity(2) - p0;
    return {std::move(p0), std::move(p1)};
}

std::vector<ComplexMatrix> block_projectors(const BlockBasis& basis, std::size_t dim) {
    if (basis.generator.size() != dim * dim) {
        throw ArgumentError("block basis needs " + std::to_string(dim * dim) + " generator parameters, got " +
                            std::to_string(basis.generator.size()));
    }
    const auto u = unitary_from_generator(basis.generator, dim);
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Complex> column(dim);
        for (std::size_t i = 0; i < dim; ++i) column[i] = u(i, j);
        projectors.push_back(ComplexMatrix::projector(column));
    }
    return projectors;
}

namespace {

std::vector<ComplexMatrix> projectors_of(const LocalBasis& basis) {
    if (const auto* q = std::get_if<QubitBasis>(&basis)) {
        auto [p0, p1] = qubit_projectors(*q);
        return {std::move(p0), std::move(p1)};
    }
    const auto& b = std::get<BlockBasis>(basis);
    return block_projectors(b, b.dim);
}

}  // namespace

DensityMatrix apply_channel(const DensityMatrix& rho, const MeasurementScheme& scheme) {
    scheme.check(rho.layout());
    // Channels on disjoint sites commute; applying them one part at a time
    // equals the sum over full outcome strings.
    ComplexMatrix m = rho.matrix();
    for (const auto& part : scheme.parts()) {
        ComplexMatrix next(m.rows(), m.cols());
        for (const auto& p : projectors_of(part.basis)) {
            const auto lifted = embed(p, rho.layout(), part.sites);
            next += lifted * m * lifted;
        }
        m = std::move(next);
    }
    return DensityMatrix(std::move(m), rho.layout());
}

DensityMatrix marginal_channel(const DensityMatrix& rho, const LocalBasis& basis) {
    if (rho.num_subsystems() != 1) throw LayoutError("marginal_channel expects a single-subsystem state");
    MeasurementScheme scheme;
    if (const auto* q = std::get_if<QubitBasis>(&basis)) {
        scheme.add(0, *q);
    } else {
        scheme.add({0}, std::get<BlockBasis>(basis));
    }
    return apply_channel(rho, scheme);
}

std::vector<double> outcome_probabilities(const ComplexMatrix& rho, const ComplexMatrix& basis_unitary) {
    const std::size_t d = rho.rows();
    if (basis_unitary.rows() != d || basis_unitary.cols() != d) {
        throw LayoutError("basis unitary does not match the state dimension");
    }
    std::vector<double> probs(d, 0.0);
    std::vector<Complex> rho_u(d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            Complex acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) acc += rho(i, j) * basis_unitary(j, k);
            rho_u[i] = acc;
        }
        Complex p = 0.0;
        for (std::size_t i = 0; i < d; ++i) p += std::conj(basis_unitary(i, k)) * rho_u[i];
        probs[k] = p.real();
    }
    return probs;
}

}  // namespace discord
