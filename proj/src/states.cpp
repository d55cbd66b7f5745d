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

#include "discord_lab/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "discord_lab/errors.hpp"

namespace discord {

std::string ValidationReport::describe() const {
    std::ostringstream out;
    bool any = false;
    auto sep = [&] {
        if (any) out << "; ";
        any = true;
    };
    if (!hermitian()) {
        sep();
        out << "not Hermitian: max |m - m^dagger| = " << hermiticity_violation;
    }
    if (!unit_trace()) {
        sep();
        out << "trace deviates from 1 by " << trace_deviation;
    }
    if (hermitian() && !positive()) {
        sep();
        out << "not positive semidefinite: PSD violation " << -min_eigenvalue;
    }
    return any ? out.str() : "ok";
}

ValidationReport validate(const ComplexMatrix& m) {
    if (!m.is_square()) throw LayoutError("density matrix must be square");
    ValidationReport report;
    report.hermiticity_violation = hermiticity_violation(m);
    const Complex tr = m.trace();
    report.trace_deviation = std::abs(tr - Complex{1.0, 0.0});
    if (report.hermitian()) {
        const auto eig = hermitian_eig(m);
        report.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
    }
    return report;
}

ValidationReport validate(const DensityMatrix& rho) { return validate(rho.matrix()); }

DensityMatrix::DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout)
    : matrix_(std::move(matrix)), layout_(std::move(layout)) {
    if (!matrix_.is_square() || matrix_.rows() != layout_.total_dimension()) {
        throw LayoutError("density matrix of size " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " does not match layout dimension " +
                          std::to_string(layout_.total_dimension()));
    }
    const auto report = validate(matrix_);
    if (!report.passed()) throw ValidationError("invalid density matrix: " + report.describe());
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> ket, SubsystemLayout layout) {
    return DensityMatrix(ComplexMatrix::projector(ket), std::move(layout));
}

DensityMatrix DensityMatrix::marginal(std::span<const std::size_t> keep) const {
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    auto reduced = partial_trace(matrix_, layout_, sorted);
    return DensityMatrix(Trusted{}, std::move(reduced), layout_.select(sorted));
}

DensityMatrix DensityMatrix::permuted(std::span<const std::size_t> order) const {
    auto m = permute_subsystems(matrix_, layout_, order);
    return DensityMatrix(Trusted{}, std::move(m), layout_.select(order));
}

DensityMatrix DensityMatrix::conjugated(const ComplexMatrix& unitary) const {
    return DensityMatrix(unitary * matrix_ * unitary.adjoint(), layout_);
}

namespace {

void require_qubit_count(std::size_t n, const char* what) {
    if (n < 2 || n > kMaxQubits) {
        throw CapacityError(std::string(what) + ": qubit count must be in [2, " + std::to_string(kMaxQubits) +
                            "], got " + std::to_string(n));
    }
}

std::vector<Complex> ghz_ket(std::size_t n) {
    std::vector<Complex> ket(std::size_t{1} << n);
    ket.front() = 1.0 / std::sqrt(2.0);
    ket.back() = -1.0 / std::sqrt(2.0);
    return ket;
}

std::vector<Complex> w_ket() {
    std::vector<Complex> ket(8);
    const double amp = 1.0 / std::sqrt(3.0);
    ket[0b001] = amp;
    ket[0b010] = amp;
    ket[0b100] = amp;
    return ket;
}

}  // namespace

DensityMatrix ghz(std::size_t n) {
    require_qubit_count(n, "ghz");
    return DensityMatrix::pure(ghz_ket(n), SubsystemLayout::qubits(n));
}

DensityMatrix w3() { return DensityMatrix::pure(w_ket(), SubsystemLayout::qubits(3)); }

DensityMatrix w_ghz_mixture(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw ArgumentError("mixture weight lambda must lie in [0, 1], got " + std::to_string(lambda));
    }
    const auto w = ComplexMatrix::projector(w_ket());
    const auto g = ComplexMatrix::projector(ghz_ket(3));
    return DensityMatrix(lambda * w + (1.0 - lambda) * g, SubsystemLayout::qubits(3));
}

DensityMatrix schmidt_state(double p1, std::size_t n) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) throw ArgumentError("Schmidt weight p1 must lie in [0, 1]");
    if (n < 2 || n > kMaxQubits) {
        throw ArgumentError("schmidt_state: qubit count must be in [2, " + std::to_string(kMaxQubits) + "]");
    }
    std::vector<Complex> ket(std::size_t{1} << n);
    ket.front() = std::sqrt(p1);
    ket.back() = std::sqrt(1.0 - p1);
    return DensityMatrix::pure(ket, SubsystemLayout::qubits(n));
}

DensityMatrix counterexample_state() {
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<Complex> zero(8);
    zero[0b000] = 1.0;
    // |1>|+>|1> = (|101> + |111>)/sqrt(2)
    std::vector<Complex> one_plus_one(8);
    one_plus_one[0b101] = h;
    one_plus_one[0b111] = h;
    const auto m = 0.5 * (ComplexMatrix::projector(zero) + ComplexMatrix::projector(one_plus_one));
    return DensityMatrix(m, SubsystemLayout::qubits(3));
}

DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> parts) {
    if (weights.size() != parts.size() || parts.empty()) {
        throw ArgumentError("mixture needs one weight per part and at least one part");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ArgumentError("mixture weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw ArgumentError("mixture weights sum to " + std::to_string(total) + ", not 1");
    }
    const auto& layout = parts.front().layout();
    ComplexMatrix sum(layout.total_dimension(), layout.total_dimension());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].layout().dims() != layout.dims()) throw LayoutError("mixture parts have different layouts");
        sum += weights[i] * parts[i].matrix();
    }
    return DensityMatrix(std::move(sum), layout);
}

DensityMatrix from_spec(const StateSpec& spec) {
    switch (spec.kind) {
        case StateKind::ghz:
            if (!spec.n) throw ArgumentError("ghz spec requires \"n\"");
            return ghz(*spec.n);
        case StateKind::w:
            if (spec.n && *spec.n != 3) throw ArgumentError("w state is defined for n = 3 only");
            return w3();
        case StateKind::schmidt:
            if (!spec.n || !spec.p1) throw ArgumentError("schmidt spec requires \"n\" and \"p1\"");
            return schmidt_state(*spec.p1, *spec.n);
        case StateKind::counterexample:
            return counterexample_state();
        case StateKind::mixture: {
            if (spec.parts.empty()) {
                if (!spec.lambda) throw ArgumentError("mixture spec requires \"lambda\" or \"weights\"/\"parts\"");
                return w_ghz_mixture(*spec.lambda);
            }
            std::vector<DensityMatrix> parts;
            parts.reserve(spec.parts.size());
            for (const auto& p : spec.parts) parts.push_back(from_spec(p));
            return mixture(spec.weights, parts);
        }
        case StateKind::explicit_matrix: {
            std::vector<std::size_t> dims = spec.dims;
            if (dims.empty()) {
                // Infer a qubit register from the entry count 4^n.
                std::size_t n = 0;
                while ((std::size_t{1} << (2 * n)) < spec.entries.size()) ++n;
                if ((std::size_t{1} << (2 * n)) != spec.entries.size() || n == 0) {
                    throw ArgumentError("explicit spec without \"dims\" needs 4^n entries");
                }
                dims.assign(n, 2);
            }
            SubsystemLayout layout(dims);
            const std::size_t d = layout.total_dimension();
            if (spec.entries.size() != d * d) {
                throw LayoutError("explicit spec has " + std::to_string(spec.entries.size()) +
                                  " entries, layout needs " + std::to_string(d * d));
            }
            return DensityMatrix(ComplexMatrix(d, d, spec.entries), std::move(layout));
        }
    }
    throw ArgumentError("unknown state kind");
}

std::string_view to_string(StateKind kind) {
    switch (kind) {
        case StateKind::ghz:
            return "ghz";
        case StateKind::w:
            return "w";
        case StateKind::schmidt:
            return "schmidt";
        case StateKind::mixture:
            return "mixture";
        case StateKind::explicit_matrix:
            return "explicit";
        case StateKind::counterexample:
            return "counterexample";
    }
    return "unknown";
}

}  // namespace discord
