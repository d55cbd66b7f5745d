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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "discord_lab/qmat.hpp"

namespace discord {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

struct ValidationReport {
    double hermiticity_violation = 0.0;
    double trace_deviation = 0.0;
    double min_eigenvalue = 0.0;  // only meaningful when the matrix is Hermitian

    bool hermitian() const { return hermiticity_violation <= kHermitianTolerance; }
    bool unit_trace() const { return trace_deviation <= kTraceTolerance; }
    bool positive() const { return hermitian() && min_eigenvalue >= -kPsdTolerance; }
    bool passed() const { return hermitian() && unit_trace() && positive(); }

    /// Human-readable list of the failed invariants and their magnitudes ("ok" if none).
    std::string describe() const;
};

ValidationReport validate(const ComplexMatrix& m);

/// Hermitian, unit-trace, positive semidefinite matrix with its subsystem layout.
/// Construction validates; every instance satisfies the invariants.
class DensityMatrix {
   public:
    /// Throws LayoutError on a size mismatch and ValidationError if an invariant fails.
    DensityMatrix(ComplexMatrix matrix, SubsystemLayout layout);

    static DensityMatrix pure(std::span<const Complex> ket, SubsystemLayout layout);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    const SubsystemLayout& layout() const noexcept { return layout_; }
    std::size_t num_subsystems() const noexcept { return layout_.size(); }
    std::size_t dimension() const noexcept { return matrix_.rows(); }

    DensityMatrix marginal(std::span<const std::size_t> keep) const;
    DensityMatrix permuted(std::span<const std::size_t> order) const;
    /// U rho U^dagger for a unitary on the full space.
    DensityMatrix conjugated(const ComplexMatrix& unitary) const;

   private:
    struct Trusted {};
    DensityMatrix(Trusted, ComplexMatrix matrix, SubsystemLayout layout)
        : matrix_(std::move(matrix)), layout_(std::move(layout)) {}

    ComplexMatrix matrix_;
    SubsystemLayout layout_;
};

ValidationReport validate(const DensityMatrix& rho);

/// (|0...0> - |1...1>)/sqrt(2), 2 <= n <= 6.
DensityMatrix ghz(std::size_t n);
/// (|001> + |010> + |100>)/sqrt(3).
DensityMatrix w3();
/// lambda |W><W| + (1 - lambda) |GHZ><GHZ| on three qubits.
DensityMatrix w_ghz_mixture(double lambda);
/// sqrt(p1)|0...0> + sqrt(1 - p1)|1...1>.
DensityMatrix schmidt_state(double p1, std::size_t n);
/// (|000><000| + |1+1><1+1|)/2 with |+> on the middle qubit.
DensityMatrix counterexample_state();

/// Convex combination; all parts must share a layout.
DensityMatrix mixture(std::span<const double> weights, std::span<const DensityMatrix> parts);

enum class StateKind { ghz, w, schmidt, mixture, explicit_matrix, counterexample };

struct StateSpec {
    StateKind kind = StateKind::ghz;
    std::optional<std::size_t> n;
    std::optional<double> lambda;
    std::optional<double> p1;
    std::vector<double> weights;
    std::vector<StateSpec> parts;
    std::vector<Complex> entries;
    std::vector<std::size_t> dims;
};

DensityMatrix from_spec(const StateSpec& spec);

/// Parses the JSON state-spec document:
/// {"kind": "ghz|w|schmidt|mixture|explicit|counterexample", "n": int, "lambda": num,
///  "p1": num, "weights": [num], "parts": [spec], "entries": [[re, im]], "dims": [int]}
/// A "mixture" with "lambda" and no parts is the W/GHZ mixture.
StateSpec parse_state_spec(std::string_view json);

std::string_view to_string(StateKind kind);

}  // namespace discord
