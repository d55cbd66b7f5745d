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

// Dense complex linear algebra sized for a handful of qubits.
//
// Tensor ordering: subsystem 0 is the most significant factor, so for three
// qubits the ket |i0 i1 i2> sits at row i0*4 + i1*2 + i2.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace discord {

using Complex = std::complex<double>;

/// Largest matrix dimension any operation will produce (six qubits).
inline constexpr std::size_t kMaxDimension = 64;
inline constexpr std::size_t kMaxQubits = 6;

/// Hermiticity tolerance on max |m - m^dagger| used by every Hermitian check.
inline constexpr double kHermitianTolerance = 1e-10;

class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; throws ArgumentError on length mismatch or non-finite values.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v|
    static ComplexMatrix projector(std::span<const Complex> ket);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    bool operator==(const ComplexMatrix&) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);
/// max |m - m^dagger| over entries.
double hermiticity_violation(const ComplexMatrix& m);

/// Ordered subsystem dimensions plus display labels (A, B, C, ... by default).
class SubsystemLayout {
   public:
    SubsystemLayout() = default;
    explicit SubsystemLayout(std::vector<std::size_t> dims, std::vector<std::string> labels = {});

    static SubsystemLayout qubits(std::size_t n);

    std::size_t size() const noexcept { return dims_.size(); }
    std::size_t dim(std::size_t k) const { return dims_.at(k); }
    std::size_t total_dimension() const noexcept;
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t k) const { return labels_.at(k); }
    bool all_qubits() const noexcept;

    /// Index of the subsystem with this label; ArgumentError if absent.
    std::size_t index_of(const std::string& label) const;

    /// Layout restricted to `sites` (in the order given).
    SubsystemLayout select(std::span<const std::size_t> sites) const;

    bool operator==(const SubsystemLayout&) const = default;

   private:
    std::vector<std::size_t> dims_;
    std::vector<std::string> labels_;
};

/// Default label for subsystem k: "A", "B", ...
std::string default_label(std::size_t k);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dimension = kMaxDimension);

/// Reduced matrix on `keep` (sorted into original relative order).
ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemLayout& layout,
                            std::span<const std::size_t> keep);

/// Reorders tensor factors: factor `order[i]` of the input becomes factor i of the output.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::span<const std::size_t> order);

/// For every full-space basis index, its index within the subspace of `sites`
/// (digits taken in the order of `sites`).
std::vector<std::size_t> subsystem_index_map(const SubsystemLayout& layout, std::span<const std::size_t> sites);

/// Lifts `op` acting on `sites` (in that order) to the full space, identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& op, const SubsystemLayout& layout, std::span<const std::size_t> sites);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j pairs with values[j]
};

/// Cyclic complex Jacobi. Throws SymmetryError when max |m - m^dagger| > 1e-10.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Hermitian H from d^2 reals: d diagonal entries, then (re, im) for each
/// upper-triangle entry in row-major order.
ComplexMatrix hermitian_from_generator(std::span<const double> params, std::size_t dim);

/// exp(iH) with H = hermitian_from_generator(params, dim).
ComplexMatrix unitary_from_generator(std::span<const double> params, std::size_t dim);

}  // namespace discord
