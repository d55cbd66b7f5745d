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

#include "discord_lab/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "discord_lab/errors.hpp"

namespace discord {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw ArgumentError("matrix entry count " + std::to_string(data_.size()) + " != " + std::to_string(rows) +
                            "x" + std::to_string(cols));
    }
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ArgumentError("matrix has a non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> ket) {
    const std::size_t n = ket.size();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw LayoutError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw LayoutError("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : data_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw LayoutError("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw LayoutError("max_abs_diff: shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double frobenius_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const auto& z : m.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double hermiticity_violation(const ComplexMatrix& m) {
    if (!m.is_square()) throw LayoutError("hermiticity check on a non-square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

std::string default_label(std::size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('A' + k));
    return "A" + std::to_string(k + 1);
}

SubsystemLayout::SubsystemLayout(std::vector<std::size_t> dims, std::vector<std::string> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
    if (dims_.empty()) throw LayoutError("layout needs at least one subsystem");
    for (auto d : dims_) {
        if (d < 2) throw LayoutError("subsystem dimension must be >= 2, got " + std::to_string(d));
    }
    if (labels_.empty()) {
        for (std::size_t k = 0; k < dims_.size(); ++k) labels_.push_back(default_label(k));
    } else if (labels_.size() != dims_.size()) {
        throw LayoutError("layout has " + std::to_string(dims_.size()) + " dims but " +
                          std::to_string(labels_.size()) + " labels");
    }
    std::size_t total = 1;
    for (auto d : dims_) {
        total *= d;
        if (total > kMaxDimension) {
            throw CapacityError("layout dimension exceeds maximum " + std::to_string(kMaxDimension));
        }
    }
}

SubsystemLayout SubsystemLayout::qubits(std::size_t n) { return SubsystemLayout(std::vector<std::size_t>(n, 2)); }

std::size_t SubsystemLayout::total_dimension() const noexcept {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

bool SubsystemLayout::all_qubits() const noexcept {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 2; });
}

std::size_t SubsystemLayout::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw ArgumentError("no subsystem labelled '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

SubsystemLayout SubsystemLayout::select(std::span<const std::size_t> sites) const {
    std::vector<std::size_t> dims;
    std::vector<std::string> labels;
    for (auto s : sites) {
        if (s >= dims_.size()) throw ArgumentError("subsystem index " + std::to_string(s) + " out of range");
        dims.push_back(dims_[s]);
        labels.push_back(labels_[s]);
    }
    return SubsystemLayout(std::move(dims), std::move(labels));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_dimension) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (rows > max_dimension || cols > max_dimension) {
        throw CapacityError("kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds maximum dimension " + std::to_string(max_dimension));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

namespace {

void require_matches(const ComplexMatrix& m, const SubsystemLayout& layout) {
    if (!m.is_square() || m.rows() != layout.total_dimension()) {
        throw LayoutError("matrix of size " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          " does not match layout dimension " + std::to_string(layout.total_dimension()));
    }
}

// Mixed-radix digits of a full index, most significant subsystem first.
std::vector<std::size_t> digits_of(std::size_t index, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
    return digits;
}

// For every full index: its index within `sites` and within the complement.
struct Split {
    std::vector<std::size_t> inner;
    std::vector<std::size_t> outer;
};

Split split_indices(const SubsystemLayout& layout, std::span<const std::size_t> sites) {
    const auto& dims = layout.dims();
    std::vector<bool> in_set(dims.size(), false);
    for (auto s : sites) in_set[s] = true;
    const std::size_t total = layout.total_dimension();
    Split split{std::vector<std::size_t>(total), std::vector<std::size_t>(total)};
    for (std::size_t i = 0; i < total; ++i) {
        const auto digits = digits_of(i, dims);
        std::size_t inner = 0;
        for (auto s : sites) inner = inner * dims[s] + digits[s];
        std::size_t outer = 0;
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (!in_set[k]) outer = outer * dims[k] + digits[k];
        }
        split.inner[i] = inner;
        split.outer[i] = outer;
    }
    return split;
}

void require_distinct_sites(std::span<const std::size_t> sites, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (auto s : sites) {
        if (s >= n) throw ArgumentError("subsystem index " + std::to_string(s) + " out of range");
        if (seen[s]) throw ArgumentError("subsystem index " + std::to_string(s) + " repeated");
        seen[s] = true;
    }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const SubsystemLayout& layout,
                            std::span<const std::size_t> keep) {
    if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
    require_matches(rho, layout);
    require_distinct_sites(keep, layout.size());
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());

    const auto split = split_indices(layout, sorted);
    std::size_t kept_dim = 1;
    for (auto s : sorted) kept_dim *= layout.dim(s);
    ComplexMatrix out(kept_dim, kept_dim);
    const std::size_t total = layout.total_dimension();
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.outer[i] == split.outer[j]) out(split.inner[i], split.inner[j]) += rho(i, j);
        }
    }
    return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemLayout& layout,
                                 std::span<const std::size_t> order) {
    require_matches(m, layout);
    if (order.size() != layout.size()) throw ArgumentError("permutation length does not match layout");
    require_distinct_sites(order, layout.size());
    // Full index in the permuted ordering is exactly the "inner" index over all sites.
    const auto split = split_indices(layout, order);
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out(split.inner[i], split.inner[j]) = m(i, j);
    }
    return out;
}

std::vector<std::size_t> subsystem_index_map(const SubsystemLayout& layout, std::span<const std::size_t> sites) {
    require_distinct_sites(sites, layout.size());
    return split_indices(layout, sites).inner;
}

ComplexMatrix embed(const ComplexMatrix& op, const SubsystemLayout& layout, std::span<const std::size_t> sites) {
    require_distinct_sites(sites, layout.size());
    std::size_t sub_dim = 1;
    for (auto s : sites) sub_dim *= layout.dim(s);
    if (!op.is_square() || op.rows() != sub_dim) {
        throw LayoutError("embedded operator dimension " + std::to_string(op.rows()) +
                          " does not match its sites' dimension " + std::to_string(sub_dim));
    }
    const auto split = split_indices(layout, sites);
    const std::size_t total = layout.total_dimension();
    ComplexMatrix out(total, total);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.outer[i] == split.outer[j]) out(i, j) = op(split.inner[i], split.inner[j]);
        }
    }
    return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square()) throw LayoutError("hermitian_eig: matrix is not square");
    const double violation = hermiticity_violation(m);
    if (violation > kHermitianTolerance) throw SymmetryError(violation);

    const std::size_t n = m.rows();
    // Work on the Hermitian part; the input is already within tolerance of it.
    ComplexMatrix a = m;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = frobenius_norm(a);

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        }
        if (std::sqrt(off) <= 1e-15 * scale || off == 0.0) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex z = a(p, q);
                const double r = std::abs(z);
                if (r <= 1e-300) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex e = z / r;
                const Complex ec = std::conj(e);

                // a <- a G with G = [[c, s], [-s conj(e), c conj(e)]] on (p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * ec * akq;
                    a(k, q) = s * akp + c * ec * akq;
                }
                // a <- G^dagger a
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * e * aqk;
                    a(q, k) = s * apk + c * e * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * ec * vkq;
                    v(k, q) = s * vkp + c * ec * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenDecomposition result{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        result.values[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < n; ++k) result.vectors(k, j) = v(k, order[j]);
    }
    return result;
}

ComplexMatrix hermitian_from_generator(std::span<const double> params, std::size_t dim) {
    if (params.size() != dim * dim) {
        throw ArgumentError("generator needs " + std::to_string(dim * dim) + " parameters, got " +
                            std::to_string(params.size()));
    }
    ComplexMatrix h(dim, dim);
    std::size_t at = 0;
    for (std::size_t i = 0; i < dim; ++i) h(i, i) = params[at++];
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            const Complex z{params[at], params[at + 1]};
            at += 2;
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

ComplexMatrix unitary_from_generator(std::span<const double> params, std::size_t dim) {
    const auto eig = hermitian_eig(hermitian_from_generator(params, dim));
    ComplexMatrix u(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const Complex phase = std::polar(1.0, eig.values[k]);
        for (std::size_t i = 0; i < dim; ++i) {
            const Complex vik = eig.vectors(i, k) * phase;
            for (std::size_t j = 0; j < dim; ++j) u(i, j) += vik * std::conj(eig.vectors(j, k));
        }
    }
    return u;
}

}  // namespace discord
