// Copyright 2026 The Jaqal Toolchain Authors
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

#include "jaqal/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jaqal {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != dim_ * dim_) throw std::invalid_argument("matrix data does not match dimension");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) throw std::invalid_argument("matrix must be square");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    }
    return m;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix &rhs) const {
    std::size_t d = dim_ * rhs.dim_;
    ComplexMatrix m(d);
    for (std::size_t r1 = 0; r1 < dim_; ++r1) {
        for (std::size_t c1 = 0; c1 < dim_; ++c1) {
            for (std::size_t r2 = 0; r2 < rhs.dim_; ++r2) {
                for (std::size_t c2 = 0; c2 < rhs.dim_; ++c2) {
                    m(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2) = (*this)(r1, c1) * rhs(r2, c2);
                }
            }
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    double worst = 0;
    for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
    return worst;
}

double ComplexMatrix::unitarity_error() const {
    return (adjoint() * (*this)).max_abs_diff(identity(dim_));
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    ComplexMatrix m(a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r) {
        for (std::size_t k = 0; k < a.dim_; ++k) {
            Complex x = a(r, k);
            for (std::size_t c = 0; c < a.dim_; ++c) m(r, c) += x * b(k, c);
        }
    }
    return m;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    ComplexMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) { return a + Complex(-1.0) * b; }

ComplexMatrix operator*(Complex s, const ComplexMatrix &m) {
    ComplexMatrix out = m;
    for (auto &x : out.data_) x *= s;
    return out;
}

std::string ComplexMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < dim_; ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < dim_; ++c) out << (c ? ", " : "") << (*this)(r, c);
        out << "]";
    }
    out << "]";
    return out.str();
}

double phase_insensitive_overlap(const ComplexMatrix &u, const ComplexMatrix &v) {
    return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.dim());
}

namespace pauli {
ComplexMatrix I() { return ComplexMatrix::identity(2); }
ComplexMatrix X() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix Y() { return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}}; }
ComplexMatrix Z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace jaqal
