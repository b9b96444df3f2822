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

#ifndef JAQAL_COMPLEX_MATRIX_HPP
#define JAQAL_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace jaqal {

using Complex = std::complex<double>;

/// Small dense square matrix, row-major. Gate unitaries are 2x2 or 4x4.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix kron(const ComplexMatrix &rhs) const;
    Complex trace() const;

    /// max |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix &rhs) const;
    /// ||U^dagger U - I||_max
    double unitarity_error() const;

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &m);

    std::string str() const;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// |tr(U^dagger V)| / d. Equals 1 iff U and V agree up to a global phase.
double phase_insensitive_overlap(const ComplexMatrix &u, const ComplexMatrix &v);

namespace pauli {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
}  // namespace pauli

}  // namespace jaqal

#endif
