/*
   Copyright 2026 The waring5 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WARING5_MATRIX_HPP
#define WARING5_MATRIX_HPP

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace waring5 {

/// Dense row-major matrix over Scalar. Values are immutable in spirit:
/// every operation below is a pure function of its inputs.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Scalar(Rational(0))) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const Scalar& operator()(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    Scalar& operator()(size_t r, size_t c) { return e_[r * cols_ + c]; }

    static Matrix identity(size_t n);
    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M·v
    bool operator==(const Matrix& o) const;

  private:
    size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Exact rank for matrices with a common exact tag (fraction-free Bareiss
/// elimination after integer row scaling for rationals, field elimination
/// for cyclotomics); thresholded pivoted elimination for BigComplex.
/// Throws MixedInexactExact when exact and inexact entries are mixed.
size_t mat_rank(const Matrix& M);

/// Basis of the right kernel {v : M v = 0}; exact entries for exact input.
std::vector<std::vector<Scalar>> mat_kernel(const Matrix& M);

/// One solution of M x = b, or nullopt when inconsistent. Underdetermined
/// systems are resolved by the documented deterministic pivot order
/// (leftmost pivot column, smallest bit-height entry, lowest row index);
/// free variables are set to zero.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& M, const std::vector<Scalar>& b);

/// Exact determinant (square, exact tags only).
Scalar mat_det(const Matrix& M);

/// Exact inverse; nullopt when singular.
std::optional<Matrix> mat_inverse(const Matrix& M);

Matrix matrix_from_rows(const std::vector<std::vector<Scalar>>& rows, size_t cols);
Matrix matrix_from_rational_rows(const std::vector<std::vector<Rational>>& rows, size_t cols);

}  // namespace waring5

#endif
