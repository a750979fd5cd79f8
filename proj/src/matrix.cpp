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

#include "waring5/matrix.hpp"

#include <algorithm>

namespace waring5 {

Matrix Matrix::identity(size_t n) {
    Matrix I(n, n);
    for (size_t i = 0; i < n; ++i) I(i, i) = Rational(1);
    return I;
}

Matrix Matrix::transposed() const {
    Matrix T(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
    return T;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(errc::invalid_argument, "matrix product shape mismatch");
    Matrix P(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (sc_is_zero(a)) continue;
            for (size_t c = 0; c < o.cols_; ++c) {
                if (sc_is_zero(o(k, c))) continue;
                P(r, c) = sc_add(P(r, c), sc_mul(a, o(k, c)));
            }
        }
    return P;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) fail(errc::invalid_argument, "matrix apply shape mismatch");
    std::vector<Scalar> out(rows_, Scalar(Rational(0)));
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (!sc_is_zero((*this)(r, c)) && !sc_is_zero(v[c]))
                out[r] = sc_add(out[r], sc_mul((*this)(r, c), v[c]));
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!sc_eq(e_[i], o.e_[i])) return false;
    return true;
}

Matrix matrix_from_rows(const std::vector<std::vector<Scalar>>& rows, size_t cols) {
    Matrix M(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(errc::invalid_argument, "row length mismatch");
        for (size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
    }
    return M;
}

Matrix matrix_from_rational_rows(const std::vector<std::vector<Rational>>& rows, size_t cols) {
    Matrix M(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(errc::invalid_argument, "row length mismatch");
        for (size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
    }
    return M;
}

// ---------------------------------------------------------------------------
// Exact engines
// ---------------------------------------------------------------------------

namespace {

enum class MatClass { rational, cyclotomic, numeric };

MatClass classify_entries(const Matrix& M, const std::vector<Scalar>* rhs) {
    bool exact = false, inexact = false, cyc = false;
    auto look = [&](const Scalar& s) {
        switch (tag_of(s)) {
            case ScalarTag::rational: exact = true; break;
            case ScalarTag::cyclotomic: exact = cyc = true; break;
            case ScalarTag::bigcomplex: inexact = true; break;
        }
    };
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c) look(M(r, c));
    if (rhs)
        for (const auto& s : *rhs) look(s);
    if (exact && inexact)
        fail(errc::mixed_inexact_exact, "matrix mixes exact and big-float entries");
    if (inexact) return MatClass::numeric;
    return cyc ? MatClass::cyclotomic : MatClass::rational;
}

struct RatOps {
    using T = Rational;
    static bool is_zero(const T& x) { return x.is_zero(); }
    static unsigned height(const T& x) { return bit_height(x); }
    static T from_scalar(const Scalar& s) { return std::get<Rational>(s); }
    static Scalar to_scalar(const T& x) { return x; }
};

struct CycOps {
    using T = Cyclotomic;
    static bool is_zero(const T& x) { return x.is_zero(); }
    static unsigned height(const T& x) { return x.height_bits(); }
    static T from_scalar(const Scalar& s) {
        return tag_of(s) == ScalarTag::rational ? Cyclotomic(std::get<Rational>(s))
                                                : std::get<Cyclotomic>(s);
    }
    static Scalar to_scalar(const T& x) { return x; }
};

inline Rational mul_(const Rational& a, const Rational& b) { return a * b; }
inline Rational sub_(const Rational& a, const Rational& b) { return a - b; }
inline Rational div_(const Rational& a, const Rational& b) { return a / b; }
inline Cyclotomic mul_(const Cyclotomic& a, const Cyclotomic& b) { return cyc_mul(a, b); }
inline Cyclotomic sub_(const Cyclotomic& a, const Cyclotomic& b) { return cyc_sub(a, b); }
inline Cyclotomic div_(const Cyclotomic& a, const Cyclotomic& b) { return cyc_div(a, b); }

/// Echelon form of [M | aug] with the deterministic pivot rule (leftmost
/// column, then smallest bit-height, then lowest row index). For rationals
/// the rows are pre-scaled to integers and elimination is fraction-free
/// Bareiss; cyclotomics use ordinary exact field elimination. The augmented
/// column (if present, the last one) is never eligible as a pivot.
template <typename Ops>
struct Echelon {
    using T = typename Ops::T;
    std::vector<std::vector<T>> rows;
    std::vector<size_t> pivot_cols;  // one per pivot row, increasing
    size_t data_cols = 0;            // columns eligible for pivoting

    size_t rank() const { return pivot_cols.size(); }
};

template <typename Ops>
Echelon<Ops> echelonize(std::vector<std::vector<typename Ops::T>> rows, size_t data_cols) {
    using T = typename Ops::T;
    constexpr bool bareiss = std::is_same_v<T, Rational>;

    if constexpr (bareiss) {
        // Clear denominators rowwise so Bareiss divisions stay integral.
        for (auto& row : rows) {
            Int l(1);
            for (const auto& x : row)
                if (!x.is_zero()) l = lcm(l, denominator(x));
            if (l != 1) {
                Rational f(l);
                for (auto& x : row) x *= f;
            }
        }
    }

    Echelon<Ops> E;
    E.data_cols = data_cols;
    const size_t ncols = rows.empty() ? 0 : rows.front().size();
    size_t rank = 0;
    T prev = Ops::from_scalar(Scalar(Rational(1)));

    for (size_t c = 0; c < data_cols && rank < rows.size(); ++c) {
        size_t best = rows.size();
        unsigned best_h = 0;
        for (size_t r = rank; r < rows.size(); ++r) {
            if (Ops::is_zero(rows[r][c])) continue;
            unsigned h = Ops::height(rows[r][c]);
            if (best == rows.size() || h < best_h) {
                best = r;
                best_h = h;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        const T pivot = rows[rank][c];
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (Ops::is_zero(rows[r][c])) {
                if constexpr (bareiss) {
                    // Bareiss still rescales untouched rows to keep the
                    // division exact at the next step.
                    for (size_t j = c; j < ncols; ++j)
                        if (!Ops::is_zero(rows[r][j]))
                            rows[r][j] = div_(mul_(pivot, rows[r][j]), prev);
                }
                continue;
            }
            const T factor = rows[r][c];
            if constexpr (bareiss) {
                for (size_t j = c; j < ncols; ++j)
                    rows[r][j] = div_(sub_(mul_(pivot, rows[r][j]), mul_(factor, rows[rank][j])),
                                      prev);
            } else {
                const T ratio = div_(factor, pivot);
                for (size_t j = c; j < ncols; ++j)
                    rows[r][j] = sub_(rows[r][j], mul_(ratio, rows[rank][j]));
            }
        }
        if constexpr (bareiss) prev = pivot;
        E.pivot_cols.push_back(c);
        ++rank;
    }
    E.rows = std::move(rows);
    return E;
}

/// Back-substitution against the echelon form: finds x with Ex = rhs on the
/// pivot rows, free variables fixed to the given values.
template <typename Ops>
std::vector<typename Ops::T> back_substitute(const Echelon<Ops>& E,
                                             const std::vector<typename Ops::T>& free_values,
                                             const std::vector<typename Ops::T>* rhs_rows) {
    using T = typename Ops::T;
    const T zero = Ops::from_scalar(Scalar(Rational(0)));
    std::vector<T> x(E.data_cols, zero);
    std::vector<char> is_pivot(E.data_cols, 0);
    for (size_t i = 0; i < E.pivot_cols.size(); ++i) is_pivot[E.pivot_cols[i]] = 1;
    size_t fi = 0;
    for (size_t c = 0; c < E.data_cols; ++c)
        if (!is_pivot[c]) x[c] = fi < free_values.size() ? free_values[fi++] : zero;
    for (size_t i = E.pivot_cols.size(); i-- > 0;) {
        const size_t pc = E.pivot_cols[i];
        T acc = rhs_rows ? (*rhs_rows)[i] : zero;
        for (size_t j = pc + 1; j < E.data_cols; ++j)
            if (!Ops::is_zero(E.rows[i][j]) && !Ops::is_zero(x[j]))
                acc = sub_(acc, mul_(E.rows[i][j], x[j]));
        x[pc] = div_(acc, E.rows[i][pc]);
    }
    return x;
}

template <typename Ops>
std::vector<std::vector<typename Ops::T>> typed_rows(const Matrix& M) {
    std::vector<std::vector<typename Ops::T>> rows(M.rows());
    for (size_t r = 0; r < M.rows(); ++r) {
        rows[r].reserve(M.cols());
        for (size_t c = 0; c < M.cols(); ++c) rows[r].push_back(Ops::from_scalar(M(r, c)));
    }
    return rows;
}

template <typename Ops>
size_t rank_impl(const Matrix& M) {
    // Eliminating on the smaller side is cheaper; rank is transpose-stable.
    if (M.rows() > M.cols() && M.rows() > 2 * M.cols())
        return echelonize<Ops>(typed_rows<Ops>(M.transposed()), M.rows()).rank();
    return echelonize<Ops>(typed_rows<Ops>(M), M.cols()).rank();
}

template <typename Ops>
std::vector<std::vector<Scalar>> kernel_impl(const Matrix& M) {
    using T = typename Ops::T;
    auto E = echelonize<Ops>(typed_rows<Ops>(M), M.cols());
    std::vector<char> is_pivot(M.cols(), 0);
    for (size_t pc : E.pivot_cols) is_pivot[pc] = 1;
    std::vector<std::vector<Scalar>> basis;
    const T zero = Ops::from_scalar(Scalar(Rational(0)));
    const T one = Ops::from_scalar(Scalar(Rational(1)));
    for (size_t fc = 0; fc < M.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        // Solve with this free variable = 1, the others = 0.
        std::vector<T> x(M.cols(), zero);
        x[fc] = one;
        for (size_t i = E.pivot_cols.size(); i-- > 0;) {
            const size_t pc = E.pivot_cols[i];
            T acc = zero;
            for (size_t j = pc + 1; j < M.cols(); ++j)
                if (!Ops::is_zero(E.rows[i][j]) && !Ops::is_zero(x[j]))
                    acc = sub_(acc, mul_(E.rows[i][j], x[j]));
            x[pc] = div_(acc, E.rows[i][pc]);
        }
        std::vector<Scalar> v(M.cols());
        for (size_t c = 0; c < M.cols(); ++c) v[c] = Ops::to_scalar(x[c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename Ops>
std::optional<std::vector<Scalar>> solve_impl(const Matrix& M, const std::vector<Scalar>& b) {
    using T = typename Ops::T;
    auto rows = typed_rows<Ops>(M);
    for (size_t r = 0; r < M.rows(); ++r) rows[r].push_back(Ops::from_scalar(b[r]));
    auto E = echelonize<Ops>(std::move(rows), M.cols());
    // Inconsistency: a zeroed data row with nonzero augmented entry.
    for (size_t r = E.rank(); r < E.rows.size(); ++r)
        if (!Ops::is_zero(E.rows[r].back())) return std::nullopt;
    std::vector<T> rhs(E.rank());
    for (size_t i = 0; i < E.rank(); ++i) rhs[i] = E.rows[i].back();
    auto x = back_substitute<Ops>(E, {}, &rhs);
    std::vector<Scalar> out(M.cols());
    for (size_t c = 0; c < M.cols(); ++c) out[c] = Ops::to_scalar(x[c]);
    return out;
}

// -- numeric engine ---------------------------------------------------------

struct NumRow {
    std::vector<BigComplex> e;
    BigFloat scale;  // 2-norm of the original row, for the zero threshold
};

BigFloat numeric_threshold() {
    BigFloat t = ldexp(BigFloat(1), -int(precision_bits() / 2));
    return t;
}

std::vector<NumRow> numeric_rows(const Matrix& M, const std::vector<Scalar>* b) {
    std::vector<NumRow> rows(M.rows());
    for (size_t r = 0; r < M.rows(); ++r) {
        rows[r].e.reserve(M.cols() + (b ? 1 : 0));
        BigFloat n2 = 0;
        for (size_t c = 0; c < M.cols(); ++c) {
            BigComplex z = sc_to_bigcomplex(M(r, c));
            n2 += z.norm2();
            rows[r].e.push_back(std::move(z));
        }
        if (b) rows[r].e.push_back(sc_to_bigcomplex((*b)[r]));
        rows[r].scale = sqrt(n2);
        if (rows[r].scale.is_zero()) rows[r].scale = 1;
    }
    return rows;
}

struct NumEchelon {
    std::vector<NumRow> rows;
    std::vector<size_t> pivot_cols;
};

NumEchelon numeric_echelonize(std::vector<NumRow> rows, size_t data_cols) {
    const BigFloat thresh = numeric_threshold();
    NumEchelon E;
    size_t rank = 0;
    for (size_t c = 0; c < data_cols && rank < rows.size(); ++c) {
        size_t best = rows.size();
        BigFloat best_mag = 0;
        for (size_t r = rank; r < rows.size(); ++r) {
            BigFloat mag = rows[r].e[c].abs();
            if (mag < thresh * rows[r].scale) continue;  // rounding noise
            if (best == rows.size() || mag > best_mag) {
                best = r;
                best_mag = mag;
            }
        }
        if (best == rows.size()) continue;
        std::swap(rows[rank], rows[best]);
        const BigComplex pivot = rows[rank].e[c];
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r].e[c].is_zero()) continue;
            BigComplex ratio = rows[r].e[c] / pivot;
            for (size_t j = c; j < rows[r].e.size(); ++j)
                rows[r].e[j] = rows[r].e[j] - ratio * rows[rank].e[j];
            rows[r].e[c] = BigComplex();
        }
        E.pivot_cols.push_back(c);
        ++rank;
    }
    E.rows = std::move(rows);
    return E;
}

}  // namespace

size_t mat_rank(const Matrix& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    switch (classify_entries(M, nullptr)) {
        case MatClass::rational: return rank_impl<RatOps>(M);
        case MatClass::cyclotomic: return rank_impl<CycOps>(M);
        case MatClass::numeric:
            return numeric_echelonize(numeric_rows(M, nullptr), M.cols()).pivot_cols.size();
    }
    return 0;
}

std::vector<std::vector<Scalar>> mat_kernel(const Matrix& M) {
    if (M.cols() == 0) return {};
    switch (classify_entries(M, nullptr)) {
        case MatClass::rational: return kernel_impl<RatOps>(M);
        case MatClass::cyclotomic: return kernel_impl<CycOps>(M);
        case MatClass::numeric: {
            auto E = numeric_echelonize(numeric_rows(M, nullptr), M.cols());
            std::vector<char> is_pivot(M.cols(), 0);
            for (size_t pc : E.pivot_cols) is_pivot[pc] = 1;
            std::vector<std::vector<Scalar>> basis;
            for (size_t fc = 0; fc < M.cols(); ++fc) {
                if (is_pivot[fc]) continue;
                std::vector<BigComplex> x(M.cols());
                x[fc] = BigComplex(BigFloat(1));
                for (size_t i = E.pivot_cols.size(); i-- > 0;) {
                    const size_t pc = E.pivot_cols[i];
                    BigComplex acc;
                    for (size_t j = pc + 1; j < M.cols(); ++j)
                        acc = acc - E.rows[i].e[j] * x[j];
                    x[pc] = acc / E.rows[i].e[pc];
                }
                std::vector<Scalar> v(M.cols());
                for (size_t c = 0; c < M.cols(); ++c) v[c] = x[c];
                basis.push_back(std::move(v));
            }
            return basis;
        }
    }
    return {};
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix& M, const std::vector<Scalar>& b) {
    if (b.size() != M.rows()) fail(errc::invalid_argument, "solve rhs length mismatch");
    switch (classify_entries(M, &b)) {
        case MatClass::rational: return solve_impl<RatOps>(M, b);
        case MatClass::cyclotomic: return solve_impl<CycOps>(M, b);
        case MatClass::numeric: {
            auto E = numeric_echelonize(numeric_rows(M, &b), M.cols());
            const BigFloat thresh = numeric_threshold();
            for (size_t r = E.pivot_cols.size(); r < E.rows.size(); ++r)
                if (E.rows[r].e.back().abs() > thresh * E.rows[r].scale) return std::nullopt;
            std::vector<BigComplex> x(M.cols());
            for (size_t i = E.pivot_cols.size(); i-- > 0;) {
                const size_t pc = E.pivot_cols[i];
                BigComplex acc = E.rows[i].e.back();
                for (size_t j = pc + 1; j < M.cols(); ++j) acc = acc - E.rows[i].e[j] * x[j];
                x[pc] = acc / E.rows[i].e[pc];
            }
            std::vector<Scalar> out(M.cols());
            for (size_t c = 0; c < M.cols(); ++c) out[c] = x[c];
            return out;
        }
    }
    return std::nullopt;
}

Scalar mat_det(const Matrix& M) {
    if (M.rows() != M.cols()) fail(errc::invalid_argument, "determinant of non-square matrix");
    if (!M.rows()) return Scalar(Rational(1));
    // Plain exact elimination; only used at small sizes.
    const size_t n = M.rows();
    Matrix A = M;
    Scalar det = Rational(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (!sc_is_zero(A(r, c))) {
                piv = r;
                break;
            }
        if (piv == n) return Rational(0);
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(A(c, j), A(piv, j));
            det = sc_neg(det);
        }
        det = sc_mul(det, A(c, c));
        for (size_t r = c + 1; r < n; ++r) {
            if (sc_is_zero(A(r, c))) continue;
            Scalar ratio = sc_div(A(r, c), A(c, c));
            for (size_t j = c; j < n; ++j) A(r, j) = sc_sub(A(r, j), sc_mul(ratio, A(c, j)));
        }
    }
    return det;
}

std::optional<Matrix> mat_inverse(const Matrix& M) {
    if (M.rows() != M.cols()) fail(errc::invalid_argument, "inverse of non-square matrix");
    const size_t n = M.rows();
    Matrix A = M, I = Matrix::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (!sc_is_zero(A(r, c))) {
                piv = r;
                break;
            }
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(A(c, j), A(piv, j));
                std::swap(I(c, j), I(piv, j));
            }
        Scalar inv = sc_div(Scalar(Rational(1)), A(c, c));
        for (size_t j = 0; j < n; ++j) {
            A(c, j) = sc_mul(A(c, j), inv);
            I(c, j) = sc_mul(I(c, j), inv);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || sc_is_zero(A(r, c))) continue;
            Scalar f = A(r, c);
            for (size_t j = 0; j < n; ++j) {
                A(r, j) = sc_sub(A(r, j), sc_mul(f, A(c, j)));
                I(r, j) = sc_sub(I(r, j), sc_mul(f, I(c, j)));
            }
        }
    }
    return I;
}

}  // namespace waring5
