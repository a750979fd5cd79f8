#include <doctest.h>

#include "waring5/matrix.hpp"
#include "waring5/rng.hpp"

using namespace waring5;

namespace {

Matrix from_longs(const std::vector<std::vector<long>>& rows) {
    Matrix M(rows.size(), rows.front().size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c) M(r, c) = Rational(rows[r][c]);
    return M;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic laws") {
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(rational_from(Int(4), Int(-6)) == Rational(-2, 3));
    CHECK(rational_str(parse_rational("10/4")) == "5/2");

    // Associativity / commutativity / distributivity on randomized triples.
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(50), b = rng.rational(50), c = rng.rational(50);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("cyclotomic arithmetic") {
    // zeta_5 has multiplicative order 5 and satisfies Phi_5.
    Cyclotomic z = root_of_unity(5, 1);
    Cyclotomic acc(Rational(1));
    for (int i = 0; i < 5; ++i) acc = cyc_mul(acc, z);
    CHECK(cyc_eq(acc, Cyclotomic(Rational(1))));
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(33) == 20);

    // 1 + z + z^2 + z^3 + z^4 = 0 in Q(zeta_5).
    Cyclotomic sum(Rational(0));
    for (unsigned k = 0; k < 5; ++k) sum = cyc_add(sum, root_of_unity(5, k));
    CHECK(sum.is_zero());

    // Division round-trips.
    Cyclotomic a = cyc_add(root_of_unity(5, 2), Cyclotomic(Rational(3)));
    Cyclotomic q = cyc_div(a, z);
    CHECK(cyc_eq(cyc_mul(q, z), a));

    // Order-1 embeds rationals losslessly; cross-order promotion works.
    Cyclotomic r(Rational(7, 2));
    CHECK(r.is_rational());
    CHECK(cyc_eq(cyc_to_order(r, 10), Cyclotomic(10, cyc_to_order(r, 10).coeffs)));
    CHECK(cyc_mul(root_of_unity(2, 1), root_of_unity(2, 1)).is_rational());
}

TEST_CASE("mat_rank on the stated examples") {
    CHECK(mat_rank(Matrix::identity(2)) == 2);
    CHECK(mat_rank(Matrix(3, 4)) == 0);
    // Hand elimination: row2 = 2 row1, row3 independent.
    CHECK(mat_rank(from_longs({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);
}

TEST_CASE("mat_kernel on the stated examples") {
    CHECK(mat_kernel(Matrix::identity(3)).empty());
    CHECK(mat_kernel(Matrix(2, 3)).size() == 3);

    auto basis = mat_kernel(from_longs({{1, 1}}));
    REQUIRE(basis.size() == 1);
    // (1,-1) up to scale.
    CHECK(sc_eq(basis[0][0], sc_neg(basis[0][1])));
    CHECK(!sc_is_zero(basis[0][0]));
}

TEST_CASE("solve_linear on the stated examples") {
    std::vector<Scalar> b{Rational(5), Rational(-3), Rational(1, 2)};
    auto x = solve_linear(Matrix::identity(3), b);
    REQUIRE(x.has_value());
    for (int i = 0; i < 3; ++i) CHECK(sc_eq((*x)[i], b[i]));

    CHECK(!solve_linear(from_longs({{1, 1}, {2, 2}}), {Rational(1), Rational(3)}).has_value());

    // Deterministic pivot: leftmost column carries the solve, x1 stays free.
    auto y = solve_linear(from_longs({{1, 1}}), {Rational(2)});
    REQUIRE(y.has_value());
    CHECK(sc_eq((*y)[0], Scalar(Rational(2))));
    CHECK(sc_is_zero((*y)[1]));
}

TEST_CASE("rank/kernel/solve invariants on random exact matrices") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        Matrix M(rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                M(r, c) = rng.below(3) ? Scalar(rng.rational(9)) : Scalar(Rational(0));

        size_t rank = mat_rank(M);
        CHECK(rank == mat_rank(M.transposed()));
        auto kern = mat_kernel(M);
        CHECK(cols == rank + kern.size());
        for (const auto& v : kern) {
            auto Mv = M.apply(v);
            for (const auto& e : Mv) CHECK(sc_is_zero(e));
        }

        // Solvable systems solve exactly; unsolvable ones raise the rank.
        std::vector<Scalar> b(rows);
        for (auto& e : b) e = rng.rational(9);
        auto x = solve_linear(M, b);
        if (x) {
            auto Mx = M.apply(*x);
            for (size_t r = 0; r < rows; ++r) CHECK(sc_eq(Mx[r], b[r]));
        } else {
            Matrix aug(rows, cols + 1);
            for (size_t r = 0; r < rows; ++r) {
                for (size_t c = 0; c < cols; ++c) aug(r, c) = M(r, c);
                aug(r, cols) = b[r];
            }
            CHECK(mat_rank(aug) == rank + 1);
        }
    }
}

TEST_CASE("cyclotomic matrices eliminate exactly") {
    Matrix M(2, 2);
    M(0, 0) = root_of_unity(4, 1);  // i
    M(0, 1) = Rational(1);
    M(1, 0) = Rational(1);
    M(1, 1) = cyc_neg(root_of_unity(4, 1));  // -i; rows proportional: rank 1
    CHECK(mat_rank(M) == 1);
    auto kern = mat_kernel(M);
    REQUIRE(kern.size() == 1);
    auto Mv = M.apply(kern[0]);
    CHECK(sc_is_zero(Mv[0]));
    CHECK(sc_is_zero(Mv[1]));
}

TEST_CASE("numeric rank uses the precision threshold") {
    set_precision_bits(256);
    Matrix M(2, 2);
    BigFloat tiny = ldexp(BigFloat(1), -200);  // below 2^-128 * norm
    M(0, 0) = BigComplex(BigFloat(1));
    M(0, 1) = BigComplex(BigFloat(2));
    M(1, 0) = BigComplex(BigFloat(2));
    M(1, 1) = BigComplex(BigFloat(4) + tiny);
    CHECK(mat_rank(M) == 1);
    M(1, 1) = BigComplex(BigFloat(4.5));
    CHECK(mat_rank(M) == 2);
}

TEST_CASE("mixing exact and inexact entries is refused") {
    Matrix M(1, 2);
    M(0, 0) = Rational(1);
    M(0, 1) = BigComplex(BigFloat(1));
    CHECK_THROWS_AS(mat_rank(M), error);
}
