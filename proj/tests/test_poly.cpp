#include <doctest.h>

#include "oracles.hpp"
#include "waring5/poly.hpp"
#include "waring5/rng.hpp"

using namespace waring5;

namespace {

HomogPoly P(const std::string& s, unsigned min_vars = 0) { return parse_poly(s, min_vars); }

std::vector<Rational> rational_vec(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("text grammar round trip") {
    HomogPoly f = P("126*x0^5*x1^4 + 252*x0^6*x1^2*x2 - 1/2*x4^9");
    CHECK(f.nvars == 5);
    CHECK(f.degree == 9);
    CHECK(f.terms.size() == 3);
    CHECK(poly_eq(parse_poly(poly_str(f)), f));
    CHECK(poly_str(P("1*x0^2")) == "x0^2");
    CHECK_THROWS_AS(P("x0^2 + x1"), error);  // not homogeneous
}

TEST_CASE("apolar_apply on the stated examples") {
    // X0 ∘ x0^2 = 2 x0 (iterated-derivative normalization).
    CHECK(poly_eq(apolar_apply(P("x0", 2), P("x0^2")), P("2*x0", 2)));
    // Annihilation: X1^2 ∘ x0^3 = 0.
    CHECK(apolar_apply(P("x1^2"), P("x0^3", 2)).is_zero());

    // X0 X1 ∘ (x0+x1)^3 against the independent differentiation oracle.
    HomogPoly f = power_of_linear(P("x0 + x1"), 3);
    HomogPoly got = apolar_apply(P("x0*x1"), f);
    auto expect = oracle::iterated_derivative(oracle::to_map(f), {1, 1});
    CHECK(poly_eq(got, oracle::from_map(2, 1, expect)));
}

TEST_CASE("apolar_apply bilinearity and the power normalization constant") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned nv = 3, a = 2, d = 5;
        HomogPoly g1(nv, a), g2(nv, a);
        for (const auto& e : monomials_of_degree(nv, a)) {
            g1.add_term(e, Scalar(rng.rational(9)));
            g2.add_term(e, Scalar(rng.rational(9)));
        }
        std::vector<Rational> lvec{rng.rational(9, true), rng.rational(9), rng.rational(9)};
        HomogPoly f = power_of_linear(linear_form_rational(lvec), d);

        CHECK(poly_eq(apolar_apply(poly_add(g1, g2), f),
                      poly_add(apolar_apply(g1, f), apolar_apply(g2, f))));

        // g ∘ l^d = a! C(d,a) g(l) l^{d-a}.
        std::vector<Scalar> at(lvec.begin(), lvec.end());
        Scalar gl = poly_eval(g1, at);
        Scalar constant = Rational(factorial(a) * binomial(d, a));
        HomogPoly expect =
            poly_scale(power_of_linear(linear_form_rational(lvec), d - a), sc_mul(gl, constant));
        CHECK(poly_eq(apolar_apply(g1, f), expect));
    }
}

TEST_CASE("power_of_linear on the stated examples") {
    CHECK(poly_eq(power_of_linear(P("x0"), 9), P("x0^9")));
    CHECK(poly_eq(power_of_linear(P("x0+x1"), 2), P("x0^2 + 2*x0*x1 + x1^2")));
    // Binomial oracle for (x0 - x1)^3.
    HomogPoly got = power_of_linear(P("x0 - x1"), 3);
    auto expect = oracle::naive_power_of_linear(rational_vec({1, -1}), 3);
    CHECK(poly_eq(got, oracle::from_map(2, 3, expect)));
    CHECK(poly_eq(got, P("x0^3 - 3*x0^2*x1 + 3*x0*x1^2 - x1^3")));
}

TEST_CASE("jet_coefficient on the stated examples") {
    // Constant path: jet 0 is the d-th power.
    CurvePath c0{{rational_vec({2, 1, 0})}};
    CHECK(poly_eq(jet_coefficient(c0, 0, 4),
                  power_of_linear(linear_form_rational(c0.points[0]), 4)));

    // c(t) = e0 + t e1, j = 1, d = 3.
    CurvePath c1{{rational_vec({1, 0}), rational_vec({0, 1})}};
    CHECK(poly_eq(jet_coefficient(c1, 1, 3), P("3*x0^2*x1")));

    // Rational normal quartic, j = 4, d = 9: the five-term jet, checked
    // against the brute-force expansion oracle and the listed polynomial.
    CurvePath c4{{rational_vec({1, 0, 0, 0, 0}), rational_vec({0, 1, 0, 0, 0}),
                  rational_vec({0, 0, 1, 0, 0}), rational_vec({0, 0, 0, 1, 0}),
                  rational_vec({0, 0, 0, 0, 1})}};
    HomogPoly got = jet_coefficient(c4, 4, 9);
    auto expect = oracle::naive_jet(c4.points, 4, 9);
    CHECK(poly_eq(got, oracle::from_map(5, 9, expect)));
    CHECK(poly_eq(got, P("9*x0^8*x4 + 72*x0^7*x1*x3 + 36*x0^7*x2^2 + 252*x0^6*x1^2*x2 "
                         "+ 126*x0^5*x1^4")));
}

TEST_CASE("jet truncation consistency at rational parameters") {
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        CurvePath c{{rational_vec({1, 0, 0}), {rng.rational(5), rng.rational(5), rng.rational(5)},
                     {rng.rational(5), rng.rational(5), rng.rational(5)}}};
        const unsigned d = 4;
        Rational t = rng.rational(5);
        HomogPoly sum(3, d);
        Rational tk(1);
        for (unsigned j = 0; j <= 2 * d; ++j) {
            sum = poly_add(sum, poly_scale(jet_coefficient(c, j, d), Scalar(tk)));
            tk *= t;
        }
        CHECK(poly_eq(sum, power_of_linear(linear_form_rational(c.eval(t)), d)));
    }
}

TEST_CASE("substitute_linear on the stated examples") {
    HomogPoly f = P("x0*x1");
    CHECK(poly_eq(substitute_linear(f, Matrix::identity(2)), f));

    Matrix swap(2, 2);
    swap(0, 1) = Rational(1);
    swap(1, 0) = Rational(1);
    CHECK(poly_eq(substitute_linear(P("x0^2", 2), swap), P("x1^2", 2)));

    Matrix M(2, 2);  // x0 -> x0+x1, x1 -> x0-x1
    M(0, 0) = Rational(1);
    M(0, 1) = Rational(1);
    M(1, 0) = Rational(1);
    M(1, 1) = Rational(-1);
    CHECK(poly_eq(substitute_linear(f, M), P("x0^2 - x1^2")));
}

TEST_CASE("substitute_linear inverse round trip") {
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix M(3, 3);
        do {
            for (size_t r = 0; r < 3; ++r)
                for (size_t c = 0; c < 3; ++c) M(r, c) = rng.rational(5);
        } while (sc_is_zero(mat_det(M)));
        HomogPoly f(3, 4);
        for (const auto& e : monomials_of_degree(3, 4))
            if (rng.below(2)) f.add_term(e, Scalar(rng.rational(9)));
        auto Minv = mat_inverse(M);
        REQUIRE(Minv.has_value());
        CHECK(poly_eq(substitute_linear(substitute_linear(f, M), *Minv), f));
    }
}

TEST_CASE("zero polynomial keeps its degree tag") {
    HomogPoly z(3, 7);
    CHECK(z.is_zero());
    CHECK(z.degree == 7);
    HomogPoly g = apolar_apply(P("x1^2", 3), P("x0^3", 3));
    CHECK(g.is_zero());
    CHECK(g.degree == 1);
}
