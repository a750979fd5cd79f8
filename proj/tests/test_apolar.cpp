#include <doctest.h>

#include "waring5/apolar.hpp"
#include "waring5/construct.hpp"
#include "waring5/rng.hpp"

using namespace waring5;

namespace {
HomogPoly P(const std::string& s, unsigned min_vars = 0) { return parse_poly(s, min_vars); }
}

TEST_CASE("catalecticant on the stated examples") {
    // Powers of linear forms have all catalecticant ranks 1.
    for (unsigned a = 1; a < 9; ++a)
        CHECK(mat_rank(catalecticant(P("x0^9", 5), a).matrix) == 1);

    // f = x0^4 + x1^4 (m=1), a=2: hand-built 3x3 oracle of rank 2.
    Catalecticant cat = catalecticant(P("x0^4 + x1^4"), 2);
    REQUIRE(cat.matrix.rows() == 3);
    REQUIRE(cat.matrix.cols() == 3);
    Matrix expect(3, 3);
    expect(0, 0) = Rational(12);  // X0^2 . f = 12 x0^2
    expect(2, 2) = Rational(12);  // X1^2 . f = 12 x1^2
    CHECK(cat.matrix == expect);
    CHECK(mat_rank(cat.matrix) == 2);

    // Zero polynomial: zero matrix of the right shape.
    HomogPoly z(3, 6);
    Catalecticant zc = catalecticant(z, 3);
    CHECK(mat_rank(zc.matrix) == 0);
    CHECK(zc.matrix.rows() == monomial_count(3, 3));
}

TEST_CASE("catalecticant transpose duality") {
    Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        HomogPoly f(3, 6);
        for (const auto& e : monomials_of_degree(3, 6))
            if (rng.below(3) == 0) f.add_term(e, Scalar(rng.rational(9)));
        if (f.is_zero()) continue;
        for (unsigned a = 1; a < 6; ++a)
            CHECK(mat_rank(catalecticant(f, a).matrix) ==
                  mat_rank(catalecticant(f, 6 - a).matrix));
    }
}

TEST_CASE("essential_vars on the stated examples") {
    auto rep = essential_vars(P("x0^9 + x1^9", 5));
    CHECK(rep.essential_count == 2);
    CHECK(essential_vars(power_of_linear(P("x0 + x1", 5), 9)).essential_count == 1);

    // A sampled (1;5) point depends on exactly 5 variables.
    SamplePoint sp = sample_point(canonical_scheme(SchemeType::parse("1:5"), 4), 9, 1);
    CHECK(essential_vars(sp.f).essential_count == 5);
}

TEST_CASE("concision recovers f through the section") {
    HomogPoly f = P("x0^9 + x1^9", 5);
    auto rep = essential_vars(f);
    CHECK(rep.concise.nvars == 2);
    HomogPoly back = substitute_linear(pad_vars(rep.concise, 5), rep.section);
    CHECK(poly_eq(back, f));
    CHECK(essential_vars(rep.concise).essential_count == rep.essential_count);
}

TEST_CASE("essential_vars is invariant under invertible substitutions") {
    Rng rng(17);
    HomogPoly f = P("x0^5*x1^2 + x2^7", 4);
    size_t base = essential_vars(f).essential_count;
    for (int trial = 0; trial < 3; ++trial) {
        Matrix M = random_projectivity(3, rng.next(), 5);
        CHECK(essential_vars(substitute_linear(f, M)).essential_count == base);
    }
}

TEST_CASE("border_rank_lower_bound on the stated examples") {
    CHECK(border_rank_lower_bound(power_of_linear(P("x0+2*x1", 5), 9)) == 1);
    CHECK(border_rank_lower_bound(P("x0^9+x1^9+x2^9+x3^9+x4^9")) == 5);

    for (const char* ts : {"1:5", "2:3,2", "3:3,1,1", "4:2,1,1,1", "5:1,1,1,1,1"}) {
        SamplePoint sp = sample_point(canonical_scheme(SchemeType::parse(ts), 4), 9, 7);
        CHECK(border_rank_lower_bound(sp.f) == 5);
    }
}

TEST_CASE("generic sums of d-th powers have catalecticant bound k") {
    Rng rng(23);
    for (unsigned k = 1; k <= 5; ++k) {
        HomogPoly f(5, 9);
        for (unsigned i = 0; i < k; ++i) {
            std::vector<Rational> l(5);
            for (auto& x : l) x = rng.rational(9);
            f = poly_add(f, power_of_linear(linear_form_rational(l), 9));
        }
        CHECK(border_rank_lower_bound(f) == k);
    }
}

TEST_CASE("apolar_ideal_slice on the stated examples") {
    // f = x0^8 x1 (m=1), k=2: the slice is spanned by X1^2.
    auto slice = apolar_ideal_slice(P("x0^8*x1"), 2);
    REQUIRE(slice.size() == 1);
    CHECK(poly_eq(poly_scale(slice[0], sc_div(Scalar(Rational(1)),
                                              *slice[0].coeff(ExponentVec{0, 2}))),
                  P("x1^2")));

    // f = x0^9 in five variables, k=1: every dual variable except X0.
    auto s1 = apolar_ideal_slice(P("x0^9", 5), 1);
    CHECK(s1.size() == 4);
    for (const auto& g : s1) CHECK(apolar_apply(g, P("x0^9", 5)).is_zero());

    // Generic binary nonic: degree-4 slice empty (full catalecticant rank).
    Rng rng(31);
    HomogPoly g(2, 9);
    for (const auto& e : monomials_of_degree(2, 9)) g.add_term(e, Scalar(rng.rational(50, true)));
    CHECK(apolar_ideal_slice(g, 4).empty());
}

TEST_CASE("slice elements annihilate f exactly") {
    SamplePoint sp = sample_point(canonical_scheme(SchemeType::parse("2:3,2"), 4), 9, 5);
    for (unsigned k = 2; k <= 4; ++k)
        for (const auto& g : apolar_ideal_slice(sp.f, k))
            CHECK(apolar_apply(g, sp.f).is_zero());
}
