#include <doctest.h>

#include "oracles.hpp"
#include "waring5/construct.hpp"
#include "waring5/rng.hpp"
#include "waring5/schemes.hpp"

using namespace waring5;

namespace {

std::vector<Rational> rv(std::initializer_list<long> v) {
    return std::vector<Rational>(v.begin(), v.end());
}

std::vector<Rational> unit(unsigned nv, unsigned i) {
    std::vector<Rational> p(nv, Rational(0));
    p[i] = 1;
    return p;
}

}  // namespace

TEST_CASE("scheme type parsing and formatting") {
    SchemeType t = SchemeType::parse("2:3,2");
    CHECK(t.s() == 2);
    CHECK(t.total() == 5);
    CHECK(t.str() == "2:3,2");
    CHECK(SchemeType::parse("3:1,3,1").str() == "3:3,1,1");  // sorted descending
    CHECK_THROWS_AS(SchemeType::parse("9:zzz"), error);
}

TEST_CASE("veronese_span_matrix on the stated examples") {
    // Single reduced point e0: one row, the x0^9 indicator.
    JetScheme one = scheme_of_points(4, {unit(5, 0)});
    Matrix M1 = veronese_span_matrix(one, 9);
    CHECK(M1.rows() == 1);
    CHECK(sc_eq(M1(0, monomial_index(5, 9, ExponentVec{9, 0, 0, 0, 0})), Scalar(Rational(1))));
    size_t nonzero = 0;
    for (size_t c = 0; c < M1.cols(); ++c)
        if (!sc_is_zero(M1(0, c))) ++nonzero;
    CHECK(nonzero == 1);

    // Canonical (5;1,...): the five ninth-power indicators.
    Matrix M5 = veronese_span_matrix(canonical_scheme(SchemeType::parse("5:1,1,1,1,1"), 4), 9);
    CHECK(M5.rows() == 5);
    CHECK(mat_rank(M5) == 5);

    // Canonical (1;5): the j=4 row is the five-term jet (oracle-checked).
    JetScheme j5 = canonical_scheme(SchemeType::parse("1:5"), 4);
    Matrix Mj = veronese_span_matrix(j5, 9);
    CHECK(Mj.rows() == 5);
    HomogPoly row4 = jet_coefficient(j5.components[0].path, 4, 9);
    auto expect = oracle::naive_jet(j5.components[0].path.points, 4, 9);
    CHECK(poly_eq(row4, oracle::from_map(5, 9, expect)));
}

TEST_CASE("is_linearly_independent on the stated examples") {
    for (const char* ts : {"1:5", "2:3,2", "2:4,1", "3:3,1,1", "3:2,2,1", "4:2,1,1,1",
                           "5:1,1,1,1,1"})
        CHECK(is_linearly_independent(canonical_scheme(SchemeType::parse(ts), 4)));

    // Three collinear points are dependent.
    JetScheme col = scheme_of_points(4, {unit(5, 0), unit(5, 1), rv({1, 1, 0, 0, 0})});
    CHECK(!is_linearly_independent(col));

    // Length-3 jet with p2 in span(p0, p1).
    JetScheme jet;
    jet.m = 4;
    jet.components.push_back(JetComponent{
        CurvePath{{unit(5, 0), unit(5, 1), rv({1, 2, 0, 0, 0})}}, 3});
    CHECK(!is_linearly_independent(jet));
}

TEST_CASE("hilbert_h0_h1 on the stated examples") {
    JetScheme j5 = canonical_scheme(SchemeType::parse("1:5"), 4);
    auto h = hilbert_h0_h1(j5, 9);
    CHECK(h.h1 == 0);
    CHECK(h.h0 == monomial_count(5, 9) - 5);

    // Eleven collinear points in the plane: 11 = d+2 impose only d+1.
    std::vector<std::vector<Rational>> pts;
    for (long t = 0; t < 11; ++t) pts.push_back(rv({1, t, 0}));
    auto hc = hilbert_h0_h1(scheme_of_points(2, pts), 9);
    CHECK(hc.h1 == 1);

    auto hp = hilbert_h0_h1(scheme_of_points(3, {unit(4, 2)}), 7);
    CHECK(hp.h1 == 0);

    // Bookkeeping identity h0 + degA - h1 = C(m+d, d).
    for (const char* ts : {"2:3,2", "4:2,1,1,1"}) {
        JetScheme A = canonical_scheme(SchemeType::parse(ts), 4);
        for (unsigned d : {9u, 10u}) {
            auto hh = hilbert_h0_h1(A, d);
            CHECK(hh.h0 + A.total_degree() - hh.h1 == monomial_count(5, d));
        }
    }
}

TEST_CASE("hilbert function is invariant under projectivities") {
    JetScheme A = canonical_scheme(SchemeType::parse("2:3,2"), 4);
    Matrix M = random_projectivity(4, 99, 7);
    auto h0 = hilbert_h0_h1(A, 9);
    auto h1 = hilbert_h0_h1(transform_scheme(A, M), 9);
    CHECK(h0.h0 == h1.h0);
    CHECK(h0.h1 == h1.h1);
}

TEST_CASE("low_degree_curve_witness finds a planted line") {
    // 11 = d+2 collinear points plus 5 generic ones, d = 9.
    std::vector<std::vector<Rational>> Z;
    for (long t = 0; t < 11; ++t) Z.push_back(rv({1, t, 0, 0}));
    Rng rng(4);
    for (int i = 0; i < 5; ++i)
        Z.push_back({rng.rational(20), rng.rational(20), rng.rational(20, true),
                     rng.rational(20, true)});
    auto w = low_degree_curve_witness(Z, 3, 9);
    REQUIRE(w.has_value());
    CHECK(w->kind == CurveKind::line);
    CHECK(w->incidence >= 10);
    CHECK(curve_witness_incidence(*w, Z) == w->incidence);
}

TEST_CASE("low_degree_curve_witness finds a planted conic") {
    // 20 = 2d+2 points on the conic (1, t, t^2) plus 3 generic, d = 9.
    std::vector<std::vector<Rational>> Z;
    for (long t = 0; t < 20; ++t) Z.push_back(rv({1, t, t * t}));
    Z.push_back(rv({0, 1, 7}));
    Z.push_back(rv({1, 0, 3}));
    Z.push_back(rv({3, 5, 1}));
    auto w = low_degree_curve_witness(Z, 2, 9);
    REQUIRE(w.has_value());
    CHECK(w->kind == CurveKind::conic);
    CHECK(w->incidence >= 20);
    CHECK(curve_witness_incidence(*w, Z) == w->incidence);
}

TEST_CASE("low_degree_curve_witness respects the h1 gate") {
    // Six generic points, d = 9: h1 = 0, no witness claimed.
    Rng rng(8);
    std::vector<std::vector<Rational>> Z;
    for (int i = 0; i < 6; ++i)
        Z.push_back({rng.rational(30, true), rng.rational(30), rng.rational(30),
                     rng.rational(30)});
    CHECK(!low_degree_curve_witness(Z, 3, 9).has_value());

    std::vector<std::vector<Rational>> dup{rv({1, 0, 0}), rv({2, 0, 0})};
    CHECK_THROWS_AS(low_degree_curve_witness(dup, 2, 9), error);
}

TEST_CASE("scheme JSON round trip") {
    JetScheme A = canonical_scheme(SchemeType::parse("2:3,2"), 4);
    JetScheme B = scheme_from_json(scheme_to_json(A));
    CHECK(B.m == A.m);
    REQUIRE(B.components.size() == A.components.size());
    for (size_t i = 0; i < A.components.size(); ++i) {
        CHECK(B.components[i].length == A.components[i].length);
        CHECK(B.components[i].path.points == A.components[i].path.points);
    }
}
