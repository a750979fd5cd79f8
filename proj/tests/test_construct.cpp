#include <doctest.h>

#include "waring5/apolar.hpp"
#include "waring5/construct.hpp"
#include "waring5/rng.hpp"

using namespace waring5;

namespace {
HomogPoly P(const std::string& s, unsigned min_vars = 0) { return parse_poly(s, min_vars); }
}

TEST_CASE("canonical_scheme on the stated examples") {
    JetScheme pts = canonical_scheme(SchemeType::parse("5:1,1,1,1,1"), 4);
    CHECK(pts.components.size() == 5);
    for (unsigned i = 0; i < 5; ++i) {
        CHECK(pts.components[i].length == 1);
        CHECK(pts.components[i].support()[i] == 1);
    }

    JetScheme j5 = canonical_scheme(SchemeType::parse("1:5"), 4);
    REQUIRE(j5.components.size() == 1);
    CHECK(j5.components[0].length == 5);
    CHECK(j5.components[0].path.points.size() == 5);
    for (unsigned j = 0; j < 5; ++j) CHECK(j5.components[0].path.points[j][j] == 1);

    JetScheme t32 = canonical_scheme(SchemeType::parse("2:3,2"), 4);
    REQUIRE(t32.components.size() == 2);
    CHECK(t32.components[0].length == 3);
    CHECK(t32.components[1].length == 2);
    CHECK(t32.components[1].path.points[0][3] == 1);
    CHECK(t32.components[1].path.points[1][4] == 1);

    CHECK_THROWS_AS(canonical_scheme(SchemeType::parse("2:4,2"), 4), error);
    CHECK_THROWS_AS(canonical_scheme(SchemeType::parse("1:5"), 3), error);
}

TEST_CASE("sample_point on the stated examples") {
    SampleOptions unit;
    unit.unit_coefficients = true;
    SamplePoint sp = sample_point(canonical_scheme(SchemeType::parse("5:1,1,1,1,1"), 4), 9, 0,
                                  unit);
    CHECK(poly_eq(sp.f, P("x0^9+x1^9+x2^9+x3^9+x4^9")));

    // Hand-picked coefficients reproduce the listed polynomials.
    JetScheme j5 = canonical_scheme(SchemeType::parse("1:5"), 4);
    HomogPoly f(5, 9);
    f = jet_coefficient(j5.components[0].path, 4, 9);
    CHECK(poly_eq(f, P("9*x0^8*x4 + 72*x0^7*x1*x3 + 36*x0^7*x2^2 + 252*x0^6*x1^2*x2 "
                       "+ 126*x0^5*x1^4")));

    JetScheme t4 = canonical_scheme(SchemeType::parse("4:2,1,1,1"), 4);
    HomogPoly g = poly_add(jet_coefficient(t4.components[0].path, 1, 9),
                           P("x2^9 + x3^9 + x4^9", 5));
    CHECK(poly_eq(g, P("9*x0^8*x1 + x2^9 + x3^9 + x4^9")));

    CHECK_THROWS_AS(sample_point(j5, 8, 0), error);  // d < 9 refused
}

TEST_CASE("sample invariants: concision, border bound, membership, minimality") {
    for (const char* ts : {"1:5", "2:4,1", "3:2,2,1"}) {
        JetScheme A = canonical_scheme(SchemeType::parse(ts), 4);
        SamplePoint sp = sample_point(A, 9, 21);
        CHECK(essential_vars(sp.f).essential_count == 5);
        CHECK(border_rank_lower_bound(sp.f) == 5);
        CHECK(hilbert_h0_h1(A, 9).h1 == 0);

        // Membership: the span solve recovers exactly the stored
        // coefficients (the span matrix has rank 5).
        Matrix M = veronese_span_matrix(A, 9).transposed();
        auto sol = solve_linear(M, coefficient_vector(sp.f));
        REQUIRE(sol.has_value());
        size_t idx = 0;
        for (const auto& block : sp.coefficients)
            for (const auto& c : block) CHECK(sc_eq((*sol)[idx++], Scalar(c)));
    }
}

TEST_CASE("random_projectivity is deterministic and invertible") {
    Matrix A = random_projectivity(4, 31337);
    Matrix B = random_projectivity(4, 31337);
    CHECK(A == B);
    CHECK(mat_rank(A) == 5);
    Matrix C = random_projectivity(4, 31338);
    CHECK(!(A == C));

    JetScheme S = canonical_scheme(SchemeType::parse("2:3,2"), 4);
    CHECK(is_linearly_independent(transform_scheme(S, A)));
}

TEST_CASE("transform equivariance of samples") {
    JetScheme A = canonical_scheme(SchemeType::parse("2:3,2"), 4);
    SamplePoint sp = sample_point(A, 9, 77);
    Matrix M = random_projectivity(4, 5, 7);
    JetScheme TA = transform_scheme(A, M);

    // Rebuild f over the transformed scheme with the same coefficients and
    // compare to substitute_linear(f, M^T).
    HomogPoly g(5, 9);
    for (size_t i = 0; i < TA.components.size(); ++i)
        for (unsigned j = 0; j < TA.components[i].length; ++j)
            g = poly_add(g, poly_scale(jet_coefficient(TA.components[i].path, j, 9),
                                       Scalar(sp.coefficients[i][j])));
    CHECK(poly_eq(g, substitute_linear(sp.f, M.transposed())));
}

TEST_CASE("sample JSON round trip") {
    SamplePoint sp = sample_point(canonical_scheme(SchemeType::parse("3:3,1,1"), 4), 10, 123);
    SamplePoint back = sample_from_json(sample_to_json(sp));
    CHECK(back.d == sp.d);
    CHECK(back.seed == sp.seed);
    CHECK(poly_eq(back.f, sp.f));
    CHECK(back.coefficients == sp.coefficients);
}
