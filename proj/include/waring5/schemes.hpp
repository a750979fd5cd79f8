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

#ifndef WARING5_SCHEMES_HPP
#define WARING5_SCHEMES_HPP

#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace waring5 {

/// One connected curvilinear component: the order-(length-1) jet of a
/// parametrized path, supported at [p_0].
struct JetComponent {
    CurvePath path;
    unsigned length = 1;  // the degree b_i of the component

    const std::vector<Rational>& support() const { return path.points.front(); }
};

/// Combinatorial type (s; b_1,...,b_s), b_1 >= ... >= b_s >= 1.
struct SchemeType {
    std::vector<unsigned> degrees;  // sorted descending

    unsigned s() const { return unsigned(degrees.size()); }
    unsigned total() const;
    std::string str() const;                       // "s:b1,b2,..."
    static SchemeType parse(const std::string&);   // throws BadType
    bool operator==(const SchemeType& o) const { return degrees == o.degrees; }
};

/// Curvilinear zero-dimensional scheme A = A_1 ⊔ ... ⊔ A_s in P^m given by
/// jets on paths; supports pairwise distinct (projectively).
struct JetScheme {
    unsigned m = 4;
    std::vector<JetComponent> components;

    unsigned total_degree() const;
    SchemeType type() const;  // degrees sorted descending
    /// Validates invariants (support distinctness, nonzero p_0, var counts).
    void validate() const;
};

/// Rows: for each component i and each j in 0..b_i-1, the coefficient
/// vector of jet_coefficient(path_i, j, d). Row count = deg A.
Matrix veronese_span_matrix(const JetScheme& A, unsigned d);

/// Incidence matrix for degree-k forms through A: same row layout, entry
/// at column beta = [t^j] c(t)^beta. A dual form q contains A iff
/// (this matrix)·coeffs(q) = 0; its rank equals the span matrix rank.
Matrix scheme_condition_matrix(const JetScheme& A, unsigned k);

/// True iff the degree-1 Veronese span has rank deg A, i.e. dim<A> = degA-1.
bool is_linearly_independent(const JetScheme& A);

struct HilbertPair {
    size_t h0 = 0, h1 = 0;
};

/// h1 = deg A - rank(span matrix at d); h0 = C(m+d,d) - rank.
HilbertPair hilbert_h0_h1(const JetScheme& A, unsigned d);

JetScheme scheme_of_points(unsigned m, const std::vector<std::vector<Rational>>& pts);

// -- Low-degree-curve witness search (reduced schemes, desk scale) --------

enum class CurveKind { line, conic, plane_cubic };

struct CurveWitness {
    CurveKind kind = CurveKind::line;
    size_t incidence = 0;
    /// Two points for a line; three plane-spanning points for conic/cubic.
    std::vector<std::vector<Rational>> span_points;
    /// Plane-curve coefficients in the barycentric coordinates of
    /// span_points (canonical degree-2 or degree-3 monomial order); empty
    /// for a line.
    std::vector<Rational> plane_curve;
};

/// For reduced Z with h1(I_Z(d)) > 0, searches the witnesses guaranteed at
/// desk scale: lines through point pairs (complete), then conics and plane
/// cubics inside planes spanned by point triples. Returns nullopt when
/// h1 = 0 or nothing qualifies. Throws NonReducedInput on duplicates.
std::optional<CurveWitness> low_degree_curve_witness(
    const std::vector<std::vector<Rational>>& Z, unsigned m, unsigned d);

/// Re-verifies a witness by substitution; used by tests and the CLI.
size_t curve_witness_incidence(const CurveWitness& w,
                               const std::vector<std::vector<Rational>>& Z);

// -- JSON ------------------------------------------------------------------

std::string scheme_to_json(const JetScheme& A);
JetScheme scheme_from_json(const std::string& text);

}  // namespace waring5

#endif
