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

#ifndef WARING5_POLY_HPP
#define WARING5_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace waring5 {

/// Exponent vector of a monomial; length = number of variables, entries sum
/// to the owning polynomial's degree.
using ExponentVec = std::vector<unsigned>;

/// Canonical term order: graded lexicographic with x0 dominant, so x0^d
/// sorts first. Serialization, matrix layouts and hashes all use it.
struct TermOrder {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

/// Sparse homogeneous polynomial. The zero polynomial keeps its degree tag
/// (empty term map) so apolarity bookkeeping survives annihilation.
struct HomogPoly {
    unsigned nvars = 1;
    unsigned degree = 0;
    std::map<ExponentVec, Scalar, TermOrder> terms;

    HomogPoly() = default;
    HomogPoly(unsigned nv, unsigned d) : nvars(nv), degree(d) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const ExponentVec& e, const Scalar& c);  // accumulates, drops zeros
    const Scalar* coeff(const ExponentVec& e) const;
    bool all_rational() const;
};

HomogPoly poly_add(const HomogPoly& a, const HomogPoly& b);
HomogPoly poly_sub(const HomogPoly& a, const HomogPoly& b);
HomogPoly poly_scale(const HomogPoly& a, const Scalar& c);
HomogPoly poly_mul(const HomogPoly& a, const HomogPoly& b);
bool poly_eq(const HomogPoly& a, const HomogPoly& b);
Scalar poly_eval(const HomogPoly& a, const std::vector<Scalar>& x);
HomogPoly poly_derivative(const HomogPoly& a, unsigned var);

/// Linear form sum c_i x_i from its coefficient vector.
HomogPoly linear_form(const std::vector<Scalar>& c);
HomogPoly linear_form_rational(const std::vector<Rational>& c);

/// A polynomial path in the affine cone, c(t) = sum_j t^j p_j with p_0 != 0.
struct CurvePath {
    std::vector<std::vector<Rational>> points;

    unsigned nvars() const { return points.empty() ? 0 : unsigned(points.front().size()); }
    unsigned path_degree() const { return unsigned(points.size()) - 1; }
    std::vector<Rational> eval(const Rational& t) const;
    /// Homogenized evaluation sum_j u^j v^{deg-j} p_j.
    std::vector<Scalar> eval_h(const Scalar& u, const Scalar& v) const;
};

/// Apolarity contraction: a dual monomial X^alpha acts on f as the iterated
/// partial derivative d^alpha (no factorial normalization), extended
/// bilinearly. With this normalization g ∘ l^d = a!·C(d,a)·g(l)·l^{d-a}
/// for g of degree a, where g(l) evaluates g at l's coefficient vector.
HomogPoly apolar_apply(const HomogPoly& g, const HomogPoly& f);

/// l^d with exact multinomial coefficients.
HomogPoly power_of_linear(const HomogPoly& l, unsigned d);

/// Coefficient of t^j in (c(t)·x)^d — the order-j Veronese jet direction
/// (t-coefficient convention, no factorial j!).
HomogPoly jet_coefficient(const CurvePath& c, unsigned j, unsigned d);

/// f composed with x -> M·x (singular M allowed; used for projections too).
HomogPoly substitute_linear(const HomogPoly& f, const Matrix& M);

// -- canonical monomial enumeration --------------------------------------

/// All degree-d exponent vectors in nvars variables in canonical term
/// order. Memoized; the reference stays valid for the process lifetime.
const std::vector<ExponentVec>& monomials_of_degree(unsigned nvars, unsigned d);
size_t monomial_index(unsigned nvars, unsigned d, const ExponentVec& e);
size_t monomial_count(unsigned nvars, unsigned d);

/// Coefficients of f in the canonical monomial order (dense).
std::vector<Scalar> coefficient_vector(const HomogPoly& f);
HomogPoly poly_from_coefficients(unsigned nvars, unsigned d, const std::vector<Scalar>& c);

// -- text grammar ----------------------------------------------------------

/// Grammar: terms joined by `+`/`-`; term = optional rational coefficient
/// `p/q`, `*`-separated powers `x<i>^<e>`; whitespace ignored.
/// Example: `126*x0^5*x1^4 + 252*x0^6*x1^2*x2 - 1/2*x4^9`.
HomogPoly parse_poly(const std::string& text, unsigned min_vars = 0);
std::string poly_str(const HomogPoly& f);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

}  // namespace waring5

#endif
