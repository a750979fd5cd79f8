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

#ifndef WARING5_SCALAR_HPP
#define WARING5_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace waring5 {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float;

/// Working precision of the big-float layer, in mantissa bits (default 256).
/// Set once at startup; mpfr's default precision is process-global.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// -- Rational helpers ---------------------------------------------------

/// Canonical rational from a possibly unreduced pair (den may be negative).
Rational rational_from(const Int& num, const Int& den);
/// Parses "p", "p/q", or a signed decimal integer string. Canonicalizes.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& r);
/// max(bitlength(|num|), bitlength(den)) — the pivot tie-break measure.
unsigned bit_height(const Rational& r);

// -- Cyclotomic field elements ------------------------------------------

/// n-th cyclotomic polynomial, monic with integer coefficients, ascending
/// degree order, length phi(n)+1. Memoized.
const std::vector<Int>& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

/// Element of Q(zeta_n) stored in the power basis 1, z, ..., z^{phi(n)-1}
/// reduced modulo the n-th cyclotomic polynomial.
struct Cyclotomic {
    unsigned order = 1;
    std::vector<Rational> coeffs;  // size phi(order)

    Cyclotomic() : order(1), coeffs(1, Rational(0)) {}
    explicit Cyclotomic(const Rational& r) : order(1), coeffs(1, r) {}
    Cyclotomic(unsigned n, std::vector<Rational> c);

    bool is_zero() const;
    bool is_rational() const;          // lies in the prime field
    Rational rational_part() const;    // valid when is_rational()
    unsigned height_bits() const;
};

/// zeta_n^k as an element of Q(zeta_n).
Cyclotomic root_of_unity(unsigned n, unsigned k);

Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_sub(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_div(const Cyclotomic& a, const Cyclotomic& b);
Cyclotomic cyc_neg(const Cyclotomic& a);
bool cyc_eq(const Cyclotomic& a, const Cyclotomic& b);
/// Embeds into Q(zeta_m); requires order | m.
Cyclotomic cyc_to_order(const Cyclotomic& a, unsigned m);

// -- Arbitrary-precision complex ----------------------------------------

struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const;
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

BigComplex to_bigcomplex(const Rational& r);
BigComplex to_bigcomplex(const Cyclotomic& c);

// -- The tagged scalar union --------------------------------------------

/// Coefficient universe: exact rational, exact cyclotomic, or big-float
/// complex. Mixed arithmetic promotes upward (Rational -> Cyclotomic ->
/// BigComplex); the exact-to-float boundary is the only lossy promotion.
using Scalar = std::variant<Rational, Cyclotomic, BigComplex>;

enum class ScalarTag { rational = 0, cyclotomic = 1, bigcomplex = 2 };

inline ScalarTag tag_of(const Scalar& s) { return static_cast<ScalarTag>(s.index()); }
inline bool is_exact(const Scalar& s) { return s.index() != 2; }

Scalar sc_add(const Scalar& a, const Scalar& b);
Scalar sc_sub(const Scalar& a, const Scalar& b);
Scalar sc_mul(const Scalar& a, const Scalar& b);
Scalar sc_div(const Scalar& a, const Scalar& b);
Scalar sc_neg(const Scalar& a);
bool sc_eq(const Scalar& a, const Scalar& b);
bool sc_is_zero(const Scalar& a);
unsigned sc_height_bits(const Scalar& a);
BigComplex sc_to_bigcomplex(const Scalar& a);

inline Scalar sc_rat(long num, long den = 1) { return Rational(num, den); }

const Rational& sc_rational(const Scalar& s);  // throws unless rational tag
std::string scalar_str(const Scalar& s);

}  // namespace waring5

#endif
