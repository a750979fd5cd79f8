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

#include "waring5/scalar.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <mutex>
#include <numeric>

#include "waring5/upoly.hpp"

namespace waring5 {

namespace {
unsigned g_precision_bits = 256;

unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.3010299957) + 3;
}
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 64) fail(errc::invalid_argument, "precision must be at least 64 bits");
    g_precision_bits = bits;
    BigFloat::default_precision(bits_to_digits10(bits));
}

unsigned precision_bits() { return g_precision_bits; }

// -- Rational -------------------------------------------------------------

Rational rational_from(const Int& num, const Int& den) {
    if (den == 0) fail(errc::invalid_argument, "zero denominator");
    Rational r;
    mpq_set_num(r.backend().data(), Int(num).backend().data());
    mpq_set_den(r.backend().data(), Int(den < 0 ? -den : den).backend().data());
    if (den < 0) r = -r;
    mpq_canonicalize(r.backend().data());
    return r;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        return rational_from(num, den);
    } catch (const std::exception&) {
        fail(errc::invalid_argument, "bad rational literal '" + s + "'");
    }
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

unsigned bit_height(const Rational& r) {
    if (r.is_zero()) return 0;
    Int n = abs(numerator(r)), d = denominator(r);
    auto bits = [](const Int& v) { return mpz_sizeinbase(v.backend().data(), 2); };
    return unsigned(std::max(bits(n), bits(d)));
}

// -- Cyclotomic polynomials -------------------------------------------------

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// x^n - 1 divided by the product of Phi_d over proper divisors d of n.
std::vector<Int> compute_cyclotomic(unsigned n,
                                    std::map<unsigned, std::vector<Int>>& table);

const std::vector<Int>& cyclotomic_impl(unsigned n) {
    static std::map<unsigned, std::vector<Int>> table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(n);
    if (it == table.end()) it = table.emplace(n, compute_cyclotomic(n, table)).first;
    return it->second;
}

// Exact division of integer polynomials (divisor monic), ascending order.
std::vector<Int> zpoly_div(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> rem = a, q(a.size() - b.size() + 1, Int(0));
    const Int& lead = b.back();
    for (size_t i = a.size() - 1; i + 1 >= b.size(); --i) {
        Int c = rem[i] / lead;
        q[i - (b.size() - 1)] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[i - (b.size() - 1) + j] -= c * b[j];
        if (i + 1 == b.size()) break;
    }
    return q;
}

std::vector<Int> compute_cyclotomic(unsigned n,
                                    std::map<unsigned, std::vector<Int>>& table) {
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;  // x^n - 1
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto it = table.find(d);
        if (it == table.end()) it = table.emplace(d, compute_cyclotomic(d, table)).first;
        p = zpoly_div(p, it->second);
    }
    return p;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) fail(errc::invalid_argument, "cyclotomic order must be positive");
    return cyclotomic_impl(n);
}

// -- Cyclotomic elements ---------------------------------------------------

Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> c) : order(n), coeffs(std::move(c)) {
    const unsigned phi = euler_phi(n);
    if (coeffs.size() != phi) fail(errc::invalid_argument, "cyclotomic coefficient length");
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const { return coeffs.empty() ? Rational(0) : coeffs[0]; }

unsigned Cyclotomic::height_bits() const {
    unsigned h = 0;
    for (const auto& c : coeffs) h = std::max(h, bit_height(c));
    return h;
}

namespace {

// Reduces an ascending coefficient vector modulo Phi_order down to length
// phi(order).
std::vector<Rational> cyc_reduce(unsigned order, std::vector<Rational> v) {
    const auto& phi_poly = cyclotomic_polynomial(order);
    const size_t deg = phi_poly.size() - 1;
    for (size_t i = v.size(); i-- > deg;) {
        if (v[i].is_zero()) continue;
        Rational c = v[i];  // z^i = -c * (lower terms of Phi) since Phi monic
        v[i] = 0;
        for (size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * Rational(phi_poly[j]);
    }
    v.resize(deg, Rational(0));
    return v;
}

unsigned lcm_u(unsigned a, unsigned b) {
    unsigned g = std::gcd(a, b);
    return a / g * b;
}

}  // namespace

Cyclotomic root_of_unity(unsigned n, unsigned k) {
    k %= n;
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = 1;
    return Cyclotomic(n, cyc_reduce(n, std::move(v)));
}

Cyclotomic cyc_to_order(const Cyclotomic& a, unsigned m) {
    if (a.order == m) return a;
    if (m % a.order != 0) fail(errc::invalid_argument, "incompatible cyclotomic orders");
    const unsigned step = m / a.order;
    std::vector<Rational> v(a.coeffs.size() * step + 1, Rational(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) v[i * step] = a.coeffs[i];
    return Cyclotomic(m, cyc_reduce(m, std::move(v)));
}

static std::pair<Cyclotomic, Cyclotomic> cyc_common(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned m = lcm_u(a.order, b.order);
    return {cyc_to_order(a, m), cyc_to_order(b, m)};
}

Cyclotomic cyc_add(const Cyclotomic& a0, const Cyclotomic& b0) {
    auto [a, b] = cyc_common(a0, b0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

Cyclotomic cyc_sub(const Cyclotomic& a0, const Cyclotomic& b0) {
    auto [a, b] = cyc_common(a0, b0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
}

Cyclotomic cyc_neg(const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

Cyclotomic cyc_mul(const Cyclotomic& a0, const Cyclotomic& b0) {
    auto [a, b] = cyc_common(a0, b0);
    std::vector<Rational> conv(a.coeffs.size() + b.coeffs.size(), Rational(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j].is_zero()) continue;
            conv[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return Cyclotomic(a.order, cyc_reduce(a.order, std::move(conv)));
}

Cyclotomic cyc_div(const Cyclotomic& a0, const Cyclotomic& b0) {
    auto [a, b] = cyc_common(a0, b0);
    if (b.is_zero()) fail(errc::invalid_argument, "cyclotomic division by zero");
    // Inverse of b via extended Euclid against Phi_order in Q[x].
    const auto& phi_int = cyclotomic_polynomial(a.order);
    UPoly phi(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) phi[i] = Rational(phi_int[i]);
    UPoly bp = up_trim(UPoly(b.coeffs.begin(), b.coeffs.end()));

    // Extended gcd: u * bp + v * phi = g (g constant since Phi irreducible).
    UPoly r0 = phi, r1 = bp, s0 = {}, s1 = {Rational(1)};
    while (up_deg(r1) > 0) {
        auto [q, r2] = up_divmod(r0, r1);
        UPoly s2 = up_sub(s0, up_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (up_deg(r1) != 0) fail(errc::invalid_argument, "cyclotomic inverse failed");
    UPoly inv = up_scale(s1, Rational(1) / r1[0]);
    inv.resize(euler_phi(a.order), Rational(0));
    Cyclotomic binv(a.order, std::vector<Rational>(inv.begin(), inv.end()));
    return cyc_mul(a, binv);
}

bool cyc_eq(const Cyclotomic& a0, const Cyclotomic& b0) {
    auto [a, b] = cyc_common(a0, b0);
    return a.coeffs == b.coeffs;
}

// -- BigComplex -------------------------------------------------------------

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigFloat n2 = o.norm2();
    if (n2.is_zero()) fail(errc::invalid_argument, "complex division by zero");
    return {(re * o.re + im * o.im) / n2, (im * o.re - re * o.im) / n2};
}

BigFloat BigComplex::abs() const { return sqrt(norm2()); }

BigComplex to_bigcomplex(const Rational& r) {
    return BigComplex(BigFloat(numerator(r)) / BigFloat(denominator(r)));
}

BigComplex to_bigcomplex(const Cyclotomic& c) {
    // Evaluate at zeta = exp(2 pi i / order).
    BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    BigComplex acc;
    for (size_t k = 0; k < c.coeffs.size(); ++k) {
        if (c.coeffs[k].is_zero()) continue;
        BigFloat angle = two_pi * BigFloat(k) / BigFloat(c.order);
        BigComplex zk(cos(angle), sin(angle));
        BigComplex term = to_bigcomplex(c.coeffs[k]) * zk;
        acc = acc + term;
    }
    return acc;
}

// -- Scalar ------------------------------------------------------------------

namespace {

// Promotes both operands to the weaker tag and applies the matching op.
template <typename RatOp, typename CycOp, typename CplxOp>
Scalar sc_binary(const Scalar& a, const Scalar& b, RatOp rop, CycOp cop, CplxOp xop) {
    const auto ta = tag_of(a), tb = tag_of(b);
    const auto t = std::max(ta, tb);
    switch (t) {
        case ScalarTag::rational:
            return rop(std::get<Rational>(a), std::get<Rational>(b));
        case ScalarTag::cyclotomic: {
            Cyclotomic ca = ta == ScalarTag::rational ? Cyclotomic(std::get<Rational>(a))
                                                      : std::get<Cyclotomic>(a);
            Cyclotomic cb = tb == ScalarTag::rational ? Cyclotomic(std::get<Rational>(b))
                                                      : std::get<Cyclotomic>(b);
            return cop(ca, cb);
        }
        case ScalarTag::bigcomplex:
            return xop(sc_to_bigcomplex(a), sc_to_bigcomplex(b));
    }
    fail(errc::invalid_argument, "unreachable scalar tag");
}

}  // namespace

Scalar sc_add(const Scalar& a, const Scalar& b) {
    return sc_binary(
        a, b, [](const Rational& x, const Rational& y) -> Scalar { return Rational(x + y); },
        [](const Cyclotomic& x, const Cyclotomic& y) -> Scalar { return cyc_add(x, y); },
        [](const BigComplex& x, const BigComplex& y) -> Scalar { return x + y; });
}

Scalar sc_sub(const Scalar& a, const Scalar& b) {
    return sc_binary(
        a, b, [](const Rational& x, const Rational& y) -> Scalar { return Rational(x - y); },
        [](const Cyclotomic& x, const Cyclotomic& y) -> Scalar { return cyc_sub(x, y); },
        [](const BigComplex& x, const BigComplex& y) -> Scalar { return x - y; });
}

Scalar sc_mul(const Scalar& a, const Scalar& b) {
    return sc_binary(
        a, b, [](const Rational& x, const Rational& y) -> Scalar { return Rational(x * y); },
        [](const Cyclotomic& x, const Cyclotomic& y) -> Scalar { return cyc_mul(x, y); },
        [](const BigComplex& x, const BigComplex& y) -> Scalar { return x * y; });
}

Scalar sc_div(const Scalar& a, const Scalar& b) {
    return sc_binary(
        a, b,
        [](const Rational& x, const Rational& y) -> Scalar {
            if (y.is_zero()) fail(errc::invalid_argument, "rational division by zero");
            return Rational(x / y);
        },
        [](const Cyclotomic& x, const Cyclotomic& y) -> Scalar { return cyc_div(x, y); },
        [](const BigComplex& x, const BigComplex& y) -> Scalar { return x / y; });
}

Scalar sc_neg(const Scalar& a) {
    switch (tag_of(a)) {
        case ScalarTag::rational: return Rational(-std::get<Rational>(a));
        case ScalarTag::cyclotomic: return cyc_neg(std::get<Cyclotomic>(a));
        case ScalarTag::bigcomplex: return -std::get<BigComplex>(a);
    }
    fail(errc::invalid_argument, "unreachable scalar tag");
}

bool sc_eq(const Scalar& a, const Scalar& b) {
    if (tag_of(a) == ScalarTag::bigcomplex || tag_of(b) == ScalarTag::bigcomplex) {
        BigComplex d = sc_to_bigcomplex(a) - sc_to_bigcomplex(b);
        return d.is_zero();
    }
    if (tag_of(a) == ScalarTag::rational && tag_of(b) == ScalarTag::rational)
        return std::get<Rational>(a) == std::get<Rational>(b);
    Cyclotomic ca = tag_of(a) == ScalarTag::rational ? Cyclotomic(std::get<Rational>(a))
                                                     : std::get<Cyclotomic>(a);
    Cyclotomic cb = tag_of(b) == ScalarTag::rational ? Cyclotomic(std::get<Rational>(b))
                                                     : std::get<Cyclotomic>(b);
    return cyc_eq(ca, cb);
}

bool sc_is_zero(const Scalar& a) {
    switch (tag_of(a)) {
        case ScalarTag::rational: return std::get<Rational>(a).is_zero();
        case ScalarTag::cyclotomic: return std::get<Cyclotomic>(a).is_zero();
        case ScalarTag::bigcomplex: return std::get<BigComplex>(a).is_zero();
    }
    return false;
}

unsigned sc_height_bits(const Scalar& a) {
    switch (tag_of(a)) {
        case ScalarTag::rational: return bit_height(std::get<Rational>(a));
        case ScalarTag::cyclotomic: return std::get<Cyclotomic>(a).height_bits();
        case ScalarTag::bigcomplex: return precision_bits();
    }
    return 0;
}

BigComplex sc_to_bigcomplex(const Scalar& a) {
    switch (tag_of(a)) {
        case ScalarTag::rational: return to_bigcomplex(std::get<Rational>(a));
        case ScalarTag::cyclotomic: return to_bigcomplex(std::get<Cyclotomic>(a));
        case ScalarTag::bigcomplex: return std::get<BigComplex>(a);
    }
    fail(errc::invalid_argument, "unreachable scalar tag");
}

const Rational& sc_rational(const Scalar& s) {
    if (tag_of(s) != ScalarTag::rational)
        fail(errc::invalid_argument, "scalar is not rational");
    return std::get<Rational>(s);
}

std::string scalar_str(const Scalar& s) {
    switch (tag_of(s)) {
        case ScalarTag::rational: return rational_str(std::get<Rational>(s));
        case ScalarTag::cyclotomic: {
            const auto& c = std::get<Cyclotomic>(s);
            std::string out = "zeta" + std::to_string(c.order) + "[";
            for (size_t i = 0; i < c.coeffs.size(); ++i) {
                if (i) out += ",";
                out += rational_str(c.coeffs[i]);
            }
            return out + "]";
        }
        case ScalarTag::bigcomplex: {
            const auto& z = std::get<BigComplex>(s);
            unsigned digits = static_cast<unsigned>(precision_bits() * 0.3010299957) + 2;
            return z.re.str(digits, std::ios_base::scientific) + (z.im.sign() < 0 ? "" : "+") +
                   z.im.str(digits, std::ios_base::scientific) + "i";
        }
    }
    return "?";
}

}  // namespace waring5
