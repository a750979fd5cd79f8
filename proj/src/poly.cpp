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

#include "waring5/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace waring5 {

bool TermOrder::operator()(const ExponentVec& a, const ExponentVec& b) const {
    // Graded lex, x0 dominant: higher total degree first, then descending
    // exponent tuples, so x0^d is the first monomial of its degree.
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void HomogPoly::add_term(const ExponentVec& e, const Scalar& c) {
    if (sc_is_zero(c)) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second = sc_add(it->second, c);
    if (sc_is_zero(it->second)) terms.erase(it);
}

const Scalar* HomogPoly::coeff(const ExponentVec& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? nullptr : &it->second;
}

bool HomogPoly::all_rational() const {
    for (const auto& [e, c] : terms)
        if (tag_of(c) != ScalarTag::rational) return false;
    return true;
}

HomogPoly poly_add(const HomogPoly& a, const HomogPoly& b) {
    if (a.nvars != b.nvars) fail(errc::var_mismatch, "poly_add variable counts differ");
    if (a.degree != b.degree) fail(errc::degree_mismatch, "poly_add degrees differ");
    HomogPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

HomogPoly poly_sub(const HomogPoly& a, const HomogPoly& b) {
    if (a.nvars != b.nvars) fail(errc::var_mismatch, "poly_sub variable counts differ");
    if (a.degree != b.degree) fail(errc::degree_mismatch, "poly_sub degrees differ");
    HomogPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, sc_neg(c));
    return r;
}

HomogPoly poly_scale(const HomogPoly& a, const Scalar& c) {
    HomogPoly r(a.nvars, a.degree);
    if (sc_is_zero(c)) return r;
    for (const auto& [e, x] : a.terms) r.add_term(e, sc_mul(x, c));
    return r;
}

HomogPoly poly_mul(const HomogPoly& a, const HomogPoly& b) {
    if (a.nvars != b.nvars) fail(errc::var_mismatch, "poly_mul variable counts differ");
    HomogPoly r(a.nvars, a.degree + b.degree);
    ExponentVec e(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (unsigned i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, sc_mul(ca, cb));
        }
    return r;
}

bool poly_eq(const HomogPoly& a, const HomogPoly& b) {
    if (a.nvars != b.nvars || a.degree != b.degree || a.terms.size() != b.terms.size())
        return false;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    for (; ia != a.terms.end(); ++ia, ++ib)
        if (ia->first != ib->first || !sc_eq(ia->second, ib->second)) return false;
    return true;
}

namespace {
Scalar sc_pow(const Scalar& x, unsigned k) {
    Scalar acc = Rational(1);
    for (unsigned i = 0; i < k; ++i) acc = sc_mul(acc, x);
    return acc;
}
}  // namespace

Scalar poly_eval(const HomogPoly& a, const std::vector<Scalar>& x) {
    if (x.size() != a.nvars) fail(errc::var_mismatch, "poly_eval point dimension");
    Scalar acc = Rational(0);
    for (const auto& [e, c] : a.terms) {
        Scalar t = c;
        for (unsigned i = 0; i < a.nvars; ++i)
            if (e[i]) t = sc_mul(t, sc_pow(x[i], e[i]));
        acc = sc_add(acc, t);
    }
    return acc;
}

HomogPoly poly_derivative(const HomogPoly& a, unsigned var) {
    if (var >= a.nvars) fail(errc::var_mismatch, "derivative variable out of range");
    HomogPoly r(a.nvars, a.degree ? a.degree - 1 : 0);
    for (const auto& [e, c] : a.terms) {
        if (!e[var]) continue;
        ExponentVec d = e;
        --d[var];
        r.add_term(d, sc_mul(c, Scalar(Rational(long(e[var])))));
    }
    return r;
}

HomogPoly linear_form(const std::vector<Scalar>& c) {
    HomogPoly l(unsigned(c.size()), 1);
    ExponentVec e(c.size(), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        e[i] = 1;
        l.add_term(e, c[i]);
        e[i] = 0;
    }
    return l;
}

HomogPoly linear_form_rational(const std::vector<Rational>& c) {
    std::vector<Scalar> s(c.begin(), c.end());
    return linear_form(s);
}

std::vector<Rational> CurvePath::eval(const Rational& t) const {
    std::vector<Rational> out(points.front().size(), Rational(0));
    Rational tk(1);
    for (const auto& p : points) {
        for (size_t i = 0; i < out.size(); ++i) out[i] += tk * p[i];
        tk *= t;
    }
    return out;
}

std::vector<Scalar> CurvePath::eval_h(const Scalar& u, const Scalar& v) const {
    const unsigned e = path_degree();
    std::vector<Scalar> out(points.front().size(), Scalar(Rational(0)));
    for (unsigned j = 0; j <= e; ++j) {
        Scalar w = sc_mul(sc_pow(u, j), sc_pow(v, e - j));
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = sc_add(out[i], sc_mul(w, Scalar(points[j][i])));
    }
    return out;
}

// -- factorials --------------------------------------------------------------

Int factorial(unsigned n) {
    static std::vector<Int> cache{Int(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() * Int(unsigned(cache.size())));
    return cache[n];
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// -- apolarity ----------------------------------------------------------------

HomogPoly apolar_apply(const HomogPoly& g, const HomogPoly& f) {
    if (g.nvars != f.nvars) fail(errc::var_mismatch, "apolar_apply variable counts differ");
    if (g.degree > f.degree) fail(errc::degree_mismatch, "apolar_apply degree of g exceeds f");
    HomogPoly r(f.nvars, f.degree - g.degree);
    ExponentVec diff(f.nvars);
    for (const auto& [alpha, gc] : g.terms) {
        for (const auto& [beta, fc] : f.terms) {
            bool ok = true;
            for (unsigned i = 0; i < f.nvars; ++i) {
                if (beta[i] < alpha[i]) {
                    ok = false;
                    break;
                }
                diff[i] = beta[i] - alpha[i];
            }
            if (!ok) continue;
            // Falling factorial prod_i beta_i!/(beta_i - alpha_i)!.
            Int ff(1);
            for (unsigned i = 0; i < f.nvars; ++i)
                for (unsigned k = 0; k < alpha[i]; ++k) ff *= Int(beta[i] - k);
            r.add_term(diff, sc_mul(sc_mul(gc, fc), Scalar(Rational(ff))));
        }
    }
    return r;
}

HomogPoly power_of_linear(const HomogPoly& l, unsigned d) {
    if (l.degree != 1) fail(errc::degree_mismatch, "power_of_linear needs a linear form");
    HomogPoly r(l.nvars, d);
    if (l.is_zero()) return r;
    // Multinomial expansion over the support of l.
    std::vector<unsigned> vars;
    std::vector<Scalar> coef;
    for (const auto& [e, c] : l.terms) {
        for (unsigned i = 0; i < l.nvars; ++i)
            if (e[i]) vars.push_back(i);
        coef.push_back(c);
    }
    std::vector<unsigned> expo(vars.size(), 0);
    ExponentVec mono(l.nvars, 0);
    // Enumerate compositions of d over the support.
    std::function<void(size_t, unsigned, Scalar)> rec = [&](size_t idx, unsigned rem, Scalar acc) {
        if (idx + 1 == vars.size()) {
            expo[idx] = rem;
            Scalar c = sc_mul(acc, sc_pow(coef[idx], rem));
            Int multi = factorial(d);
            for (unsigned k : expo) multi /= factorial(k);
            std::fill(mono.begin(), mono.end(), 0);
            for (size_t i = 0; i < vars.size(); ++i) mono[vars[i]] = expo[i];
            r.add_term(mono, sc_mul(c, Scalar(Rational(multi))));
            return;
        }
        for (unsigned k = 0; k <= rem; ++k) {
            expo[idx] = k;
            rec(idx + 1, rem - k, sc_mul(acc, sc_pow(coef[idx], k)));
        }
    };
    rec(0, d, Scalar(Rational(1)));
    return r;
}

HomogPoly jet_coefficient(const CurvePath& c, unsigned j, unsigned d) {
    const unsigned nv = c.nvars();
    const unsigned e = c.path_degree();
    HomogPoly r(nv, d);
    if (j > e * d) return r;  // the t^j coefficient vanishes beyond e*d

    // Linear forms p_i · x for each path point.
    std::vector<HomogPoly> forms;
    forms.reserve(e + 1);
    for (const auto& p : c.points) forms.push_back(linear_form_rational(p));

    // Enumerate k_1..k_e >= 0 with sum i*k_i = j and sum k_i <= d; then
    // k_0 = d - sum k_i and the term is the multinomial times the product
    // of jet factor powers.
    std::vector<unsigned> k(e + 1, 0);
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned i, unsigned wrem,
                                                                unsigned crem) {
        if (i == 0) {
            if (wrem != 0) return;
            k[0] = crem;
            Int multi = factorial(d);
            for (unsigned idx = 0; idx <= e; ++idx) multi /= factorial(k[idx]);
            HomogPoly term(nv, 0);
            term.add_term(ExponentVec(nv, 0), Scalar(Rational(multi)));
            for (unsigned idx = 0; idx <= e; ++idx)
                if (k[idx]) term = poly_mul(term, power_of_linear(forms[idx], k[idx]));
            r = poly_add(r, term);
            return;
        }
        for (unsigned ki = 0; ki * i <= wrem && ki <= crem; ++ki) {
            k[i] = ki;
            rec(i - 1, wrem - ki * i, crem - ki);
        }
        k[i] = 0;
    };
    rec(e, j, d);
    return r;
}

// -- linear substitution -------------------------------------------------------

namespace {

using TermVec = std::vector<std::pair<ExponentVec, Scalar>>;

/// Horner-style substitution, recursing over variables. terms[lo..hi) all
/// agree on exponents of variables < v and are sorted canonically (so they
/// are grouped by descending exponent of variable v).
HomogPoly subst_range(const TermVec& terms, size_t lo, size_t hi, unsigned v,
                      const std::vector<HomogPoly>& images, unsigned out_deg_left,
                      unsigned out_nvars) {
    const unsigned nvars_in = unsigned(terms.front().first.size());
    HomogPoly zero(out_nvars, 0);
    if (v == nvars_in) {
        HomogPoly c(out_nvars, 0);
        for (size_t i = lo; i < hi; ++i) c.add_term(ExponentVec(out_nvars, 0), terms[i].second);
        (void)out_deg_left;
        return c;
    }
    // Group by exponent of variable v (descending in canonical order).
    HomogPoly acc(out_nvars, 0);
    bool first = true;
    unsigned prev_exp = 0;
    size_t i = lo;
    while (i < hi) {
        unsigned ev = terms[i].first[v];
        size_t j = i;
        while (j < hi && terms[j].first[v] == ev) ++j;
        HomogPoly part = subst_range(terms, i, j, v + 1, images, out_deg_left - ev, out_nvars);
        if (first) {
            acc = std::move(part);
            prev_exp = ev;
            first = false;
        } else {
            for (unsigned s = 0; s < prev_exp - ev; ++s) acc = poly_mul(acc, images[v]);
            if (!part.is_zero()) {
                if (acc.is_zero()) acc = HomogPoly(out_nvars, part.degree);
                acc = poly_add(acc, part);
            }
            prev_exp = ev;
        }
        i = j;
    }
    for (unsigned s = 0; s < prev_exp; ++s) acc = poly_mul(acc, images[v]);
    return acc;
}

}  // namespace

HomogPoly substitute_linear(const HomogPoly& f, const Matrix& M) {
    if (M.rows() != f.nvars || M.cols() != f.nvars)
        fail(errc::var_mismatch, "substitution matrix must be (m+1)x(m+1)");
    if (f.is_zero()) return f;
    std::vector<HomogPoly> images;
    images.reserve(f.nvars);
    for (unsigned i = 0; i < f.nvars; ++i) {
        std::vector<Scalar> row(f.nvars);
        for (unsigned j = 0; j < f.nvars; ++j) row[j] = M(i, j);
        images.push_back(linear_form(row));
    }
    TermVec terms(f.terms.begin(), f.terms.end());
    HomogPoly r = subst_range(terms, 0, terms.size(), 0, images, f.degree, f.nvars);
    r.degree = f.degree;
    r.nvars = f.nvars;
    return r;
}

// -- canonical monomial enumeration -------------------------------------------

namespace {

void enumerate_rec(unsigned nvars, unsigned d, unsigned v, ExponentVec& cur,
                   std::vector<ExponentVec>& out) {
    if (v + 1 == nvars) {
        cur[v] = d;
        out.push_back(cur);
        return;
    }
    for (unsigned k = d + 1; k-- > 0;) {
        cur[v] = k;
        enumerate_rec(nvars, d - k, v + 1, cur, out);
    }
    cur[v] = 0;
}

}  // namespace

const std::vector<ExponentVec>& monomials_of_degree(unsigned nvars, unsigned d) {
    static std::map<std::pair<unsigned, unsigned>, std::vector<ExponentVec>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, d);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<ExponentVec> out;
        out.reserve(size_t(monomial_count(nvars, d)));
        ExponentVec cur(nvars, 0);
        enumerate_rec(nvars, d, 0, cur, out);
        it = cache.emplace(key, std::move(out)).first;
    }
    return it->second;
}

size_t monomial_count(unsigned nvars, unsigned d) {
    Int c = binomial(nvars - 1 + d, d);
    return c.convert_to<size_t>();
}

size_t monomial_index(unsigned nvars, unsigned d, const ExponentVec& e) {
    const auto& all = monomials_of_degree(nvars, d);
    auto it = std::lower_bound(all.begin(), all.end(), e, TermOrder{});
    if (it == all.end() || *it != e) fail(errc::invalid_argument, "monomial not of this degree");
    return size_t(it - all.begin());
}

std::vector<Scalar> coefficient_vector(const HomogPoly& f) {
    const auto& all = monomials_of_degree(f.nvars, f.degree);
    std::vector<Scalar> out(all.size(), Scalar(Rational(0)));
    for (const auto& [e, c] : f.terms) out[monomial_index(f.nvars, f.degree, e)] = c;
    return out;
}

HomogPoly poly_from_coefficients(unsigned nvars, unsigned d, const std::vector<Scalar>& c) {
    const auto& all = monomials_of_degree(nvars, d);
    if (c.size() != all.size()) fail(errc::invalid_argument, "coefficient vector length");
    HomogPoly f(nvars, d);
    for (size_t i = 0; i < all.size(); ++i) f.add_term(all[i], c[i]);
    return f;
}

// -- text grammar ---------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

std::string take_number(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) fail(errc::invalid_argument, "expected digits in polynomial text");
    return c.s.substr(start, c.i - start);
}

unsigned take_small_uint(Cursor& c) {
    std::string n = take_number(c);
    if (n.size() > 6) fail(errc::invalid_argument, "index or exponent out of range");
    return unsigned(std::stoul(n));
}

}  // namespace

HomogPoly parse_poly(const std::string& text, unsigned min_vars) {
    Cursor c{text};
    struct RawTerm {
        Rational coeff;
        std::map<unsigned, unsigned> powers;
        unsigned total = 0;
    };
    std::vector<RawTerm> raw;
    unsigned max_var = 0;
    bool any = false;

    while (!c.eof()) {
        Rational sign(1);
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.take() == '-') sign = -1;
        } else if (any) {
            fail(errc::invalid_argument, "expected '+' or '-' between terms");
        }
        if (c.eof()) fail(errc::invalid_argument, "dangling sign in polynomial text");

        RawTerm t;
        t.coeff = sign;
        bool saw_factor = false;
        for (;;) {
            if (c.eof()) break;
            char ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num = take_number(c);
                std::string den = "1";
                if (!c.eof() && c.peek() == '/') {
                    c.take();
                    den = take_number(c);
                }
                t.coeff *= rational_from(Int(num), Int(den));
                saw_factor = true;
            } else if (ch == 'x' || ch == 'X') {
                c.take();
                unsigned idx = take_small_uint(c);
                unsigned pw = 1;
                if (!c.eof() && c.peek() == '^') {
                    c.take();
                    pw = take_small_uint(c);
                }
                t.powers[idx] += pw;
                t.total += pw;
                max_var = std::max(max_var, idx);
                saw_factor = true;
            } else {
                fail(errc::invalid_argument, std::string("unexpected character '") + ch +
                                                 "' in polynomial text");
            }
            if (c.eof()) break;
            char nx = c.peek();
            if (nx == '*') {
                c.take();
                continue;
            }
            break;
        }
        if (!saw_factor) fail(errc::invalid_argument, "empty term in polynomial text");
        raw.push_back(std::move(t));
        any = true;
    }
    if (raw.empty()) fail(errc::invalid_argument, "empty polynomial text");

    unsigned degree = raw.front().total;
    for (const auto& t : raw)
        if (t.total != degree)
            fail(errc::invalid_argument, "polynomial text is not homogeneous");
    unsigned nvars = std::max(max_var + 1, min_vars);
    HomogPoly f(nvars, degree);
    for (const auto& t : raw) {
        ExponentVec e(nvars, 0);
        for (auto [idx, pw] : t.powers) e[idx] = pw;
        f.add_term(e, Scalar(t.coeff));
    }
    return f;
}

std::string poly_str(const HomogPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms) {
        Rational r;
        bool rational_coeff = tag_of(c) == ScalarTag::rational;
        if (rational_coeff) r = std::get<Rational>(c);

        if (first) {
            if (rational_coeff && r < 0) out << "-";
            first = false;
        } else {
            out << (rational_coeff && r < 0 ? " - " : " + ");
        }

        std::string vars;
        for (unsigned i = 0; i < f.nvars; ++i) {
            if (!e[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }

        if (!rational_coeff) {
            out << scalar_str(c);
            if (!vars.empty()) out << "*" << vars;
            continue;
        }
        Rational a = abs(r);
        if (vars.empty()) {
            out << rational_str(a);
        } else if (a == 1) {
            out << vars;
        } else {
            out << rational_str(a) << "*" << vars;
        }
    }
    return out.str();
}

}  // namespace waring5
