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

#include "waring5/witness.hpp"

#include <json.hpp>
#include <set>

#include "waring5/rng.hpp"

namespace waring5 {

using json = nlohmann::ordered_json;

const char* exactness_name(Exactness e) {
    switch (e) {
        case Exactness::rational: return "rational";
        case Exactness::cyclotomic: return "cyclotomic";
        case Exactness::numeric: return "numeric";
    }
    return "?";
}

Exactness exactness_parse(const std::string& s) {
    if (s == "rational") return Exactness::rational;
    if (s == "cyclotomic") return Exactness::cyclotomic;
    if (s == "numeric") return Exactness::numeric;
    fail(errc::invalid_argument, "unknown exactness '" + s + "'");
}

Exactness exactness_meet(Exactness a, Exactness b) {
    return static_cast<Exactness>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

// ---------------------------------------------------------------------------
// decompose
// ---------------------------------------------------------------------------

Decomposition decompose(const SamplePoint& sp, const WitnessOptions& opts) {
    const JetScheme& A = sp.scheme;
    A.validate();
    const unsigned d = sp.d;
    if (sp.coefficients.size() != A.components.size())
        fail(errc::invalid_argument, "sample has mismatched coefficient blocks");

    Decomposition out;
    out.exactness = Exactness::rational;
    BigFloat worst_res = 0;

    for (size_t i = 0; i < A.components.size(); ++i) {
        const auto& comp = A.components[i];
        const auto& cs = sp.coefficients[i];
        if (cs.size() != comp.length)
            fail(errc::invalid_argument, "coefficient block length mismatch");
        if (cs.back().is_zero())
            fail(errc::invalid_argument, "top jet coefficient vanishes; not a valid sample");
        const std::string label = comp.length == 1 ? "reduced" : "A" + std::to_string(i + 1);

        if (comp.length == 1) {
            std::vector<Scalar> lf(comp.support().begin(), comp.support().end());
            out.terms.push_back({Scalar(cs[0]), std::move(lf), label});
            continue;
        }

        HomogPoly fi(A.m + 1, d);
        for (unsigned j = 0; j < comp.length; ++j)
            fi = poly_add(fi, poly_scale(jet_coefficient(comp.path, j, d), Scalar(cs[j])));

        SylvesterOptions sopts = opts.sylvester;
        sopts.seed = opts.seed ^ (0x9e3779b97f4a7c15ull * (i + 1));
        auto curve = curve_rank_decomposition(fi, comp.path, d, opts.rational_only, sopts);
        if (!curve)
            fail(errc::witness_search_failed,
                 "rational witness search exhausted for component " + std::to_string(i + 1));
        out.exactness = exactness_meet(out.exactness, curve->exactness);
        if (curve->residual && *curve->residual > worst_res) worst_res = *curve->residual;
        for (auto& t : curve->terms) out.terms.push_back({t.lambda, t.point, label});
    }

    if (out.exactness == Exactness::numeric) out.residual = worst_res;
    const size_t expected = rank_from_type(A.type(), d);
    if (out.terms.size() != expected)
        fail(errc::pullback_mismatch, "decomposition has " + std::to_string(out.terms.size()) +
                                          " terms, table says " + std::to_string(expected));
    return out;
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

namespace {

bool proportional_exact(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            Scalar cross = sc_sub(sc_mul(a[i], b[j]), sc_mul(a[j], b[i]));
            if (!sc_is_zero(cross)) return false;
        }
    return true;
}

bool proportional_numeric(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    BigFloat scale = 0, worst = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j) {
            BigComplex cross = sc_to_bigcomplex(a[i]) * sc_to_bigcomplex(b[j]) -
                               sc_to_bigcomplex(a[j]) * sc_to_bigcomplex(b[i]);
            BigFloat mag = sc_to_bigcomplex(a[i]).abs() * sc_to_bigcomplex(b[j]).abs() +
                           sc_to_bigcomplex(a[j]).abs() * sc_to_bigcomplex(b[i]).abs();
            if (mag > scale) scale = mag;
            if (cross.abs() > worst) worst = cross.abs();
        }
    if (scale.is_zero()) return true;
    return worst / scale < ldexp(BigFloat(1), -int(precision_bits() / 2));
}

}  // namespace

VerifyResult verify_decomposition(const HomogPoly& f, const Decomposition& D) {
    VerifyResult res;
    for (const auto& t : D.terms)
        if (t.linear_form.size() != f.nvars) {
            res.diagnostic = "linear form dimension mismatch";
            return res;
        }

    const bool numeric = D.exactness == Exactness::numeric;
    for (size_t i = 0; i < D.terms.size(); ++i)
        for (size_t j = i + 1; j < D.terms.size(); ++j) {
            bool prop = numeric
                            ? proportional_numeric(D.terms[i].linear_form, D.terms[j].linear_form)
                            : proportional_exact(D.terms[i].linear_form, D.terms[j].linear_form);
            if (prop) {
                res.diagnostic = "terms " + std::to_string(i) + " and " + std::to_string(j) +
                                 " use proportional linear forms";
                return res;
            }
        }

    if (!numeric) {
        HomogPoly acc(f.nvars, f.degree);
        for (const auto& t : D.terms)
            acc = poly_add(acc,
                           poly_scale(power_of_linear(linear_form(t.linear_form), f.degree),
                                      t.lambda));
        HomogPoly diff = poly_sub(acc, f);
        if (!diff.is_zero()) {
            res.diagnostic = "exact re-expansion differs from f";
            return res;
        }
        res.ok = true;
        return res;
    }

    // Numeric: coefficientwise residual relative to max |coeff of f|.
    std::map<ExponentVec, BigComplex, TermOrder> acc;
    for (const auto& t : D.terms) {
        std::vector<Scalar> lf(t.linear_form.size());
        for (size_t i = 0; i < lf.size(); ++i) lf[i] = sc_to_bigcomplex(t.linear_form[i]);
        HomogPoly pw = power_of_linear(linear_form(lf), f.degree);
        BigComplex lam = sc_to_bigcomplex(t.lambda);
        for (const auto& [e, c] : pw.terms) {
            auto it = acc.find(e);
            BigComplex add = lam * sc_to_bigcomplex(c);
            if (it == acc.end())
                acc.emplace(e, add);
            else
                it->second = it->second + add;
        }
    }
    BigFloat scale = 0;
    for (const auto& [e, c] : f.terms) {
        BigFloat m = sc_to_bigcomplex(c).abs();
        if (m > scale) scale = m;
    }
    if (scale.is_zero()) scale = 1;
    BigFloat worst = 0;
    for (const auto& [e, c] : acc) {
        const Scalar* fc = f.coeff(e);
        BigComplex target = fc ? sc_to_bigcomplex(*fc) : BigComplex();
        BigFloat diff = (c - target).abs();
        if (diff > worst) worst = diff;
    }
    for (const auto& [e, c] : f.terms)
        if (!acc.count(e)) {
            BigFloat diff = sc_to_bigcomplex(c).abs();
            if (diff > worst) worst = diff;
        }
    res.residual = worst / scale;
    res.ok = *res.residual < BigFloat("1e-40");
    if (!res.ok) res.diagnostic = "numeric residual above tolerance";
    return res;
}

// ---------------------------------------------------------------------------
// structure check
// ---------------------------------------------------------------------------

bool structure_check(const Decomposition& D, const JetScheme& A, unsigned d) {
    A.validate();
    const bool numeric = D.exactness == Exactness::numeric;
    const unsigned nv = A.m + 1;

    std::vector<size_t> block_count(A.components.size(), 0);
    size_t reduced_count = 0;

    auto in_span = [&](const JetComponent& comp, const std::vector<Scalar>& pt) {
        Matrix M(nv, comp.path.points.size());
        std::vector<Scalar> rhs(nv);
        for (unsigned r = 0; r < nv; ++r) {
            for (size_t c = 0; c < comp.path.points.size(); ++c)
                M(r, c) = numeric ? Scalar(to_bigcomplex(comp.path.points[c][r]))
                                  : Scalar(comp.path.points[c][r]);
            rhs[r] = numeric ? Scalar(sc_to_bigcomplex(pt[r])) : pt[r];
        }
        return solve_linear(M, rhs).has_value();
    };

    for (const auto& t : D.terms) {
        if (t.structure == "reduced") {
            bool matched = false;
            for (const auto& comp : A.components) {
                if (comp.length != 1) continue;
                std::vector<Scalar> sup(comp.support().begin(), comp.support().end());
                bool prop = numeric ? proportional_numeric(t.linear_form, sup)
                                    : proportional_exact(t.linear_form, sup);
                if (prop) {
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
            ++reduced_count;
            continue;
        }
        if (t.structure.size() < 2 || t.structure[0] != 'A') return false;
        size_t idx = std::stoul(t.structure.substr(1)) - 1;
        if (idx >= A.components.size()) return false;
        const auto& comp = A.components[idx];
        if (comp.length < 2) return false;
        if (!in_span(comp, t.linear_form)) return false;
        // The support of a non-reduced component never carries a term.
        std::vector<Scalar> sup(comp.support().begin(), comp.support().end());
        bool at_support = numeric ? proportional_numeric(t.linear_form, sup)
                                  : proportional_exact(t.linear_form, sup);
        if (at_support) return false;
        ++block_count[idx];
    }

    size_t expected_reduced = 0;
    for (size_t i = 0; i < A.components.size(); ++i) {
        const unsigned b = A.components[i].length;
        if (b == 1) {
            ++expected_reduced;
            if (block_count[i] != 0) return false;
        } else {
            const size_t expect = size_t(b - 1) * d - b + 2;
            if (block_count[i] != expect) return false;
        }
    }
    return reduced_count == expected_reduced;
}

// ---------------------------------------------------------------------------
// plane case
// ---------------------------------------------------------------------------

namespace {

/// Order of vanishing of the linear form l on the jet path, capped at the
/// component length.
unsigned contact_order(const std::vector<Rational>& l, const JetComponent& comp) {
    for (unsigned j = 0; j < comp.length; ++j) {
        Rational v(0);
        if (j < comp.path.points.size())
            for (size_t i = 0; i < l.size(); ++i) v += l[i] * comp.path.points[j][i];
        if (!v.is_zero()) return j;
    }
    return comp.length;
}

/// Gram matrix of a ternary quadratic in canonical coefficient order.
std::vector<std::vector<Rational>> conic_gram(const std::vector<Rational>& q) {
    // canonical degree-2 monomials in 3 vars: x^2, xy, xz, y^2, yz, z^2
    Rational h(1, 2);
    return {{q[0], q[1] * h, q[2] * h},
            {q[1] * h, q[3], q[4] * h},
            {q[2] * h, q[4] * h, q[5]}};
}

size_t gram_rank(const std::vector<std::vector<Rational>>& G) {
    Matrix M(3, 3);
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) M(r, c) = G[r][c];
    return mat_rank(M);
}

HomogPoly conic_poly(const std::vector<Rational>& q) {
    const auto& monos = monomials_of_degree(3, 2);
    HomogPoly f(3, 2);
    for (size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], Scalar(q[i]));
    return f;
}

bool lines_proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Scalar> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    return proportional_exact(sa, sb);
}

/// Candidate rational lines (linear forms) through the given point: the two
/// kernel basis vectors and small combinations.
std::vector<std::vector<Rational>> lines_through(const std::vector<Rational>& p) {
    Matrix M(1, 3);
    for (size_t c = 0; c < 3; ++c) M(0, c) = p[c];
    auto kern = mat_kernel(M);
    std::vector<std::vector<Rational>> out;
    auto push = [&](const std::vector<Rational>& l) { out.push_back(l); };
    std::vector<Rational> k0(3), k1(3);
    for (size_t i = 0; i < 3; ++i) k0[i] = std::get<Rational>(kern[0][i]);
    push(k0);
    if (kern.size() > 1) {
        for (size_t i = 0; i < 3; ++i) k1[i] = std::get<Rational>(kern[1][i]);
        push(k1);
        for (long s = 1; s <= 2; ++s) {
            std::vector<Rational> mix(3);
            for (size_t i = 0; i < 3; ++i) mix[i] = k0[i] + Rational(s) * k1[i];
            push(mix);
        }
    }
    return out;
}

/// One rational line through p, distinct (projectively) from all in `avoid`.
std::vector<Rational> line_through_avoiding(const std::vector<Rational>& p,
                                            const std::vector<std::vector<Rational>>& avoid) {
    for (const auto& cand : lines_through(p)) {
        bool bad = false;
        for (const auto& a : avoid)
            if (lines_proportional(cand, a)) bad = true;
        if (!bad) return cand;
    }
    fail(errc::recovery_inconsistent, "no admissible line through the residual point");
}

/// Order of vanishing of an arbitrary plane form on the jet path, capped at
/// the component length.
unsigned poly_contact_order(const HomogPoly& q, const JetComponent& comp) {
    const unsigned trunc = comp.length;
    std::vector<UPoly> coord(3);
    for (unsigned i = 0; i < 3; ++i) {
        UPoly s;
        for (const auto& pt : comp.path.points) s.push_back(pt[i]);
        s.resize(std::min<size_t>(s.size(), trunc));
        coord[i] = up_trim(std::move(s));
    }
    auto tmul = [&](const UPoly& a, const UPoly& b) {
        UPoly r(std::min<size_t>(trunc, a.size() + b.size()), Rational(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < b.size() && i + j < trunc; ++j) r[i + j] += a[i] * b[j];
        }
        return up_trim(std::move(r));
    };
    UPoly acc;
    for (const auto& [e, c] : q.terms) {
        UPoly term{sc_rational(c)};
        for (unsigned i = 0; i < 3 && !term.empty(); ++i)
            for (unsigned rep = 0; rep < e[i] && !term.empty(); ++rep)
                term = tmul(term, coord[i]);
        acc = up_add(acc, term);
    }
    for (unsigned j = 0; j < comp.length; ++j)
        if (j < acc.size() && !acc[j].is_zero()) return j;
    return comp.length;
}

std::vector<Scalar> to_scalar_vec(const std::vector<Rational>& v) {
    return std::vector<Scalar>(v.begin(), v.end());
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    Int n = numerator(x), d = denominator(x);
    if (!mpz_perfect_square_p(n.backend().data()) || !mpz_perfect_square_p(d.backend().data()))
        return std::nullopt;
    return rational_from(sqrt(n), sqrt(d));
}

/// Rational factorization of a rank-2 ternary conic into two lines, when
/// the splitting field is rational (discriminant a square).
std::optional<std::vector<std::vector<Rational>>> try_split_conic(const std::vector<Rational>& q) {
    auto G = conic_gram(q);
    Matrix Gm(3, 3);
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c) Gm(r, c) = G[r][c];
    auto kern = mat_kernel(Gm);
    if (kern.size() != 1) return std::nullopt;  // not rank 2
    std::vector<Rational> s(3);
    for (size_t i = 0; i < 3; ++i) s[i] = std::get<Rational>(kern[0][i]);

    HomogPoly Q = conic_poly(q);
    // A line avoiding the singular point, parametrized p + t r.
    std::vector<std::vector<Rational>> candidates{
        {Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)},
        {Rational(0), Rational(0), Rational(1)}, {Rational(1), Rational(1), Rational(0)}};
    for (size_t pi = 0; pi < candidates.size(); ++pi)
        for (size_t ri = pi + 1; ri < candidates.size(); ++ri) {
            const auto& p = candidates[pi];
            const auto& r = candidates[ri];
            // Restrict q to the (p, r) line: a(t) t^2 + b t + c.
            auto eval2 = [&](const Rational& t) {
                std::vector<Scalar> pt(3);
                for (size_t i = 0; i < 3; ++i) pt[i] = Scalar(p[i] + t * r[i]);
                return std::get<Rational>(poly_eval(Q, pt));
            };
            Rational c0 = eval2(Rational(0));
            Rational c1 = eval2(Rational(1));
            Rational cm1 = eval2(Rational(-1));
            Rational a2 = (c1 + cm1 - 2 * c0) / 2;
            Rational b1 = (c1 - cm1) / 2;
            if (a2.is_zero()) continue;  // r on the conic; pick another chart
            auto disc = rational_sqrt(b1 * b1 - 4 * a2 * c0);
            if (!disc) return std::nullopt;
            Rational t1 = (-b1 + *disc) / (2 * a2);
            Rational t2 = (-b1 - *disc) / (2 * a2);
            if (t1 == t2) continue;
            std::vector<std::vector<Rational>> lines;
            for (const Rational& t : {t1, t2}) {
                std::vector<Rational> pt(3);
                for (size_t i = 0; i < 3; ++i) pt[i] = p[i] + t * r[i];
                Matrix M(2, 3);
                for (size_t c = 0; c < 3; ++c) {
                    M(0, c) = s[c];
                    M(1, c) = pt[c];
                }
                auto lk = mat_kernel(M);
                if (lk.size() != 1) return std::nullopt;
                std::vector<Rational> l(3);
                for (size_t i = 0; i < 3; ++i) l[i] = std::get<Rational>(lk[0][i]);
                lines.push_back(std::move(l));
            }
            return lines;
        }
    return std::nullopt;
}

}  // namespace

PlaneBound plane_upper_bound(const HomogPoly& f, const JetScheme& A, unsigned d,
                             const WitnessOptions& opts) {
    A.validate();
    if (A.m != 2 || f.nvars != 3) fail(errc::not_planar, "plane case expects m = 2");
    if (d < 9) fail(errc::degree_too_small, "plane bounds stated for d >= 9");
    {
        std::vector<std::vector<Scalar>> rows;
        for (const auto& comp : A.components)
            for (const auto& p : comp.path.points) rows.push_back(to_scalar_vec(p));
        if (mat_rank(matrix_from_rows(rows, 3)) > 3)
            fail(errc::not_planar, "scheme does not fit in a plane");
    }
    // Membership f in <nu_d(A)>.
    {
        std::vector<std::vector<Scalar>> rows;
        for (const auto& comp : A.components)
            for (unsigned j = 0; j < comp.length; ++j)
                rows.push_back(coefficient_vector(jet_coefficient(comp.path, j, d)));
        Matrix M = matrix_from_rows(rows, monomial_count(3, d)).transposed();
        if (!solve_linear(M, coefficient_vector(f)))
            fail(errc::not_in_span, "f is outside the span of the scheme");
    }

    // Conics through A.
    auto kern = mat_kernel(scheme_condition_matrix(A, 2));
    if (kern.empty()) fail(errc::recovery_inconsistent, "degree-5 plane scheme admits a conic");
    auto kernel_conic = [&](size_t i) {
        std::vector<Rational> q(6);
        for (size_t j = 0; j < 6; ++j) q[j] = std::get<Rational>(kern[i][j]);
        return q;
    };

    PlaneBound out;
    std::vector<Rational> reduced_conic;
    std::vector<std::vector<Rational>> factor_lines;  // known factors when reducible

    for (size_t i = 0; i < kern.size() && reduced_conic.empty(); ++i) {
        auto q = kernel_conic(i);
        if (gram_rank(conic_gram(q)) >= 2) reduced_conic = q;
    }
    if (reduced_conic.empty() && kern.size() >= 2) {
        for (long s = -3; s <= 3 && reduced_conic.empty(); ++s)
            for (long t = 1; t <= 3 && reduced_conic.empty(); ++t) {
                std::vector<Rational> q(6);
                auto q0 = kernel_conic(0), q1 = kernel_conic(1);
                for (size_t j = 0; j < 6; ++j) q[j] = Rational(s) * q0[j] + Rational(t) * q1[j];
                if (gram_rank(conic_gram(q)) >= 2) reduced_conic = q;
            }
    }

    if (!reduced_conic.empty()) {
        out.bound = 2 * d;
        out.curve = conic_poly(reduced_conic);
        if (gram_rank(conic_gram(reduced_conic)) == 2) {
            auto split = try_split_conic(reduced_conic);
            if (split) factor_lines = *split;
        }
    } else {
        // The conic system is a single double line 2L.
        auto q = kernel_conic(0);
        auto G = conic_gram(q);
        std::vector<Rational> l;
        for (size_t r = 0; r < 3 && l.empty(); ++r) {
            bool nonzero = false;
            for (size_t c = 0; c < 3; ++c)
                if (!G[r][c].is_zero()) nonzero = true;
            if (nonzero) l = G[r];
        }
        unsigned contact = 0;
        for (const auto& comp : A.components) contact += contact_order(l, comp);
        if (contact < 3)
            fail(errc::recovery_inconsistent, "double-line conic with contact < 3");

        // Residual demands: components whose contact with L falls short.
        std::vector<const JetComponent*> rest;
        for (const auto& comp : A.components)
            if (contact_order(l, comp) < comp.length) rest.push_back(&comp);

        if (contact >= 4) {
            // Residual is at most a point; any second line through it works.
            std::vector<Rational> res_point{Rational(1), Rational(0), Rational(0)};
            if (!rest.empty()) res_point = rest.front()->support();
            auto dline = line_through_avoiding(res_point, {l});
            out.bound = 2 * d;
            out.curve = poly_mul(linear_form_rational(l), linear_form_rational(dline));
            factor_lines = {l, dline};
        } else {
            // Residual of degree 2: two distinct lines != L through the
            // residual supports absorb it (each contributes contact >= 1 per
            // support, which is all a degree-2 deficiency needs).
            std::vector<Rational> d1, d2;
            if (rest.size() == 2) {
                d1 = line_through_avoiding(rest[0]->support(), {l});
                d2 = line_through_avoiding(rest[1]->support(), {l, d1});
            } else if (rest.size() == 1) {
                d1 = line_through_avoiding(rest[0]->support(), {l});
                d2 = line_through_avoiding(rest[0]->support(), {l, d1});
            } else {
                fail(errc::recovery_inconsistent, "contact 3 with no residual components");
            }
            out.bound = 3 * d;
            out.curve = poly_mul(poly_mul(linear_form_rational(l), linear_form_rational(d1)),
                                 linear_form_rational(d2));
            factor_lines = {l, d1, d2};
        }
    }

    // The returned curve must really contain the scheme.
    for (const auto& comp : A.components)
        if (poly_contact_order(out.curve, comp) < comp.length)
            fail(errc::recovery_inconsistent, "constructed plane curve misses the scheme");

    // Optional decomposition: random rational points on the reduced curve.
    Rng rng(opts.seed ^ 0x9137ull);
    const size_t want = out.bound;
    for (unsigned attempt = 0; attempt < opts.plane_point_tries; ++attempt) {
        std::vector<std::vector<Rational>> pts;
        if (!factor_lines.empty()) {
            // Reducible curve: spread points across the lines.
            for (size_t li = 0; li < factor_lines.size(); ++li) {
                const auto& ln = factor_lines[li];
                Matrix M(1, 3);
                for (size_t c = 0; c < 3; ++c) M(0, c) = ln[c];
                auto k2 = mat_kernel(M);  // two spanning points of the line
                size_t quota = want / factor_lines.size() + (li < want % factor_lines.size());
                std::set<Rational> used;
                while (quota--) {
                    Rational t = rng.rational(200);
                    if (!used.insert(t).second) continue;
                    std::vector<Rational> p(3);
                    for (size_t c = 0; c < 3; ++c)
                        p[c] = std::get<Rational>(k2[0][c]) + t * std::get<Rational>(k2[1][c]);
                    pts.push_back(std::move(p));
                }
            }
        } else if (gram_rank(conic_gram(reduced_conic)) == 3) {
            // Smooth conic: stereographic projection from a support point of
            // A (which lies on every conic through A). Chord directions come
            // from a generic pencil; tangent and on-conic directions are
            // skipped.
            const auto& q0 = A.components.front().support();
            HomogPoly Q = out.curve;
            std::vector<Scalar> q0s = to_scalar_vec(q0);
            std::vector<Rational> grad_q0(3);
            for (unsigned var = 0; var < 3; ++var)
                grad_q0[var] = std::get<Rational>(poly_eval(poly_derivative(Q, var), q0s));
            std::set<Rational> used;
            unsigned spins = 0;
            while (pts.size() < want && spins++ < 4000) {
                Rational t = rng.rational(200);
                if (!used.insert(t).second) continue;
                // Direction v(t) = e1 + t e2; second intersection of the
                // chord q0 + s v with s = -(grad Q(q0).v) / Q(v).
                std::vector<Rational> v{Rational(0), Rational(1), t};
                Scalar qv = poly_eval(Q, to_scalar_vec(v));
                if (sc_is_zero(qv)) continue;
                Rational num(0);
                for (unsigned var = 0; var < 3; ++var) num += grad_q0[var] * v[var];
                Rational s = -num / std::get<Rational>(qv);
                if (s.is_zero()) continue;
                std::vector<Rational> p(3);
                for (size_t c = 0; c < 3; ++c) p[c] = q0[c] + s * v[c];
                pts.push_back(std::move(p));
            }
        } else {
            break;  // rank-2 conic without a rational factorization: bound only
        }
        if (pts.size() != want) continue;

        // Membership solve for f against the sampled points.
        std::vector<std::vector<Scalar>> rows;
        bool degenerate = false;
        {
            std::set<std::vector<Rational>> distinct;
            for (const auto& p : pts)
                if (!distinct.insert(p).second) degenerate = true;
        }
        if (degenerate) continue;
        for (const auto& p : pts)
            rows.push_back(coefficient_vector(power_of_linear(linear_form_rational(p), d)));
        Matrix M = matrix_from_rows(rows, monomial_count(3, d)).transposed();
        auto lam = solve_linear(M, coefficient_vector(f));
        if (!lam) continue;
        Decomposition dec;
        dec.exactness = Exactness::rational;
        for (size_t i = 0; i < pts.size(); ++i) {
            if (sc_is_zero((*lam)[i])) continue;
            dec.terms.push_back({(*lam)[i], to_scalar_vec(pts[i]), "curve"});
        }
        if (verify_decomposition(f, dec).ok) {
            out.decomposition = std::move(dec);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

json scalar_to_json(const Scalar& s) {
    switch (tag_of(s)) {
        case ScalarTag::rational: return rational_str(std::get<Rational>(s));
        case ScalarTag::cyclotomic: {
            const auto& c = std::get<Cyclotomic>(s);
            json j;
            j["order"] = c.order;
            j["coeffs"] = json::array();
            for (const auto& x : c.coeffs) j["coeffs"].push_back(rational_str(x));
            return j;
        }
        case ScalarTag::bigcomplex: {
            const auto& z = std::get<BigComplex>(s);
            unsigned digits = unsigned(precision_bits() * 0.3010299957) + 2;
            json j;
            j["re"] = z.re.str(digits, std::ios_base::scientific);
            j["im"] = z.im.str(digits, std::ios_base::scientific);
            return j;
        }
    }
    fail(errc::invalid_argument, "unreachable scalar tag");
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.contains("order")) {
        std::vector<Rational> coeffs;
        for (const auto& x : j.at("coeffs")) coeffs.push_back(parse_rational(x.get<std::string>()));
        return Cyclotomic(j.at("order").get<unsigned>(), std::move(coeffs));
    }
    return BigComplex(BigFloat(j.at("re").get<std::string>()),
                      BigFloat(j.at("im").get<std::string>()));
}

}  // namespace

std::string decomposition_to_json(const Decomposition& D) {
    json j;
    j["terms"] = json::array();
    for (const auto& t : D.terms) {
        json jt;
        jt["lambda"] = scalar_to_json(t.lambda);
        jt["linear_form"] = json::array();
        for (const auto& c : t.linear_form) jt["linear_form"].push_back(scalar_to_json(c));
        jt["structure"] = t.structure;
        j["terms"].push_back(jt);
    }
    j["exactness"] = exactness_name(D.exactness);
    if (D.residual) {
        unsigned digits = unsigned(precision_bits() * 0.3010299957) + 2;
        j["residual"] = D.residual->str(digits, std::ios_base::scientific);
    }
    return j.dump();
}

Decomposition decomposition_from_json(const std::string& text) {
    json j = json::parse(text);
    Decomposition D;
    D.exactness = exactness_parse(j.at("exactness").get<std::string>());
    for (const auto& jt : j.at("terms")) {
        Decomposition::Term t;
        t.lambda = scalar_from_json(jt.at("lambda"));
        for (const auto& c : jt.at("linear_form")) t.linear_form.push_back(scalar_from_json(c));
        t.structure = jt.value("structure", std::string("?"));
        D.terms.push_back(std::move(t));
    }
    if (j.contains("residual")) D.residual = BigFloat(j.at("residual").get<std::string>());
    return D;
}

}  // namespace waring5
