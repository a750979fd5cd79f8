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

#include "waring5/classify.hpp"

#include <json.hpp>
#include <map>
#include <set>

#include "waring5/rng.hpp"
#include "waring5/sylvester.hpp"
#include "waring5/upoly.hpp"

namespace waring5 {

using json = nlohmann::ordered_json;

size_t rank_from_type(const SchemeType& type, unsigned d) {
    if (type.total() != 5) fail(errc::bad_type, "type degrees must sum to 5");
    if (d < 9) fail(errc::bad_type, "rank table requires d >= 9");
    const auto& b = type.degrees;
    switch (b.size()) {
        case 1: return 4 * size_t(d) - 3;                       // (1;5)
        case 2: return 3 * size_t(d) - 1;                       // (2;3,2), (2;4,1)
        case 3: return 2 * size_t(d) + 1;                       // (3;3,1,1), (3;2,2,1)
        case 4: return size_t(d) + 3;                           // (4;2,1,1,1)
        case 5: return 5;                                       // (5;1,1,1,1,1)
    }
    fail(errc::bad_type, "impossible component count");
}

bool RankReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return !checks.empty();
}

// ---------------------------------------------------------------------------
// Certificate verification
// ---------------------------------------------------------------------------

namespace {

struct Membership {
    bool ok = false;
    std::vector<Scalar> coeffs;  // jet coordinates when ok
};

Membership membership_solve(const HomogPoly& f, const JetScheme& A, unsigned d,
                            const std::vector<int>& truncate_by) {
    // Rows of the span matrix: jets of each component up to its (possibly
    // truncated) length.
    std::vector<HomogPoly> jets;
    for (size_t i = 0; i < A.components.size(); ++i) {
        const auto& comp = A.components[i];
        unsigned len = comp.length - unsigned(truncate_by[i]);
        for (unsigned j = 0; j < len; ++j) jets.push_back(jet_coefficient(comp.path, j, d));
    }
    if (jets.empty()) return {};
    std::map<ExponentVec, size_t, TermOrder> support;
    for (const auto& jet : jets)
        for (const auto& [mono, c] : jet.terms) support.emplace(mono, 0);
    for (const auto& [mono, c] : f.terms)
        if (!support.count(mono)) return {};  // f off the span for sure
    {
        size_t idx = 0;
        for (auto& [mono, i] : support) i = idx++;
    }
    Matrix M(support.size(), jets.size());
    for (size_t k = 0; k < jets.size(); ++k)
        for (const auto& [mono, c] : jets[k].terms) M(support.at(mono), k) = c;
    std::vector<Scalar> rhs(support.size(), Scalar(Rational(0)));
    for (const auto& [mono, c] : f.terms) rhs[support.at(mono)] = c;
    auto sol = solve_linear(M, rhs);
    if (!sol) return {};
    return {true, *sol};
}

}  // namespace

RankReport verify_certificate(const HomogPoly& f, const JetScheme& A, unsigned d) {
    RankReport rep;
    rep.scheme = A;
    rep.type = A.type();
    if (d >= 9 && rep.type.total() == 5) rep.rank = rank_from_type(rep.type, d);

    bool independent = is_linearly_independent(A);
    rep.checks.push_back({"independence", independent});

    Membership mem = membership_solve(f, A, d, std::vector<int>(A.components.size(), 0));
    rep.checks.push_back({"membership", mem.ok});

    // Minimality against the s maximal truncations (each component loses
    // its top jet; curvilinear subschemes are monotone so these suffice).
    bool minimal = mem.ok;
    if (mem.ok) {
        for (size_t i = 0; i < A.components.size() && minimal; ++i) {
            std::vector<int> tr(A.components.size(), 0);
            tr[i] = 1;
            if (membership_solve(f, A, d, tr).ok) minimal = false;
        }
    }
    rep.checks.push_back({"minimality", minimal});

    size_t essential = 0, border = 0;
    if (!f.is_zero()) {
        ConcisionReport con = essential_vars(f);
        essential = con.essential_count;
        // The catalecticant bound is invariant under the concision change
        // of coordinates; the concise form keeps the matrices small.
        border = border_rank_lower_bound(essential == 5 ? con.concise : f);
    }
    rep.essential = essential;
    rep.checks.push_back({"border_rank_5", border == 5 && essential == 5});
    return rep;
}

// ---------------------------------------------------------------------------
// Scheme recovery
// ---------------------------------------------------------------------------

namespace {

/// Reduction of degree-k monomials modulo an apolar slice: RREF of the
/// slice, pivot monomials rewritten over the standard (non-pivot) ones.
struct QuotientBasis {
    std::vector<size_t> std_monos;               // indices into the canonical list
    std::map<size_t, std::vector<Rational>> rewrite;  // pivot index -> coords over std
    size_t dim() const { return std_monos.size(); }
};

QuotientBasis quotient_basis(const std::vector<HomogPoly>& slice, unsigned nvars, unsigned k) {
    const size_t ncols = monomial_count(nvars, k);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(slice.size());
    for (const auto& q : slice) {
        std::vector<Rational> row(ncols, Rational(0));
        for (const auto& [e, c] : q.terms) row[monomial_index(nvars, k, e)] = sc_rational(c);
        rows.push_back(std::move(row));
    }
    // RREF.
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        size_t piv = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Rational inv = Rational(1) / rows[rank][c];
        for (size_t j = c; j < ncols; ++j) rows[rank][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Rational fctr = rows[r][c];
            for (size_t j = c; j < ncols; ++j) rows[r][j] -= fctr * rows[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    QuotientBasis qb;
    std::set<size_t> pivot_set(pivots.begin(), pivots.end());
    for (size_t c = 0; c < ncols; ++c)
        if (!pivot_set.count(c)) qb.std_monos.push_back(c);
    for (size_t r = 0; r < rank; ++r) {
        std::vector<Rational> coords(qb.std_monos.size(), Rational(0));
        for (size_t j = 0; j < qb.std_monos.size(); ++j)
            coords[j] = -rows[r][qb.std_monos[j]];
        qb.rewrite.emplace(pivots[r], std::move(coords));
    }
    return qb;
}

/// Coordinates of a degree-k monomial in the quotient basis.
std::vector<Rational> reduce_monomial(const QuotientBasis& qb, size_t mono_idx) {
    std::vector<Rational> out(qb.dim(), Rational(0));
    auto it = qb.rewrite.find(mono_idx);
    if (it != qb.rewrite.end()) return it->second;
    for (size_t j = 0; j < qb.std_monos.size(); ++j)
        if (qb.std_monos[j] == mono_idx) {
            out[j] = 1;
            return out;
        }
    fail(errc::recovery_inconsistent, "monomial missing from quotient basis");
}

/// 5x5 matrix of multiplication by the linear form ell: B3 -> B4.
Matrix multiplication_matrix(const std::vector<Rational>& ell, const QuotientBasis& b3,
                             const QuotientBasis& b4, unsigned nvars) {
    const auto& monos3 = monomials_of_degree(nvars, 3);
    Matrix M(b4.dim(), b3.dim());
    for (size_t col = 0; col < b3.dim(); ++col) {
        const ExponentVec& mu = monos3[b3.std_monos[col]];
        for (unsigned v = 0; v < nvars; ++v) {
            if (ell[v].is_zero()) continue;
            ExponentVec e = mu;
            ++e[v];
            auto coords = reduce_monomial(b4, monomial_index(nvars, 4, e));
            for (size_t r = 0; r < b4.dim(); ++r)
                if (!coords[r].is_zero())
                    M(r, col) = sc_add(M(r, col), Scalar(coords[r] * ell[v]));
        }
    }
    return M;
}

/// det(Mb - tau Ma) by interpolation at 6 points (degree <= 5).
UPoly pencil_charpoly(const Matrix& Ma, const Matrix& Mb) {
    const size_t n = Ma.rows();
    std::vector<Rational> xs, ys;
    for (long t = 0; t <= long(n); ++t) {
        Matrix P(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                P(r, c) = sc_sub(Mb(r, c), sc_mul(Scalar(Rational(t)), Ma(r, c)));
        xs.emplace_back(t);
        ys.push_back(std::get<Rational>(mat_det(P)));
    }
    // Lagrange interpolation.
    UPoly p;
    for (size_t i = 0; i < xs.size(); ++i) {
        UPoly basis{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = up_mul(basis, UPoly{-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        p = up_add(p, up_scale(basis, ys[i] / denom));
    }
    return p;
}

struct SupportPoint {
    std::vector<Rational> point;  // affine cone representative
    unsigned multiplicity = 1;
};

std::vector<Rational> normalize_point(std::vector<Rational> p) {
    for (const auto& x : p)
        if (!x.is_zero()) {
            Rational inv = Rational(1) / x;
            for (auto& y : p) y *= inv;
            return p;
        }
    fail(errc::recovery_inconsistent, "zero support point");
}

/// Truncated series of q along p0 + t p1 + ... (path points given so far).
UPoly series_along(const HomogPoly& q, const std::vector<std::vector<Rational>>& pts,
                   unsigned trunc) {
    std::vector<UPoly> coord(q.nvars);
    for (unsigned i = 0; i < q.nvars; ++i) {
        UPoly s;
        for (const auto& p : pts) s.push_back(p[i]);
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
        for (unsigned i = 0; i < q.nvars && !term.empty(); ++i)
            for (unsigned rep = 0; rep < e[i] && !term.empty(); ++rep)
                term = tmul(term, coord[i]);
        acc = up_add(acc, term);
    }
    return acc;
}

}  // namespace

JetScheme recover_scheme(const HomogPoly& f, unsigned d, uint64_t seed) {
    if (f.is_zero()) fail(errc::zero_polynomial, "cannot classify the zero polynomial");
    if (f.degree != d) fail(errc::degree_mismatch, "degree tag disagrees with d");
    if (d < 9) fail(errc::degree_too_small, "classification requires d >= 9");
    if (!f.all_rational())
        fail(errc::irrational_support, "recovery requires rational coefficients");

    ConcisionReport con = essential_vars(f);
    if (con.essential_count != 5)
        fail(errc::not_border_rank_five,
             "f depends on " + std::to_string(con.essential_count) + " variables, not 5");
    const HomogPoly& g = con.concise;
    const unsigned nv = 5;

    // Apolar slices in the concise coordinates; border rank 5 forces the
    // Hilbert function of the apolar quotient to be 5 in degrees 2..5.
    std::vector<std::vector<HomogPoly>> slices(6);
    for (unsigned k = 2; k <= 5 && k <= d; ++k) {
        slices[k] = apolar_ideal_slice(g, k);
        size_t rank = monomial_count(nv, k) - slices[k].size();
        if (rank != 5)
            fail(errc::not_border_rank_five,
                 "apolar quotient has dimension " + std::to_string(rank) + " in degree " +
                     std::to_string(k));
    }

    QuotientBasis b3 = quotient_basis(slices[3], nv, 3);
    QuotientBasis b4 = quotient_basis(slices[4], nv, 4);
    if (b3.dim() != 5 || b4.dim() != 5)
        fail(errc::recovery_inconsistent, "quotient bases have unexpected dimension");

    Rng rng(seed ^ 0xc1a5517ull);
    std::vector<SupportPoint> supports;
    bool recovered = false;

    for (unsigned attempt = 0; attempt < 12 && !recovered; ++attempt) {
        // Random rational projection directions a, b.
        std::vector<Rational> a(nv), b(nv);
        for (auto& x : a) x = rng.rational(20);
        for (auto& x : b) x = rng.rational(20);
        Matrix Ma = multiplication_matrix(a, b3, b4, nv);
        Matrix Mb = multiplication_matrix(b, b3, b4, nv);
        if (sc_is_zero(mat_det(Ma))) continue;  // a vanishes on a support point

        UPoly chi = pencil_charpoly(Ma, Mb);
        if (up_deg(chi) != 5) continue;

        // Distinct eigenvalues and multiplicities via square-free splitting.
        UPoly sf = up_monic(up_divmod(chi, up_gcd(chi, up_derivative(chi))).first);
        auto roots = all_rational_roots(sf, Int("1000000000000000"));
        if (!roots) {
            if (attempt >= 3)
                fail(errc::irrational_support,
                     "support projection has irrational eigenvalues; exact certification "
                     "refused (numeric support not certifiable)");
            continue;
        }
        std::vector<unsigned> mult(roots->size(), 0);
        {
            UPoly rem = chi;
            for (size_t i = 0; i < roots->size(); ++i) {
                UPoly lin{-(*roots)[i], Rational(1)};
                for (;;) {
                    auto [q, r] = up_divmod(rem, lin);
                    if (!r.empty()) break;
                    rem = q;
                    ++mult[i];
                    if (rem.empty() || up_deg(rem) == 0) break;
                }
            }
            unsigned total = 0;
            for (unsigned m : mult) total += m;
            if (total != 5) continue;
        }

        // Left eigenvector of the pencil at each eigenvalue = evaluation at
        // the support point; coordinate ratios then read the point off.
        supports.clear();
        bool good = true;
        for (size_t i = 0; i < roots->size() && good; ++i) {
            Matrix P(5, 5);
            for (size_t r = 0; r < 5; ++r)
                for (size_t c = 0; c < 5; ++c)
                    P(r, c) = sc_sub(Mb(r, c), sc_mul(Scalar((*roots)[i]), Ma(r, c)));
            auto kern = mat_kernel(P.transposed());
            if (kern.size() != 1) {
                good = false;  // colliding projections; retry with new a, b
                break;
            }
            // w_ell = v^T M_ell is proportional to evaluation at O; the
            // proportionality across different ell gives the coordinates.
            Matrix vrow(1, 5);
            for (size_t c = 0; c < 5; ++c) vrow(0, c) = kern[0][c];
            Matrix wa = vrow * Ma;
            size_t kstar = 5;
            for (size_t c = 0; c < 5; ++c)
                if (!sc_is_zero(wa(0, c))) {
                    kstar = c;
                    break;
                }
            if (kstar == 5) {
                good = false;
                break;
            }
            std::vector<Rational> point(nv);
            for (unsigned v = 0; v < nv; ++v) {
                std::vector<Rational> ev(nv, Rational(0));
                ev[v] = 1;
                Matrix Mv = multiplication_matrix(ev, b3, b4, nv);
                Matrix wv = vrow * Mv;
                point[v] = std::get<Rational>(wv(0, kstar)) / std::get<Rational>(wa(0, kstar));
                // Parallelism cross-check on one more index.
                for (size_t c = 0; c < 5; ++c) {
                    Scalar lhs = sc_mul(wv(0, c), wa(0, kstar));
                    Scalar rhs = sc_mul(wv(0, kstar), wa(0, c));
                    if (!sc_eq(lhs, rhs)) {
                        good = false;
                        break;
                    }
                }
                if (!good) break;
            }
            if (!good) break;
            supports.push_back({normalize_point(point), mult[i]});
        }
        if (good && !supports.empty()) recovered = true;
    }
    if (!recovered)
        fail(errc::recovery_inconsistent, "support recovery failed across projections");

    // Greedy jet fitting per support point against the low-degree slices.
    std::vector<const HomogPoly*> conds;
    for (const auto& q : slices[2]) conds.push_back(&q);
    for (const auto& q : slices[3]) conds.push_back(&q);

    JetScheme concise_scheme;
    concise_scheme.m = 4;
    for (const auto& sp : supports) {
        std::vector<std::vector<Rational>> pts{sp.point};
        // Sanity: the support must satisfy every condition.
        std::vector<Scalar> at(sp.point.begin(), sp.point.end());
        for (const auto* q : conds)
            if (!sc_is_zero(poly_eval(*q, at)))
                fail(errc::recovery_inconsistent, "recovered support misses the base locus");

        for (unsigned order = 1; order < sp.multiplicity; ++order) {
            // Conditions: for every q, [t^order] q(path + t^order p) = 0,
            // linear in the unknown p via the gradient at the support.
            Matrix M(conds.size(), nv);
            std::vector<Scalar> rhs(conds.size());
            std::vector<Scalar> base(sp.point.begin(), sp.point.end());
            for (size_t ci = 0; ci < conds.size(); ++ci) {
                const HomogPoly& q = *conds[ci];
                for (unsigned v = 0; v < nv; ++v)
                    M(ci, v) = poly_eval(poly_derivative(q, v), base);
                UPoly ser = series_along(q, pts, order + 1);
                Scalar tail = ser.size() > order ? Scalar(ser[order]) : Scalar(Rational(0));
                rhs[ci] = sc_neg(tail);
            }
            auto sol = solve_linear(M, rhs);
            if (!sol)
                fail(errc::recovery_inconsistent,
                     "jet fit impossible below the projected multiplicity");
            std::vector<Rational> pnt(nv);
            for (unsigned v = 0; v < nv; ++v) pnt[v] = std::get<Rational>((*sol)[v]);
            pts.push_back(std::move(pnt));
        }
        // The fit must stop here: one more order has no solution (otherwise
        // the base locus holds a longer jet than the multiplicity allows).
        if (sp.multiplicity < 5) {
            Matrix M(conds.size(), nv);
            std::vector<Scalar> rhs(conds.size());
            std::vector<Scalar> base(sp.point.begin(), sp.point.end());
            for (size_t ci = 0; ci < conds.size(); ++ci) {
                const HomogPoly& q = *conds[ci];
                for (unsigned v = 0; v < nv; ++v)
                    M(ci, v) = poly_eval(poly_derivative(q, v), base);
                UPoly ser = series_along(q, pts, sp.multiplicity + 1);
                Scalar tail =
                    ser.size() > sp.multiplicity ? Scalar(ser[sp.multiplicity]) : Scalar(Rational(0));
                rhs[ci] = sc_neg(tail);
            }
            if (solve_linear(M, rhs))
                fail(errc::recovery_inconsistent, "jet extends beyond projected multiplicity");
        }
        JetComponent comp;
        comp.length = sp.multiplicity;
        comp.path.points = std::move(pts);
        concise_scheme.components.push_back(std::move(comp));
    }

    // Canonical component order: descending length, then support lex.
    std::sort(concise_scheme.components.begin(), concise_scheme.components.end(),
              [](const JetComponent& x, const JetComponent& y) {
                  if (x.length != y.length) return x.length > y.length;
                  return normalize_point(x.support()) < normalize_point(y.support());
              });

    // Map back to the original coordinates through the concision section.
    JetScheme out;
    out.m = f.nvars - 1;
    if (f.nvars == 5) {
        out = concise_scheme;
    } else {
        JetScheme padded;
        padded.m = f.nvars - 1;
        for (const auto& comp : concise_scheme.components) {
            JetComponent pc;
            pc.length = comp.length;
            for (const auto& p : comp.path.points) {
                std::vector<Rational> w(f.nvars, Rational(0));
                std::copy(p.begin(), p.end(), w.begin());
                pc.path.points.push_back(std::move(w));
            }
            padded.components.push_back(std::move(pc));
        }
        out = transform_scheme(padded, con.section.transposed());
    }
    out.validate();
    return out;
}

RankReport classify_rank(const HomogPoly& f, unsigned d, uint64_t seed) {
    JetScheme A = recover_scheme(f, d, seed);
    RankReport rep = verify_certificate(f, A, d);
    if (!rep.all_ok())
        fail(errc::recovery_inconsistent, "recovered scheme fails its own certificate");
    return rep;
}

std::string report_to_json(const RankReport& r) {
    json j;
    j["type"] = r.type.str();
    j["rank"] = r.rank;
    j["essential"] = r.essential;
    j["scheme"] = json::parse(scheme_to_json(r.scheme));
    j["checks"] = json::object();
    for (const auto& c : r.checks) j["checks"][c.name] = c.ok;
    j["ok"] = r.all_ok();
    return j.dump();
}

}  // namespace waring5
