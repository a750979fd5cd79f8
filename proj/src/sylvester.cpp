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

#include "waring5/sylvester.hpp"

#include <algorithm>
#include <set>

#include "waring5/apolar.hpp"
#include "waring5/rng.hpp"

namespace waring5 {

namespace {

/// Dense coefficients of a rational binary form, indexed by the exponent of
/// the second variable: g = sum_k coeffs[k] x^{D-k} y^k.
std::vector<Rational> binary_coeffs(const HomogPoly& g) {
    if (g.nvars != 2) fail(errc::var_mismatch, "binary form expected");
    std::vector<Rational> c(g.degree + 1, Rational(0));
    for (const auto& [e, s] : g.terms) c[e[1]] = sc_rational(s);
    return c;
}

/// Dual binary form as a univariate polynomial h(T, 1) together with the
/// multiplicity of its factor V (the root at infinity).
struct Dehomog {
    UPoly p;
    unsigned infinity_mult = 0;
};

Dehomog dehomogenize_dual(const std::vector<Rational>& h) {
    // h_j is the coefficient of U^{r-j} V^j; h(T,1) = sum h_j T^{r-j}.
    const size_t r = h.size() - 1;
    UPoly p(r + 1, Rational(0));
    for (size_t j = 0; j <= r; ++j) p[r - j] = h[j];
    p = up_trim(std::move(p));
    Dehomog d;
    d.infinity_mult = unsigned(r + 1 - p.size());
    d.p = std::move(p);
    return d;
}

bool dual_squarefree(const std::vector<Rational>& h) {
    Dehomog d = dehomogenize_dual(h);
    if (d.p.empty()) return false;
    if (d.infinity_mult > 1) return false;
    return up_squarefree(d.p);
}

/// First degree with a nontrivial catalecticant kernel, plus that kernel as
/// dual coefficient vectors (index j = coefficient of U^{r-j} V^j).
struct FirstKernel {
    unsigned r1 = 0;
    std::vector<std::vector<Rational>> basis;
};

std::vector<Rational> dual_coeffs(const HomogPoly& h) {
    std::vector<Rational> v(h.degree + 1, Rational(0));
    for (const auto& [e, s] : h.terms) v[e[1]] = sc_rational(s);
    return v;
}

FirstKernel first_kernel(const HomogPoly& g) {
    for (unsigned r = 1; r <= g.degree; ++r) {
        auto slice = apolar_ideal_slice(g, r);
        if (slice.empty()) continue;
        FirstKernel fk;
        fk.r1 = r;
        for (const auto& h : slice) fk.basis.push_back(dual_coeffs(h));
        return fk;
    }
    fail(errc::zero_form, "no apolar kernel found (is g zero?)");
}

/// Searches the span of the kernel basis for a square-free element:
/// the basis itself, randomized rational combinations, then a deterministic
/// sweep over {-2..2} coefficients for small kernels. Heuristic for kernel
/// dimension >= 3 (documented); never hit by jet or generic forms.
std::optional<std::vector<Rational>> squarefree_element(
    const std::vector<std::vector<Rational>>& basis, Rng& rng, unsigned random_tries) {
    auto combine = [&](const std::vector<Rational>& w) {
        std::vector<Rational> h(basis.front().size(), Rational(0));
        for (size_t b = 0; b < basis.size(); ++b)
            for (size_t j = 0; j < h.size(); ++j) h[j] += w[b] * basis[b][j];
        return h;
    };
    for (const auto& h : basis)
        if (dual_squarefree(h)) return h;
    for (unsigned t = 0; t < random_tries; ++t) {
        std::vector<Rational> w(basis.size());
        for (auto& x : w) x = rng.rational(20);
        auto h = combine(w);
        bool zero = std::all_of(h.begin(), h.end(), [](const Rational& x) { return x.is_zero(); });
        if (!zero && dual_squarefree(h)) return h;
    }
    if (basis.size() <= 3) {
        std::vector<long> c(basis.size(), -2);
        for (;;) {
            std::vector<Rational> w(c.begin(), c.end());
            auto h = combine(w);
            bool zero =
                std::all_of(h.begin(), h.end(), [](const Rational& x) { return x.is_zero(); });
            if (!zero && dual_squarefree(h)) return h;
            size_t i = 0;
            while (i < c.size() && c[i] == 2) c[i++] = -2;
            if (i == c.size()) break;
            ++c[i];
        }
    }
    return std::nullopt;
}

}  // namespace

size_t binary_rank(const HomogPoly& g, const SylvesterOptions& opts) {
    if (g.nvars != 2) fail(errc::var_mismatch, "binary_rank expects two variables");
    if (g.is_zero()) fail(errc::zero_form, "binary_rank of the zero form");
    (void)binary_coeffs(g);  // rationality check
    FirstKernel fk = first_kernel(g);
    Rng rng(opts.seed ^ 0x53796c76u);
    if (squarefree_element(fk.basis, rng, opts.random_squarefree_tries)) return fk.r1;
    return g.degree - fk.r1 + 2;
}

// ---------------------------------------------------------------------------
// Numeric root machinery
// ---------------------------------------------------------------------------

std::vector<BigComplex> complex_roots(const UPoly& p0) {
    UPoly p = up_trim(p0);
    if (up_deg(p) < 1) return {};
    const size_t n = size_t(up_deg(p));
    std::vector<BigComplex> c(n + 1);
    for (size_t i = 0; i <= n; ++i) c[i] = to_bigcomplex(p[i]);

    auto eval = [&](const BigComplex& z) {
        BigComplex acc = c[n];
        for (size_t i = n; i-- > 0;) acc = acc * z + c[i];
        return acc;
    };
    auto eval_deriv = [&](const BigComplex& z) {
        BigComplex acc = c[n] * BigComplex(BigFloat(double(n)));
        for (size_t i = n; i-- > 1;) acc = acc * z + c[i] * BigComplex(BigFloat(double(i)));
        return acc;
    };

    // Initial guesses on a circle of the Cauchy radius, slightly rotated so
    // no guess starts on a symmetry axis.
    BigFloat radius = 0;
    for (size_t i = 0; i < n; ++i) {
        BigFloat q = (c[i].abs() / c[n].abs());
        if (q > radius) radius = q;
    }
    radius += 1;
    std::vector<BigComplex> z(n);
    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    for (size_t k = 0; k < n; ++k) {
        BigFloat angle = two_pi * (BigFloat(k) + BigFloat(1) / 4 + BigFloat(1) / (7 + k)) /
                         BigFloat(unsigned(n));
        z[k] = BigComplex(radius * cos(angle), radius * sin(angle));
    }

    const BigFloat tol = ldexp(BigFloat(1), -int(precision_bits()) + 8) * (radius + 1);
    for (unsigned iter = 0; iter < 600; ++iter) {
        BigFloat worst = 0;
        for (size_t k = 0; k < n; ++k) {
            BigComplex denom(BigFloat(1));
            for (size_t j = 0; j < n; ++j)
                if (j != k) denom = denom * (z[k] - z[j]);
            BigComplex step = eval(z[k]) / (denom * c[n]);
            z[k] = z[k] - step;
            BigFloat mag = step.abs();
            if (mag > worst) worst = mag;
        }
        if (worst < tol) break;
    }
    // Newton polish (roots are simple: p square-free).
    for (size_t k = 0; k < n; ++k)
        for (unsigned it = 0; it < 4; ++it) {
            BigComplex d = eval_deriv(z[k]);
            if (d.is_zero()) break;
            z[k] = z[k] - eval(z[k]) / d;
        }
    return z;
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, const Int& max_den) {
    const BigFloat eps = ldexp(BigFloat(1), -int(precision_bits()) + 24) *
                         (BigFloat(1) + boost::multiprecision::abs(x));
    BigFloat rem = x;
    Int p0(1), q0(0), p1(0), q1(1);  // convergents
    for (unsigned iter = 0; iter < 200; ++iter) {
        BigFloat fl = floor(rem);
        Int a = fl.convert_to<Int>();
        Int p = a * p0 + p1, q = a * q0 + q1;
        if (q > max_den) break;
        Rational cand = rational_from(p, q);
        BigFloat diff = boost::multiprecision::abs(
            x - BigFloat(numerator(cand)) / BigFloat(denominator(cand)));
        if (diff < eps) return cand;
        BigFloat frac = rem - fl;
        if (frac < eps) break;
        rem = 1 / frac;
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = q;
    }
    return std::nullopt;
}

std::optional<std::vector<Rational>> all_rational_roots(const UPoly& p, const Int& max_den) {
    UPoly q = up_trim(p);
    if (up_deg(q) < 1) return std::vector<Rational>{};
    if (!up_squarefree(q)) return std::nullopt;
    const Int& cap = max_den;
    auto roots = complex_roots(q);
    const BigFloat eps = ldexp(BigFloat(1), -int(precision_bits() / 2));
    std::vector<Rational> out;
    for (const auto& z : roots) {
        if (boost::multiprecision::abs(z.im) > eps * (BigFloat(1) + boost::multiprecision::abs(z.re)))
            return std::nullopt;
        auto cand = rational_reconstruct(z.re, cap);
        if (!cand) return std::nullopt;
        if (!up_eval(q, *cand).is_zero()) return std::nullopt;
        out.push_back(*cand);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition strategies
// ---------------------------------------------------------------------------

namespace {

/// Solves the moment system sum_i lambda_i alpha_i^{D-k} beta_i^k = g_k /
/// C(D,k) for exact nodes; nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_lambdas_exact(const std::vector<Rational>& g,
                                                       const std::vector<std::pair<Scalar, Scalar>>& nodes) {
    const size_t D = g.size() - 1;
    const size_t R = nodes.size();
    Matrix M(g.size(), R);
    std::vector<Scalar> rhs(g.size());
    for (size_t k = 0; k <= D; ++k) {
        for (size_t i = 0; i < R; ++i) {
            Scalar a = Rational(1);
            for (size_t t = 0; t < D - k; ++t) a = sc_mul(a, nodes[i].first);
            for (size_t t = 0; t < k; ++t) a = sc_mul(a, nodes[i].second);
            M(k, i) = a;
        }
        rhs[k] = Rational(g[k] / Rational(binomial(unsigned(D), unsigned(k))));
    }
    return solve_linear(M, rhs);
}

/// Monic kernel profile of a jet form: the forced top coefficients
/// h_1..h_{b-1} of any monic degree-R element of ker Cat_R(g), where
/// g_k = 0 for k >= b. Solved from the triangular contraction conditions.
std::vector<Rational> jet_kernel_profile(const std::vector<Rational>& g, unsigned b, unsigned R) {
    const unsigned D = unsigned(g.size()) - 1;
    auto ff = [](unsigned n, unsigned t) {
        Int v(1);
        for (unsigned i = 0; i < t; ++i) v *= Int(n - i);
        return Rational(v);
    };
    std::vector<Rational> h(b, Rational(0));
    h[0] = 1;
    // Condition k (coefficient of u^{b-2-k} v^k in h ∘ g), k = b-2 .. 0,
    // determines h_{b-1-k} from the earlier ones.
    for (unsigned k = b - 1; k-- > 0;) {
        const unsigned jmax = b - 1 - k;
        Rational acc(0);
        for (unsigned j = 0; j < jmax; ++j) {
            const unsigned i = j + k;
            if (g[i].is_zero()) continue;
            acc += h[j] * g[i] * ff(D - i, R - j) * ff(i, j);
        }
        Rational lead = g[b - 1] * ff(D - (b - 1), R - jmax) * ff(b - 1, jmax);
        h[jmax] = -acc / lead;
    }
    return h;
}

struct RationalNodes {
    std::vector<Rational> nodes;  // finite nodes c_i; the node is (c_i, 1)
};

/// Rational witness for a jet form: free nodes drawn at random, the last
/// b-1 completed so the elementary symmetric functions match the forced
/// kernel profile; succeeds when the completion polynomial splits over Q.
std::optional<RationalNodes> rational_jet_nodes(const std::vector<Rational>& g, unsigned b,
                                                unsigned R, Rng& rng, unsigned tries,
                                                unsigned height) {
    auto profile = jet_kernel_profile(g, b, R);  // h_0=1, h_1..h_{b-1}
    // Prescribed elementary symmetric functions of all R roots of
    // prod (T - c_i): e_j = (-1)^j h_j.
    std::vector<Rational> target(b, Rational(0));
    for (unsigned j = 0; j < b; ++j) target[j] = (j % 2 ? -profile[j] : profile[j]);

    const unsigned nfree = R - (b - 1);
    for (unsigned t = 0; t < tries; ++t) {
        // Distinct free nodes.
        std::set<Rational> used;
        std::vector<Rational> free_nodes;
        while (free_nodes.size() < nfree) {
            Rational c = rng.rational(height);
            if (used.insert(c).second) free_nodes.push_back(c);
        }
        // Elementary symmetric functions of the free part.
        std::vector<Rational> ef(nfree + 1, Rational(0));
        ef[0] = 1;
        for (const auto& c : free_nodes)
            for (size_t j = std::min(ef.size() - 1, free_nodes.size()); j-- > 0;)
                ef[j + 1] += ef[j] * c;
        // Required elementary symmetric functions of the completion.
        std::vector<Rational> er(b, Rational(0));
        er[0] = 1;
        for (unsigned j = 1; j <= b - 1; ++j) {
            Rational acc = target[j];
            for (unsigned tq = 1; tq <= j; ++tq) {
                if (tq >= ef.size()) break;
                acc -= ef[tq] * er[j - tq];
            }
            er[j] = acc;
        }
        // Completion polynomial w(T) = T^{b-1} - er_1 T^{b-2} + ...
        UPoly w(b, Rational(0));
        for (unsigned j = 0; j <= b - 1; ++j)
            w[b - 1 - j] = (j % 2 ? -er[j] : er[j]);
        auto roots = all_rational_roots(w);
        if (!roots) continue;
        std::vector<Rational> all = free_nodes;
        bool distinct = true;
        for (const auto& r : *roots) {
            if (!used.insert(r).second) {
                distinct = false;
                break;
            }
            all.push_back(r);
        }
        if (!distinct || all.size() != R) continue;
        return RationalNodes{std::move(all)};
    }
    return std::nullopt;
}

BinaryDecomposition assemble_rational(const std::vector<Rational>& g,
                                      const std::vector<Rational>& nodes) {
    std::vector<std::pair<Scalar, Scalar>> pnodes;
    pnodes.reserve(nodes.size());
    for (const auto& c : nodes) pnodes.emplace_back(Scalar(c), Scalar(Rational(1)));
    auto lam = solve_lambdas_exact(g, pnodes);
    if (!lam) fail(errc::pullback_mismatch, "rational node system unexpectedly inconsistent");
    BinaryDecomposition dec;
    dec.exactness = Exactness::rational;
    for (size_t i = 0; i < nodes.size(); ++i)
        dec.terms.push_back({(*lam)[i], Scalar(nodes[i]), Scalar(Rational(1))});
    return dec;
}

/// Roots-of-unity decomposition of a monomial gamma u^{D-c} v^c with
/// 1 <= c <= D-1, c <= D-c: R = D-c+1 terms with nodes (1, zeta^j):
///   u^{D-c} v^c = 1/(R C(D,c)) sum_j zeta^{-jc} (u + zeta^j v)^D.
BinaryDecomposition monomial_cyclotomic(const Rational& gamma, unsigned D, unsigned c,
                                        bool swapped) {
    const unsigned n = D - c + 1;
    Rational scale = gamma / Rational(Int(n) * binomial(D, c));
    BinaryDecomposition dec;
    dec.exactness = Exactness::cyclotomic;
    for (unsigned j = 0; j < n; ++j) {
        Cyclotomic lam = cyc_mul(Cyclotomic(scale), root_of_unity(n, (n - (j * c) % n) % n));
        Scalar alpha = Rational(1);
        Scalar beta = root_of_unity(n, j);
        if (swapped) std::swap(alpha, beta);
        dec.terms.push_back({Scalar(lam), alpha, beta});
    }
    return dec;
}

BinaryDecomposition numeric_decomposition(const std::vector<Rational>& g,
                                          const std::vector<Rational>& h) {
    Dehomog dh = dehomogenize_dual(h);
    auto roots = complex_roots(dh.p);
    const unsigned D = unsigned(g.size()) - 1;
    std::vector<std::pair<BigComplex, BigComplex>> nodes;
    for (const auto& z : roots) nodes.emplace_back(z, BigComplex(BigFloat(1)));
    if (dh.infinity_mult == 1) nodes.emplace_back(BigComplex(BigFloat(1)), BigComplex());

    const size_t R = nodes.size();
    Matrix M(g.size(), R);
    std::vector<Scalar> rhs(g.size());
    for (size_t k = 0; k <= D; ++k) {
        for (size_t i = 0; i < R; ++i) {
            BigComplex a(BigFloat(1));
            for (size_t t = 0; t < D - k; ++t) a = a * nodes[i].first;
            for (size_t t = 0; t < k; ++t) a = a * nodes[i].second;
            M(k, i) = a;
        }
        Rational m = g[k] / Rational(binomial(D, unsigned(k)));
        rhs[k] = to_bigcomplex(m);
    }
    auto lam = solve_linear(M, rhs);
    if (!lam) fail(errc::pullback_mismatch, "numeric moment system inconsistent");
    BinaryDecomposition dec;
    dec.exactness = Exactness::numeric;
    for (size_t i = 0; i < R; ++i)
        dec.terms.push_back({(*lam)[i], Scalar(nodes[i].first), Scalar(nodes[i].second)});
    return dec;
}

std::vector<Rational> reversed(const std::vector<Rational>& v) {
    return std::vector<Rational>(v.rbegin(), v.rend());
}

}  // namespace

bool verify_binary_decomposition(const HomogPoly& g, const BinaryDecomposition& dec,
                                 BigFloat* residual_out) {
    auto gc = binary_coeffs(g);
    const unsigned D = g.degree;
    bool exact = dec.exactness != Exactness::numeric;
    if (exact) {
        for (unsigned k = 0; k <= D; ++k) {
            Scalar acc = Rational(0);
            for (const auto& t : dec.terms) {
                Scalar a = Rational(1);
                for (unsigned i = 0; i < D - k; ++i) a = sc_mul(a, t.alpha);
                for (unsigned i = 0; i < k; ++i) a = sc_mul(a, t.beta);
                acc = sc_add(acc, sc_mul(t.lambda, a));
            }
            acc = sc_mul(acc, Scalar(Rational(binomial(D, k))));
            if (!sc_eq(acc, Scalar(gc[k]))) return false;
        }
        return true;
    }
    BigFloat worst = 0, scale = 0;
    for (unsigned k = 0; k <= D; ++k) {
        BigComplex acc;
        for (const auto& t : dec.terms) {
            BigComplex a(BigFloat(1));
            BigComplex al = sc_to_bigcomplex(t.alpha), be = sc_to_bigcomplex(t.beta);
            for (unsigned i = 0; i < D - k; ++i) a = a * al;
            for (unsigned i = 0; i < k; ++i) a = a * be;
            acc = acc + sc_to_bigcomplex(t.lambda) * a;
        }
        acc = acc * to_bigcomplex(Rational(binomial(D, k)));
        BigFloat diff = (acc - to_bigcomplex(gc[k])).abs();
        if (diff > worst) worst = diff;
        BigFloat mag = to_bigcomplex(gc[k]).abs();
        if (mag > scale) scale = mag;
    }
    if (scale.is_zero()) scale = 1;
    if (residual_out) *residual_out = worst / scale;
    BigFloat tol("1e-40");
    return worst / scale < tol;
}

std::optional<BinaryDecomposition> binary_decomposition(const HomogPoly& g, bool rational_only,
                                                        const SylvesterOptions& opts) {
    if (g.nvars != 2) fail(errc::var_mismatch, "binary_decomposition expects two variables");
    if (g.is_zero()) fail(errc::zero_form, "binary_decomposition of the zero form");
    auto gc = binary_coeffs(g);
    const unsigned D = g.degree;
    Rng rng(opts.seed ^ 0xb1a2c3ull);

    FirstKernel fk = first_kernel(g);
    auto sq = squarefree_element(fk.basis, rng, opts.random_squarefree_tries);
    const unsigned rank = sq ? fk.r1 : D - fk.r1 + 2;

    // Rank-1 shortcut: g is a pure power.
    if (rank == 1) {
        Dehomog dh = dehomogenize_dual(*sq);
        BinaryDecomposition dec;
        dec.exactness = Exactness::rational;
        Scalar alpha, beta;
        if (dh.infinity_mult == 1) {
            alpha = Rational(1);
            beta = Rational(0);
        } else {
            auto roots = all_rational_roots(dh.p);
            if (!roots || roots->size() != 1) {
                if (rational_only) return std::nullopt;
                auto croots = complex_roots(dh.p);
                dec.exactness = Exactness::numeric;
                alpha = croots.front();
                beta = BigComplex(BigFloat(1));
            } else {
                alpha = (*roots)[0];
                beta = Rational(1);
            }
        }
        if (dec.exactness == Exactness::numeric) {
            BinaryDecomposition nd = numeric_decomposition(gc, *sq);
            BigFloat res;
            verify_binary_decomposition(g, nd, &res);
            nd.residual = res;
            return nd;
        }
        std::vector<std::pair<Scalar, Scalar>> nodes{{alpha, beta}};
        auto lam = solve_lambdas_exact(gc, nodes);
        if (!lam) fail(errc::pullback_mismatch, "rank-1 system inconsistent");
        dec.terms.push_back({(*lam)[0], alpha, beta});
        return dec;
    }

    // Strategy 1: square-free kernel element at degree `rank` with all
    // rational roots.
    if (rank == fk.r1 && sq) {
        Dehomog dh = dehomogenize_dual(*sq);
        auto roots = all_rational_roots(dh.p);
        if (roots) {
            std::vector<std::pair<Scalar, Scalar>> nodes;
            for (const auto& c : *roots) nodes.emplace_back(Scalar(c), Scalar(Rational(1)));
            if (dh.infinity_mult == 1)
                nodes.emplace_back(Scalar(Rational(1)), Scalar(Rational(0)));
            auto lam = solve_lambdas_exact(gc, nodes);
            if (lam) {
                BinaryDecomposition dec;
                dec.exactness = Exactness::rational;
                for (size_t i = 0; i < nodes.size(); ++i)
                    dec.terms.push_back({(*lam)[i], nodes[i].first, nodes[i].second});
                return dec;
            }
        }
    }

    // Detect jet structure: g supported on low (or high) second-variable
    // exponents. b = jet order; the rank of such a form is D - b + 2.
    unsigned maxk = 0, mink = D;
    for (unsigned k = 0; k <= D; ++k)
        if (!gc[k].is_zero()) {
            maxk = std::max(maxk, k);
            mink = std::min(mink, k);
        }
    const bool low_jet = maxk + 1 <= (D + 1) / 2;
    const bool high_jet = D - mink + 1 <= (D + 1) / 2;

    if (rank != fk.r1 && (low_jet || high_jet)) {
        const auto gwork = low_jet ? gc : reversed(gc);
        const unsigned b = low_jet ? maxk + 1 : D - mink + 1;
        const unsigned R = D - b + 2;

        // Strategy 2: rational node completion against the forced kernel
        // profile.
        auto nodes =
            rational_jet_nodes(gwork, b, R, rng, opts.rational_tries, opts.node_height);
        if (nodes) {
            auto dec = assemble_rational(gwork, nodes->nodes);
            if (!low_jet)
                for (auto& t : dec.terms) std::swap(t.alpha, t.beta);
            return dec;
        }

        // Strategy 3: roots of unity for monomial jet forms (exact, in
        // Q(zeta_R)).
        unsigned nonzero = 0, cidx = 0;
        for (unsigned k = 0; k < gwork.size(); ++k)
            if (!gwork[k].is_zero()) {
                ++nonzero;
                cidx = k;
            }
        if (!rational_only && nonzero == 1 && cidx >= 1) {
            auto dec = monomial_cyclotomic(gwork[cidx], D, cidx, !low_jet);
            return dec;
        }
    }

    if (rational_only) return std::nullopt;

    // Strategy 4: numeric roots of a square-free kernel element in degree
    // `rank`.
    std::vector<std::vector<Rational>> rank_basis;
    {
        auto slice = apolar_ideal_slice(g, rank);
        for (const auto& h : slice) rank_basis.push_back(dual_coeffs(h));
    }
    auto hsq = squarefree_element(rank_basis, rng, opts.random_squarefree_tries + 32);
    if (!hsq) fail(errc::witness_search_failed, "no square-free apolar element found");
    BinaryDecomposition dec = numeric_decomposition(gc, *hsq);
    BigFloat res;
    if (!verify_binary_decomposition(g, dec, &res))
        fail(errc::pullback_mismatch, "numeric decomposition residual too large");
    dec.residual = res;
    return dec;
}

// ---------------------------------------------------------------------------
// Rational-normal-curve pullback
// ---------------------------------------------------------------------------

HomogPoly curve_pullback(const HomogPoly& f, const CurvePath& path, unsigned d) {
    const unsigned e = path.path_degree();
    if (e < 1 || e > 4) fail(errc::invalid_argument, "path degree must be 1..4");
    if (path.nvars() != f.nvars) fail(errc::var_mismatch, "path dimension mismatch");
    const unsigned D = e * d;

    std::vector<HomogPoly> jets;
    jets.reserve(D + 1);
    for (unsigned k = 0; k <= D; ++k) jets.push_back(jet_coefficient(path, k, d));

    // Restrict the membership system to monomials the jets actually touch;
    // f must be supported there too, or it is off the curve span.
    std::map<ExponentVec, size_t, TermOrder> support;
    for (const auto& jet : jets)
        for (const auto& [mono, c] : jet.terms) support.emplace(mono, 0);
    for (const auto& [mono, c] : f.terms)
        if (!support.count(mono)) fail(errc::not_on_curve, "f uses monomials off the curve span");
    {
        size_t idx = 0;
        for (auto& [mono, i] : support) i = idx++;
    }

    Matrix M(support.size(), D + 1);
    for (unsigned k = 0; k <= D; ++k)
        for (const auto& [mono, c] : jets[k].terms) M(support.at(mono), k) = c;
    if (mat_rank(M) != D + 1)
        fail(errc::pullback_mismatch, "path is not a rational normal curve of its degree");
    std::vector<Scalar> rhs(support.size(), Scalar(Rational(0)));
    for (const auto& [mono, c] : f.terms) rhs[support.at(mono)] = c;
    auto y = solve_linear(M, rhs);
    if (!y) fail(errc::not_on_curve, "f is outside the Veronese span of the curve");

    HomogPoly g(2, D);
    for (unsigned k = 0; k <= D; ++k) {
        Scalar c = sc_mul((*y)[k], Scalar(Rational(binomial(D, k))));
        g.add_term(ExponentVec{D - k, k}, c);
    }
    return g;
}

std::optional<CurveRankDecomposition> curve_rank_decomposition(const HomogPoly& f,
                                                               const CurvePath& path, unsigned d,
                                                               bool rational_only,
                                                               const SylvesterOptions& opts) {
    HomogPoly g = curve_pullback(f, path, d);
    auto bin = binary_decomposition(g, rational_only, opts);
    if (!bin) return std::nullopt;
    if (bin->exactness != Exactness::numeric && !verify_binary_decomposition(g, *bin, nullptr))
        fail(errc::pullback_mismatch, "binary decomposition failed exact re-expansion");

    CurveRankDecomposition out;
    out.exactness = bin->exactness;
    out.residual = bin->residual;
    for (const auto& t : bin->terms) {
        // Node (alpha u + beta v)^D corresponds to the curve point
        // path_h(beta, alpha).
        out.terms.push_back({t.lambda, path.eval_h(t.beta, t.alpha)});
    }
    return out;
}

}  // namespace waring5
