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

#include "waring5/apolar.hpp"

#include <functional>

namespace waring5 {

Catalecticant catalecticant(const HomogPoly& f, unsigned a) {
    if (a > f.degree) fail(errc::degree_mismatch, "catalecticant split degree exceeds d");
    const unsigned nv = f.nvars;
    const unsigned b = f.degree - a;
    const size_t rows = monomial_count(nv, a);
    const size_t cols = monomial_count(nv, b);
    Catalecticant cat{a, f.degree, Matrix(rows, cols)};

    // Entry (alpha, gamma) = coefficient of x^gamma in d^alpha f, i.e.
    // f_{alpha+gamma} * (alpha+gamma)!/gamma! — fill from the terms of f
    // by splitting each exponent beta into alpha + gamma.
    ExponentVec alpha(nv, 0), gamma(nv, 0);
    for (const auto& [beta, c] : f.terms) {
        std::function<void(unsigned, unsigned)> split = [&](unsigned v, unsigned rem) {
            if (v == nv) {
                if (rem != 0) return;
                Int ff(1);  // prod beta_i!/(beta_i - alpha_i)!
                for (unsigned i = 0; i < nv; ++i) {
                    gamma[i] = beta[i] - alpha[i];
                    for (unsigned k = 0; k < alpha[i]; ++k) ff *= Int(beta[i] - k);
                }
                size_t r = monomial_index(nv, a, alpha);
                size_t cidx = monomial_index(nv, b, gamma);
                cat.matrix(r, cidx) = sc_mul(c, Scalar(Rational(ff)));
                return;
            }
            for (unsigned k = 0; k <= std::min(rem, beta[v]); ++k) {
                alpha[v] = k;
                split(v + 1, rem - k);
            }
            alpha[v] = 0;
        };
        split(0, a);
    }
    return cat;
}

HomogPoly pad_vars(const HomogPoly& f, unsigned nvars) {
    if (nvars < f.nvars) fail(errc::var_mismatch, "pad_vars cannot shrink");
    if (nvars == f.nvars) return f;
    HomogPoly r(nvars, f.degree);
    for (const auto& [e, c] : f.terms) {
        ExponentVec w(nvars, 0);
        std::copy(e.begin(), e.end(), w.begin());
        r.add_term(w, c);
    }
    return r;
}

namespace {

/// Drops trailing variables that do not occur.
HomogPoly restrict_vars(const HomogPoly& f, unsigned nvars) {
    HomogPoly r(nvars, f.degree);
    for (const auto& [e, c] : f.terms) {
        for (unsigned i = nvars; i < f.nvars; ++i)
            if (e[i]) fail(errc::invalid_argument, "restrict_vars dropped a used variable");
        ExponentVec w(e.begin(), e.begin() + nvars);
        r.add_term(w, c);
    }
    return r;
}

}  // namespace

ConcisionReport essential_vars(const HomogPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "essential_vars of the zero polynomial");
    const unsigned nv = f.nvars;
    Catalecticant c1 = catalecticant(f, 1);

    // Left-kernel vectors of C_1 (directions v with sum v_i d_i f = 0) are
    // the directions along which f is constant.
    auto kernel = mat_kernel(c1.matrix.transposed());
    const size_t n = nv - kernel.size();  // = rank C_1(f)

    ConcisionReport rep;
    rep.essential_count = n;

    // Change of coordinates: first n columns are standard basis vectors
    // completing the kernel (greedy, deterministic), last columns span it.
    Matrix A(nv, nv);
    std::vector<std::vector<Scalar>> chosen;
    auto rank_with = [&](const std::vector<Scalar>& cand) {
        std::vector<std::vector<Scalar>> probe = chosen;
        probe.push_back(cand);
        for (const auto& k : kernel) probe.push_back(k);
        return mat_rank(matrix_from_rows(probe, nv));
    };
    for (unsigned j = 0; j < nv && chosen.size() < n; ++j) {
        std::vector<Scalar> ej(nv, Scalar(Rational(0)));
        ej[j] = Rational(1);
        if (rank_with(ej) == chosen.size() + 1 + kernel.size()) chosen.push_back(std::move(ej));
    }
    if (chosen.size() != n) fail(errc::invalid_argument, "concision basis completion failed");
    for (size_t j = 0; j < n; ++j)
        for (unsigned i = 0; i < nv; ++i) A(i, j) = chosen[j][i];
    for (size_t j = 0; j < kernel.size(); ++j)
        for (unsigned i = 0; i < nv; ++i) A(i, n + j) = kernel[j][i];

    rep.restriction = A;
    auto inv = mat_inverse(A);
    if (!inv) fail(errc::invalid_argument, "concision change of coordinates is singular");
    rep.section = *inv;
    rep.concise = restrict_vars(substitute_linear(f, A), unsigned(n));
    return rep;
}

size_t border_rank_lower_bound(const HomogPoly& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "border_rank_lower_bound of zero");
    size_t best = 0;
    for (unsigned a = 1; a < f.degree; ++a)
        best = std::max(best, mat_rank(catalecticant(f, a).matrix));
    return best;
}

std::vector<HomogPoly> apolar_ideal_slice(const HomogPoly& f, unsigned k) {
    if (k < 1 || k > f.degree) fail(errc::degree_mismatch, "slice degree out of range");
    Catalecticant cat = catalecticant(f, k);
    // Dual forms g with g∘f = 0 are the left kernel: kernel of the transpose.
    auto basis = mat_kernel(cat.matrix.transposed());
    std::vector<HomogPoly> out;
    out.reserve(basis.size());
    for (const auto& v : basis) out.push_back(poly_from_coefficients(f.nvars, k, v));
    return out;
}

}  // namespace waring5
