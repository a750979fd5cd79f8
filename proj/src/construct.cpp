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

#include "waring5/construct.hpp"

#include <json.hpp>

#include "waring5/apolar.hpp"
#include "waring5/rng.hpp"

namespace waring5 {

using json = nlohmann::ordered_json;

JetScheme canonical_scheme(const SchemeType& type, unsigned m) {
    if (type.total() != 5) fail(errc::bad_type, "type degrees must sum to 5");
    if (m < 4) fail(errc::bad_type, "ambient dimension must be at least 4");
    JetScheme A;
    A.m = m;
    unsigned base = 0;
    for (unsigned b : type.degrees) {
        JetComponent comp;
        comp.length = b;
        for (unsigned j = 0; j < b; ++j) {
            std::vector<Rational> p(m + 1, Rational(0));
            p[base + j] = 1;
            comp.path.points.push_back(std::move(p));
        }
        base += b;
        A.components.push_back(std::move(comp));
    }
    A.validate();
    return A;
}

SamplePoint sample_point(const JetScheme& A, unsigned d, uint64_t seed,
                         const SampleOptions& opts) {
    A.validate();
    if (A.total_degree() != 5) fail(errc::bad_type, "sample_point needs a degree-5 scheme");
    if (d < 9)
        fail(errc::degree_too_small,
             "d >= 9 required: below it the scheme evincing the cactus rank need not be unique");
    if (!is_linearly_independent(A))
        fail(errc::dependent_scheme, "scheme is not linearly independent");

    Rng rng(seed);
    SamplePoint sp;
    sp.scheme = A;
    sp.seed = seed;
    sp.d = d;

    // Jets are fixed by the scheme; only coefficients are redrawn.
    std::vector<std::vector<HomogPoly>> jets(A.components.size());
    for (size_t i = 0; i < A.components.size(); ++i)
        for (unsigned j = 0; j < A.components[i].length; ++j)
            jets[i].push_back(jet_coefficient(A.components[i].path, j, d));

    for (int attempt = 0; attempt < 64; ++attempt) {
        sp.coefficients.assign(A.components.size(), {});
        for (size_t i = 0; i < A.components.size(); ++i) {
            const unsigned b = A.components[i].length;
            for (unsigned j = 0; j < b; ++j) {
                Rational c = opts.unit_coefficients
                                 ? Rational(1)
                                 : rng.rational(opts.coeff_height, /*nonzero=*/j + 1 == b);
                sp.coefficients[i].push_back(c);
            }
        }
        HomogPoly f(A.m + 1, d);
        for (size_t i = 0; i < A.components.size(); ++i)
            for (unsigned j = 0; j < A.components[i].length; ++j)
                f = poly_add(f, poly_scale(jets[i][j], Scalar(sp.coefficients[i][j])));
        if (f.is_zero()) continue;
        if (essential_vars(f).essential_count != 5) continue;
        if (border_rank_lower_bound(f) != 5) continue;
        sp.f = std::move(f);
        return sp;
    }
    fail(errc::dependent_scheme, "could not draw a concise border-rank-5 sample");
}

Matrix random_projectivity(unsigned m, uint64_t seed, unsigned height) {
    Rng rng(seed);
    for (;;) {
        Matrix M(m + 1, m + 1);
        for (unsigned r = 0; r <= m; ++r)
            for (unsigned c = 0; c <= m; ++c) M(r, c) = rng.rational(height);
        if (!sc_is_zero(mat_det(M))) return M;
    }
}

JetScheme transform_scheme(const JetScheme& A, const Matrix& M) {
    if (M.rows() != A.m + 1 || M.cols() != A.m + 1)
        fail(errc::invalid_argument, "projectivity has wrong dimension");
    JetScheme B;
    B.m = A.m;
    for (const auto& comp : A.components) {
        JetComponent out;
        out.length = comp.length;
        for (const auto& p : comp.path.points) {
            std::vector<Scalar> v(p.begin(), p.end());
            auto w = M.apply(v);
            std::vector<Rational> q;
            q.reserve(w.size());
            for (const auto& s : w) q.push_back(std::get<Rational>(s));
            out.path.points.push_back(std::move(q));
        }
        B.components.push_back(std::move(out));
    }
    B.validate();
    return B;
}

std::string sample_to_json(const SamplePoint& sp) {
    json j = json::parse(scheme_to_json(sp.scheme));
    json out;
    out["m"] = sp.scheme.m;
    out["d"] = sp.d;
    out["seed"] = sp.seed;
    out["scheme"] = j;
    out["coefficients"] = json::array();
    for (const auto& comp : sp.coefficients) {
        json jc = json::array();
        for (const auto& c : comp) jc.push_back(rational_str(c));
        out["coefficients"].push_back(jc);
    }
    out["f"] = poly_str(sp.f);
    return out.dump();
}

SamplePoint sample_from_json(const std::string& text) {
    json j = json::parse(text);
    SamplePoint sp;
    sp.d = j.at("d").get<unsigned>();
    sp.seed = j.at("seed").get<uint64_t>();
    sp.scheme = scheme_from_json(j.at("scheme").dump());
    for (const auto& jc : j.at("coefficients")) {
        std::vector<Rational> comp;
        for (const auto& c : jc) comp.push_back(parse_rational(c.get<std::string>()));
        sp.coefficients.push_back(std::move(comp));
    }
    sp.f = parse_poly(j.at("f").get<std::string>(), sp.scheme.m + 1);
    if (sp.coefficients.size() != sp.scheme.components.size())
        fail(errc::invalid_argument, "coefficient blocks do not match components");
    for (size_t i = 0; i < sp.coefficients.size(); ++i)
        if (sp.coefficients[i].size() != sp.scheme.components[i].length)
            fail(errc::invalid_argument, "coefficient block length mismatch");
    return sp;
}

}  // namespace waring5
