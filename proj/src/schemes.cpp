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

#include "waring5/schemes.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "waring5/upoly.hpp"

namespace waring5 {

using json = nlohmann::ordered_json;

unsigned SchemeType::total() const {
    unsigned t = 0;
    for (unsigned b : degrees) t += b;
    return t;
}

std::string SchemeType::str() const {
    std::ostringstream out;
    out << degrees.size() << ":";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (i) out << ",";
        out << degrees[i];
    }
    return out.str();
}

SchemeType SchemeType::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) fail(errc::bad_type, "type must look like 's:b1,b2,...'");
    SchemeType t;
    try {
        unsigned count = unsigned(std::stoul(s.substr(0, colon)));
        std::istringstream rest(s.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) t.degrees.push_back(unsigned(std::stoul(item)));
        if (t.degrees.size() != count) fail(errc::bad_type, "component count mismatch in type");
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::bad_type, "unparseable type string '" + s + "'");
    }
    std::sort(t.degrees.begin(), t.degrees.end(), std::greater<unsigned>());
    for (unsigned b : t.degrees)
        if (b == 0) fail(errc::bad_type, "component degrees must be positive");
    return t;
}

unsigned JetScheme::total_degree() const {
    unsigned t = 0;
    for (const auto& c : components) t += c.length;
    return t;
}

SchemeType JetScheme::type() const {
    SchemeType t;
    for (const auto& c : components) t.degrees.push_back(c.length);
    std::sort(t.degrees.begin(), t.degrees.end(), std::greater<unsigned>());
    return t;
}

namespace {

std::vector<Rational> projective_normalize(const std::vector<Rational>& p) {
    for (const auto& x : p) {
        if (x.is_zero()) continue;
        std::vector<Rational> out(p.size());
        for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] / x;
        return out;
    }
    return p;  // zero vector, caught by validate
}

}  // namespace

void JetScheme::validate() const {
    if (components.empty()) fail(errc::invalid_argument, "scheme needs at least one component");
    std::set<std::vector<Rational>> seen;
    for (const auto& c : components) {
        if (c.length < 1) fail(errc::invalid_argument, "component length must be >= 1");
        if (c.path.points.empty()) fail(errc::invalid_argument, "component path is empty");
        for (const auto& p : c.path.points)
            if (p.size() != size_t(m + 1))
                fail(errc::invalid_argument, "path point has wrong dimension");
        bool zero = true;
        for (const auto& x : c.path.points.front())
            if (!x.is_zero()) zero = false;
        if (zero) fail(errc::invalid_argument, "support point p0 must be nonzero");
        if (!seen.insert(projective_normalize(c.support())).second)
            fail(errc::invalid_argument, "component supports must be pairwise distinct");
    }
}

Matrix veronese_span_matrix(const JetScheme& A, unsigned d) {
    A.validate();
    const size_t cols = monomial_count(A.m + 1, d);
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(A.total_degree());
    for (const auto& comp : A.components)
        for (unsigned j = 0; j < comp.length; ++j)
            rows.push_back(coefficient_vector(jet_coefficient(comp.path, j, d)));
    return matrix_from_rows(rows, cols);
}

Matrix scheme_condition_matrix(const JetScheme& A, unsigned k) {
    A.validate();
    const unsigned nv = A.m + 1;
    const auto& monos = monomials_of_degree(nv, k);
    Matrix M(A.total_degree(), monos.size());
    size_t row0 = 0;
    for (const auto& comp : A.components) {
        // Truncated power series of each coordinate of the path.
        const unsigned trunc = comp.length;  // need t^0..t^{b-1}
        std::vector<UPoly> coord(nv);
        for (unsigned i = 0; i < nv; ++i) {
            UPoly s;
            for (const auto& p : comp.path.points) s.push_back(p[i]);
            s.resize(std::min<size_t>(s.size(), trunc));
            coord[i] = up_trim(std::move(s));
        }
        auto truncated_mul = [&](const UPoly& a, const UPoly& b) {
            UPoly r(std::min<size_t>(trunc, a.size() + b.size()), Rational(0));
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i].is_zero()) continue;
                for (size_t j = 0; j < b.size() && i + j < trunc; ++j) r[i + j] += a[i] * b[j];
            }
            return up_trim(std::move(r));
        };
        for (size_t cidx = 0; cidx < monos.size(); ++cidx) {
            UPoly prod{Rational(1)};
            for (unsigned i = 0; i < nv && !prod.empty(); ++i)
                for (unsigned rep = 0; rep < monos[cidx][i] && !prod.empty(); ++rep)
                    prod = truncated_mul(prod, coord[i]);
            for (unsigned j = 0; j < comp.length; ++j)
                if (j < prod.size() && !prod[j].is_zero()) M(row0 + j, cidx) = prod[j];
        }
        row0 += comp.length;
    }
    return M;
}

bool is_linearly_independent(const JetScheme& A) {
    return mat_rank(veronese_span_matrix(A, 1)) == A.total_degree();
}

HilbertPair hilbert_h0_h1(const JetScheme& A, unsigned d) {
    const size_t rank = mat_rank(veronese_span_matrix(A, d));
    HilbertPair h;
    h.h1 = A.total_degree() - rank;
    h.h0 = monomial_count(A.m + 1, d) - rank;
    return h;
}

JetScheme scheme_of_points(unsigned m, const std::vector<std::vector<Rational>>& pts) {
    JetScheme A;
    A.m = m;
    for (const auto& p : pts) A.components.push_back(JetComponent{CurvePath{{p}}, 1});
    return A;
}

// ---------------------------------------------------------------------------
// Lemma-style curve witness search for reduced schemes
// ---------------------------------------------------------------------------

namespace {

/// Coordinates of z in the span of the given points; nullopt if outside.
std::optional<std::vector<Rational>> span_coords(
    const std::vector<const std::vector<Rational>*>& basis, const std::vector<Rational>& z) {
    const size_t nv = z.size();
    Matrix M(nv, basis.size());
    std::vector<Scalar> rhs(nv);
    for (size_t r = 0; r < nv; ++r) {
        for (size_t c = 0; c < basis.size(); ++c) M(r, c) = (*basis[c])[r];
        rhs[r] = z[r];
    }
    auto sol = solve_linear(M, rhs);
    if (!sol) return std::nullopt;
    std::vector<Rational> out;
    out.reserve(basis.size());
    for (const auto& s : *sol) out.push_back(std::get<Rational>(s));
    return out;
}

std::string span_key(std::vector<std::vector<Rational>> rows) {
    // Reduced row echelon form as a canonical label of the span.
    const size_t nc = rows.front().size();
    size_t rank = 0;
    for (size_t c = 0; c < nc && rank < rows.size(); ++c) {
        size_t piv = rows.size();
        for (size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        Rational inv = Rational(1) / rows[rank][c];
        for (size_t j = c; j < nc; ++j) rows[rank][j] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Rational f = rows[r][c];
            for (size_t j = c; j < nc; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    std::ostringstream key;
    for (size_t r = 0; r < rank; ++r)
        for (const auto& x : rows[r]) key << rational_str(x) << ";";
    return key.str();
}

/// Evaluations of the degree-k monomials in the plane coordinates.
std::vector<Rational> plane_monomial_row(const std::vector<Rational>& coords, unsigned k) {
    const auto& monos = monomials_of_degree(3, k);
    std::vector<Rational> row;
    row.reserve(monos.size());
    for (const auto& e : monos) {
        Rational v(1);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep) v *= coords[i];
        row.push_back(v);
    }
    return row;
}

Rational eval_plane_curve(const std::vector<Rational>& curve, const std::vector<Rational>& coords,
                          unsigned k) {
    auto row = plane_monomial_row(coords, k);
    Rational acc(0);
    for (size_t i = 0; i < row.size(); ++i) acc += curve[i] * row[i];
    return acc;
}

}  // namespace

std::optional<CurveWitness> low_degree_curve_witness(const std::vector<std::vector<Rational>>& Z,
                                                     unsigned m, unsigned d) {
    if (Z.size() < 2) return std::nullopt;
    {
        std::set<std::vector<Rational>> seen;
        for (const auto& p : Z)
            if (!seen.insert(projective_normalize(p)).second)
                fail(errc::non_reduced_input, "duplicate points in Z");
    }
    if (hilbert_h0_h1(scheme_of_points(m, Z), d).h1 == 0) return std::nullopt;

    const size_t n = Z.size();

    // Lines through all point pairs (complete search).
    {
        std::set<std::string> seen_lines;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                if (!seen_lines.insert(span_key({Z[i], Z[j]})).second) continue;
                size_t count = 0;
                for (size_t k = 0; k < n; ++k)
                    if (span_coords({&Z[i], &Z[j]}, Z[k])) ++count;
                if (count >= size_t(d) + 1) {
                    CurveWitness w;
                    w.kind = CurveKind::line;
                    w.incidence = count;
                    w.span_points = {Z[i], Z[j]};
                    return w;
                }
            }
    }

    // Conics then cubics inside planes spanned by point triples.
    for (unsigned stage = 0; stage < 2; ++stage) {
        const unsigned k = stage == 0 ? 2 : 3;
        const size_t threshold = stage == 0 ? 2 * size_t(d) + 2 : 3 * size_t(d);
        std::set<std::string> seen_planes;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (size_t l = j + 1; l < n; ++l) {
                    // Skip degenerate triples.
                    if (span_coords({&Z[i], &Z[j]}, Z[l])) continue;
                    if (!seen_planes.insert(span_key({Z[i], Z[j], Z[l]})).second) continue;
                    std::vector<std::vector<Rational>> coords;
                    for (size_t t = 0; t < n; ++t) {
                        auto c = span_coords({&Z[i], &Z[j], &Z[l]}, Z[t]);
                        if (c) coords.push_back(*c);
                    }
                    if (coords.size() < threshold) continue;
                    std::vector<std::vector<Scalar>> rows;
                    for (const auto& c : coords) {
                        auto r = plane_monomial_row(c, k);
                        rows.emplace_back(r.begin(), r.end());
                    }
                    Matrix M = matrix_from_rows(rows, monomial_count(3, k));
                    auto kern = mat_kernel(M);
                    if (kern.empty()) continue;
                    CurveWitness w;
                    w.kind = stage == 0 ? CurveKind::conic : CurveKind::plane_cubic;
                    w.incidence = coords.size();
                    w.span_points = {Z[i], Z[j], Z[l]};
                    w.plane_curve.reserve(kern.front().size());
                    for (const auto& s : kern.front())
                        w.plane_curve.push_back(std::get<Rational>(s));
                    return w;
                }
    }
    return std::nullopt;
}

size_t curve_witness_incidence(const CurveWitness& w,
                               const std::vector<std::vector<Rational>>& Z) {
    size_t count = 0;
    if (w.kind == CurveKind::line) {
        for (const auto& z : Z)
            if (span_coords({&w.span_points[0], &w.span_points[1]}, z)) ++count;
        return count;
    }
    const unsigned k = w.kind == CurveKind::conic ? 2 : 3;
    for (const auto& z : Z) {
        auto c = span_coords({&w.span_points[0], &w.span_points[1], &w.span_points[2]}, z);
        if (c && eval_plane_curve(w.plane_curve, *c, k).is_zero()) ++count;
    }
    return count;
}

// -- JSON ----------------------------------------------------------------------

std::string scheme_to_json(const JetScheme& A) {
    json j;
    j["m"] = A.m;
    j["components"] = json::array();
    for (const auto& c : A.components) {
        json jc;
        jc["length"] = c.length;
        jc["path"] = json::array();
        for (const auto& p : c.path.points) {
            json jp = json::array();
            for (const auto& x : p) jp.push_back(rational_str(x));
            jc["path"].push_back(jp);
        }
        j["components"].push_back(jc);
    }
    return j.dump();
}

JetScheme scheme_from_json(const std::string& text) {
    json j = json::parse(text);
    JetScheme A;
    A.m = j.at("m").get<unsigned>();
    for (const auto& jc : j.at("components")) {
        JetComponent comp;
        comp.length = jc.at("length").get<unsigned>();
        for (const auto& jp : jc.at("path")) {
            std::vector<Rational> p;
            for (const auto& x : jp) p.push_back(parse_rational(x.get<std::string>()));
            comp.path.points.push_back(std::move(p));
        }
        A.components.push_back(std::move(comp));
    }
    A.validate();
    return A;
}

}  // namespace waring5
