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

#include "waring5/strata.hpp"

#include <json.hpp>
#include <sstream>

#include "waring5/poly.hpp"
#include "waring5/rng.hpp"

namespace waring5 {

using json = nlohmann::ordered_json;

namespace {

/// One random parameter draw: path points in normalized charts plus jet
/// coefficients. Gauge directions (reparametrization and unit rescaling of
/// the path) are not eliminated; they sit in the Jacobian kernel, so the
/// measured rank is compared against the cone dimension 5m+s directly.
struct Draw {
    JetScheme scheme;
    std::vector<std::vector<Rational>> coeffs;
    size_t parameter_count = 0;
};

Draw draw_parameters(const SchemeType& type, unsigned m, Rng& rng) {
    Draw dr;
    dr.scheme.m = m;
    for (unsigned b : type.degrees) {
        JetComponent comp;
        comp.length = b;
        // Support in the chart x0 = 1.
        std::vector<Rational> p0(m + 1);
        p0[0] = 1;
        for (unsigned i = 1; i <= m; ++i) p0[i] = rng.small_int(9);
        dr.parameter_count += m;
        comp.path.points.push_back(std::move(p0));
        if (b >= 2) {
            // Leading path vector normalized to the chart x0 = 0.
            std::vector<Rational> p1(m + 1);
            p1[0] = 0;
            for (unsigned i = 1; i <= m; ++i) p1[i] = rng.small_int(9);
            dr.parameter_count += m;
            comp.path.points.push_back(std::move(p1));
        }
        for (unsigned j = 2; j < b; ++j) {
            std::vector<Rational> pj(m + 1);
            for (unsigned i = 0; i <= m; ++i) pj[i] = rng.small_int(9);
            dr.parameter_count += m + 1;
            comp.path.points.push_back(std::move(pj));
        }
        std::vector<Rational> cs;
        for (unsigned j = 0; j < b; ++j) cs.push_back(rng.small_int(9));
        dr.parameter_count += b;
        dr.coeffs.push_back(std::move(cs));
        dr.scheme.components.push_back(std::move(comp));
    }
    return dr;
}

}  // namespace

StratumProbe stratum_dimension(const SchemeType& type, unsigned m, unsigned d, uint64_t seed,
                               unsigned trials) {
    if (type.total() != 5) fail(errc::bad_type, "type degrees must sum to 5");
    if (m < 4) fail(errc::bad_type, "ambient dimension must be at least 4");
    if (d < 9) fail(errc::bad_type, "stratum probes stated for d >= 9");

    StratumProbe probe;
    probe.type = type;
    probe.m = m;
    probe.d = d;
    Rng rng(seed ^ 0x57a7a0ull);

    for (unsigned trial = 0; trial < trials; ++trial) {
        Draw dr = draw_parameters(type, m, rng);
        probe.parameter_count = dr.parameter_count;

        // Columns of the Jacobian: exact derivatives of
        //   f = sum_i sum_j c_{i,j} jet_j(path_i, d)
        // with respect to every free parameter.
        std::vector<HomogPoly> cols;
        for (size_t i = 0; i < dr.scheme.components.size(); ++i) {
            const auto& comp = dr.scheme.components[i];
            // d/dc_{i,j} = jet_j(path_i).
            std::vector<HomogPoly> jets;
            for (unsigned j = 0; j < comp.length; ++j)
                jets.push_back(jet_coefficient(comp.path, j, d));
            for (unsigned j = 0; j < comp.length; ++j) cols.push_back(jets[j]);

            // d/dp_{k,l} = d * x_l * sum_{j>=k} c_{i,j} jet_{j-k}(path_i, d-1).
            std::vector<HomogPoly> jets1;
            for (unsigned j = 0; j < comp.length; ++j)
                jets1.push_back(jet_coefficient(comp.path, j, d - 1));
            for (unsigned k = 0; k < comp.length; ++k) {
                HomogPoly S(m + 1, d - 1);
                for (unsigned j = k; j < comp.length; ++j)
                    S = poly_add(S, poly_scale(jets1[j - k], Scalar(dr.coeffs[i][j])));
                S = poly_scale(S, Scalar(Rational(long(d))));
                for (unsigned l = 0; l <= m; ++l) {
                    // Chart-fixed coordinates are not parameters.
                    if (k == 0 && l == 0) continue;
                    if (k == 1 && l == 0 && comp.length >= 2) continue;
                    HomogPoly col(m + 1, d);
                    for (const auto& [e, c] : S.terms) {
                        ExponentVec w = e;
                        ++w[l];
                        col.add_term(w, c);
                    }
                    cols.push_back(std::move(col));
                }
            }
        }

        // Prune to the union of supports; rank is unaffected.
        std::map<ExponentVec, size_t, TermOrder> support;
        for (const auto& col : cols)
            for (const auto& [e, c] : col.terms) support.emplace(e, 0);
        {
            size_t idx = 0;
            for (auto& [e, i] : support) i = idx++;
        }
        Matrix J(support.size(), cols.size());
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& [e, coeff] : cols[c].terms) J(support.at(e), c) = coeff;
        size_t rank = mat_rank(J);
        probe.trial_ranks.push_back(rank);
        if (rank > probe.jacobian_rank) probe.jacobian_rank = rank;
    }
    probe.projective_dimension = probe.jacobian_rank ? probe.jacobian_rank - 1 : 0;
    return probe;
}

std::string probe_to_json(const StratumProbe& p) {
    json j;
    j["type"] = p.type.str();
    j["m"] = p.m;
    j["d"] = p.d;
    j["parameter_count"] = p.parameter_count;
    j["jacobian_rank"] = p.jacobian_rank;
    j["projective_dimension"] = p.projective_dimension;
    j["trial_ranks"] = p.trial_ranks;
    return j.dump();
}

std::string probe_csv_header() {
    return "type,m,d,parameter_count,jacobian_rank,projective_dimension";
}

std::string probe_csv_line(const StratumProbe& p) {
    std::ostringstream out;
    out << p.type.str() << "," << p.m << "," << p.d << "," << p.parameter_count << ","
        << p.jacobian_rank << "," << p.projective_dimension;
    return out.str();
}

}  // namespace waring5
