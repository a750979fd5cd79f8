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

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "waring5/classify.hpp"
#include "waring5/strata.hpp"
#include "waring5/witness.hpp"

using json = nlohmann::ordered_json;
using namespace waring5;

namespace {

// Exit codes: 0 ok, 2 bad input, 3 NotBorderRankFive, 4 IrrationalSupport,
// 5 internal inconsistency (always a bug).
int exit_code_for(const error& e) {
    switch (e.code()) {
        case errc::not_border_rank_five: return 3;
        case errc::irrational_support: return 4;
        case errc::pullback_mismatch:
        case errc::recovery_inconsistent: return 5;
        default: return 2;
    }
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) fail(errc::invalid_argument, "cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct GlobalOpts {
    uint64_t seed = 0;
    unsigned precision_bits = 256;
    unsigned coeff_height = 100;
    bool rational_only = false;
    std::string output = "json";
    std::string input;  // file or "-" for stdin
    unsigned d = 0;
    unsigned m = 4;
    std::string type;
};

HomogPoly load_poly_input(const GlobalOpts& g) {
    std::string text = read_input(g.input);
    // Accept either bare polynomial text or a JSON object with an "f" field.
    std::string poly_text = text;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        poly_text = json::parse(text).at("f").get<std::string>();
    HomogPoly f = parse_poly(poly_text);
    if (g.d != 0 && g.d != f.degree)
        fail(errc::invalid_argument, "flag --d disagrees with the input degree");
    return f;
}

json classify_to_json(const RankReport& rep) { return json::parse(report_to_json(rep)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Waring rank toolkit for border-rank-5 forms in >= 5 variables"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "random seed (deterministic output per seed)");
    app.add_option("--precision-bits", g.precision_bits, "big-float mantissa bits (default 256)");
    app.add_option("--coeff-height", g.coeff_height, "sampling height bound (default 100)");
    app.add_flag("--rational-only", g.rational_only, "refuse non-rational witnesses");
    app.add_option("--output", g.output, "json|csv|text (default json)");

    auto* c_construct = app.add_subcommand("construct", "sample a point of prescribed type");
    bool unit_coeffs = false;
    c_construct->add_option("--type", g.type, "scheme type, e.g. 2:3,2")->required();
    c_construct->add_option("--m", g.m, "ambient projective dimension (default 4)");
    c_construct->add_option("--d", g.d, "degree (>= 9)")->required();
    c_construct->add_flag("--unit-coefficients", unit_coeffs, "all jet coefficients = 1");

    auto* c_classify = app.add_subcommand("classify", "recover the scheme and the exact rank");
    c_classify->add_option("--in", g.input, "polynomial file or '-' for stdin");
    c_classify->add_option("--d", g.d, "expected degree (checked against the input)");

    auto* c_decompose = app.add_subcommand("decompose", "Waring decomposition of a sample");
    c_decompose->add_option("--in", g.input, "SamplePoint JSON file or '-'");

    auto* c_verify = app.add_subcommand("verify", "verify a certificate or a decomposition");
    c_verify->add_option("--in", g.input, "JSON {f, scheme} or {f, d, decomposition}");

    auto* c_hilbert = app.add_subcommand("hilbert", "h0/h1 of the ideal sheaf twisted by d");
    c_hilbert->add_option("--in", g.input, "scheme JSON file or '-'");
    c_hilbert->add_option("--d", g.d, "twist degree")->required();

    auto* c_sylv = app.add_subcommand("sylvester", "binary form rank and decomposition");
    c_sylv->add_option("--in", g.input, "binary form in x0, x1 (text)");

    auto* c_stratum = app.add_subcommand("stratum-dim", "Jacobian probe of a stratum dimension");
    bool sweep = false;
    unsigned trials = 3;
    c_stratum->add_option("--type", g.type, "scheme type");
    c_stratum->add_option("--m", g.m, "ambient projective dimension (default 4)");
    c_stratum->add_option("--d", g.d, "degree (default 9)");
    c_stratum->add_option("--trials", trials, "parameter draws per probe (default 3)");
    c_stratum->add_flag("--sweep", sweep, "probe all 7 types for m in {4,5}, d in {9,10}");

    auto* c_witness = app.add_subcommand("curve-witness", "low-degree curve through many points");
    c_witness->add_option("--in", g.input, "JSON {m, points: [[p/q,...],...]}");
    c_witness->add_option("--d", g.d, "degree")->required();

    auto* c_pipeline = app.add_subcommand("pipeline",
                                          "construct -> classify -> decompose -> verify");
    c_pipeline->add_option("--type", g.type, "scheme type")->required();
    c_pipeline->add_option("--m", g.m, "ambient projective dimension (default 4)");
    c_pipeline->add_option("--d", g.d, "degree (>= 9)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        set_precision_bits(g.precision_bits);

        if (*c_construct) {
            SchemeType type = SchemeType::parse(g.type);
            JetScheme A = canonical_scheme(type, g.m);
            SampleOptions sopts;
            sopts.coeff_height = g.coeff_height;
            sopts.unit_coefficients = unit_coeffs;
            SamplePoint sp = sample_point(A, g.d, g.seed, sopts);
            std::cout << sample_to_json(sp) << "\n";
            return 0;
        }

        if (*c_classify) {
            HomogPoly f = load_poly_input(g);
            RankReport rep = classify_rank(f, f.degree, g.seed);
            if (g.output == "text") {
                std::cout << "type " << rep.type.str() << ", rank " << rep.rank << ", essential "
                          << rep.essential << "\n";
            } else {
                std::cout << report_to_json(rep) << "\n";
            }
            return 0;
        }

        if (*c_decompose) {
            SamplePoint sp = sample_from_json(read_input(g.input));
            WitnessOptions wopts;
            wopts.rational_only = g.rational_only;
            wopts.seed = g.seed;
            Decomposition dec = decompose(sp, wopts);
            std::cout << decomposition_to_json(dec) << "\n";
            return 0;
        }

        if (*c_verify) {
            json j = json::parse(read_input(g.input));
            HomogPoly f = parse_poly(j.at("f").get<std::string>());
            json out;
            if (j.contains("scheme")) {
                JetScheme A = scheme_from_json(j.at("scheme").dump());
                if (f.nvars < A.m + 1) f = pad_vars(f, A.m + 1);
                RankReport rep = verify_certificate(f, A, f.degree);
                out = classify_to_json(rep);
            } else if (j.contains("decomposition")) {
                Decomposition dec = decomposition_from_json(j.at("decomposition").dump());
                VerifyResult vr = verify_decomposition(f, dec);
                out["verified"] = vr.ok;
                if (vr.residual) {
                    unsigned digits = unsigned(precision_bits() * 0.3010299957) + 2;
                    out["residual"] = vr.residual->str(digits, std::ios_base::scientific);
                }
                if (!vr.ok) out["diagnostic"] = vr.diagnostic;
            } else {
                fail(errc::invalid_argument, "verify input needs 'scheme' or 'decomposition'");
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*c_hilbert) {
            JetScheme A = scheme_from_json(read_input(g.input));
            HilbertPair h = hilbert_h0_h1(A, g.d);
            json out;
            out["h0"] = h.h0;
            out["h1"] = h.h1;
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*c_sylv) {
            HomogPoly f = parse_poly(read_input(g.input), 2);
            if (f.nvars != 2) fail(errc::var_mismatch, "sylvester expects a binary form");
            SylvesterOptions sopts;
            sopts.seed = g.seed;
            size_t rank = binary_rank(f, sopts);
            auto dec = binary_decomposition(f, g.rational_only, sopts);
            json out;
            out["rank"] = rank;
            if (dec) {
                json terms = json::array();
                for (const auto& t : dec->terms) {
                    json jt;
                    jt["lambda"] = scalar_str(t.lambda);
                    jt["alpha"] = scalar_str(t.alpha);
                    jt["beta"] = scalar_str(t.beta);
                    terms.push_back(jt);
                }
                out["decomposition"] = terms;
                out["exactness"] = exactness_name(dec->exactness);
            } else {
                out["decomposition"] = nullptr;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*c_stratum) {
            if (sweep) {
                struct Job {
                    SchemeType type;
                    unsigned m, d;
                };
                std::vector<Job> jobs;
                for (const char* ts : {"1:5", "2:3,2", "2:4,1", "3:3,1,1", "3:2,2,1", "4:2,1,1,1",
                                       "5:1,1,1,1,1"})
                    for (unsigned m : {4u, 5u})
                        for (unsigned d : {9u, 10u})
                            jobs.push_back({SchemeType::parse(ts), m, d});
                std::vector<StratumProbe> results(jobs.size());
                // Bounded worker pool; results printed in job order.
                const unsigned workers =
                    std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
                std::vector<std::thread> pool;
                std::atomic<size_t> next{0};
                for (unsigned w = 0; w < workers; ++w)
                    pool.emplace_back([&] {
                        for (;;) {
                            size_t i = next.fetch_add(1);
                            if (i >= jobs.size()) return;
                            results[i] = stratum_dimension(jobs[i].type, jobs[i].m, jobs[i].d,
                                                           g.seed + i, trials);
                        }
                    });
                for (auto& t : pool) t.join();
                if (g.output == "csv" || g.output == "text") {
                    std::cout << probe_csv_header() << "\n";
                    for (const auto& p : results) std::cout << probe_csv_line(p) << "\n";
                } else {
                    json arr = json::array();
                    for (const auto& p : results) arr.push_back(json::parse(probe_to_json(p)));
                    std::cout << arr.dump() << "\n";
                }
                return 0;
            }
            SchemeType type = SchemeType::parse(g.type);
            StratumProbe p = stratum_dimension(type, g.m, g.d ? g.d : 9, g.seed, trials);
            if (g.output == "csv")
                std::cout << probe_csv_header() << "\n" << probe_csv_line(p) << "\n";
            else
                std::cout << probe_to_json(p) << "\n";
            return 0;
        }

        if (*c_witness) {
            json j = json::parse(read_input(g.input));
            unsigned m = j.at("m").get<unsigned>();
            std::vector<std::vector<Rational>> pts;
            for (const auto& jp : j.at("points")) {
                std::vector<Rational> p;
                for (const auto& x : jp) p.push_back(parse_rational(x.get<std::string>()));
                pts.push_back(std::move(p));
            }
            auto w = low_degree_curve_witness(pts, m, g.d);
            json out;
            if (!w) {
                out["witness"] = nullptr;
            } else {
                out["kind"] = w->kind == CurveKind::line
                                  ? "line"
                                  : (w->kind == CurveKind::conic ? "conic" : "plane_cubic");
                out["incidence"] = w->incidence;
                json sp = json::array();
                for (const auto& p : w->span_points) {
                    json jp = json::array();
                    for (const auto& x : p) jp.push_back(rational_str(x));
                    sp.push_back(jp);
                }
                out["span_points"] = sp;
                if (!w->plane_curve.empty()) {
                    json pc = json::array();
                    for (const auto& x : w->plane_curve) pc.push_back(rational_str(x));
                    out["plane_curve"] = pc;
                }
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (*c_pipeline) {
            SchemeType type = SchemeType::parse(g.type);
            JetScheme A = canonical_scheme(type, g.m);
            SampleOptions sopts;
            sopts.coeff_height = g.coeff_height;
            SamplePoint sp = sample_point(A, g.d, g.seed, sopts);
            RankReport rep = classify_rank(sp.f, g.d, g.seed);
            WitnessOptions wopts;
            wopts.rational_only = g.rational_only;
            wopts.seed = g.seed;
            Decomposition dec = decompose(sp, wopts);
            VerifyResult vr = verify_decomposition(sp.f, dec);
            bool structure = structure_check(dec, sp.scheme, g.d);
            json out;
            out["sample"] = json::parse(sample_to_json(sp));
            out["report"] = classify_to_json(rep);
            out["decomposition"] = json::parse(decomposition_to_json(dec));
            out["verified"] = vr.ok && structure && rep.all_ok() &&
                              dec.terms.size() == rank_from_type(type, g.d) &&
                              rep.type == type;
            std::cout << out.dump() << "\n";
            return out["verified"].get<bool>() ? 0 : 5;
        }
    } catch (const error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
