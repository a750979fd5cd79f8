// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Cases within the heavy criteria run on a small worker
// pool; every computation is deterministic per the fixed seeds below.

#include <atomic>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "waring5/classify.hpp"
#include "waring5/rng.hpp"
#include "waring5/strata.hpp"
#include "waring5/witness.hpp"

using namespace waring5;

namespace {

const char* kTypes[7] = {"1:5", "2:3,2", "2:4,1", "3:3,1,1", "3:2,2,1", "4:2,1,1,1",
                         "5:1,1,1,1,1"};

struct Failure {
    std::string what;
};

std::mutex g_mu;
std::vector<std::string> g_notes;

void note(const std::string& s) {
    std::lock_guard<std::mutex> lock(g_mu);
    g_notes.push_back(s);
}

/// Runs jobs 0..n-1 on two workers, collecting failure notes.
void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (const std::exception& e) {
                note(std::string("exception: ") + e.what());
            }
        }
    };
    std::thread t1(worker), t2(worker);
    t1.join();
    t2.join();
}

bool report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    return ok;
}

struct Case {
    SchemeType type;
    unsigned m, d;
    uint64_t seed;
};

std::vector<Case> table_cases() {
    std::vector<Case> cases;
    for (const char* ts : kTypes)
        for (unsigned m : {4u, 5u})
            for (unsigned d : {9u, 10u, 11u, 12u})
                for (uint64_t seed : {1u, 2u, 3u})
                    cases.push_back({SchemeType::parse(ts), m, d, seed});
    return cases;
}

// -- criterion 1: the rank table end to end --------------------------------

bool criterion1() {
    auto cases = table_cases();
    std::atomic<size_t> failures{0};
    parallel_for(cases.size(), [&](size_t i) {
        const Case& c = cases[i];
        SamplePoint sp = sample_point(canonical_scheme(c.type, c.m), c.d, c.seed);
        WitnessOptions wopts;
        wopts.seed = c.seed;
        Decomposition dec = decompose(sp, wopts);
        const size_t expected = rank_from_type(c.type, c.d);
        bool ok = dec.terms.size() == expected;
        auto vr = verify_decomposition(sp.f, dec);
        ok = ok && vr.ok;
        if (dec.exactness == Exactness::numeric)
            ok = ok && vr.residual && *vr.residual < BigFloat("1e-40");
        ok = ok && structure_check(dec, sp.scheme, c.d);
        if (!ok) {
            failures.fetch_add(1);
            note("criterion1 " + c.type.str() + " m=" + std::to_string(c.m) +
                 " d=" + std::to_string(c.d) + " seed=" + std::to_string(c.seed) +
                 (vr.ok ? "" : " verify failed: " + vr.diagnostic) +
                 " terms=" + std::to_string(dec.terms.size()));
        }
    });
    std::ostringstream det;
    det << cases.size() - failures.load() << "/" << cases.size()
        << " verified decompositions at the exact table cardinality";
    return report(1, "Theorem rank table end-to-end", failures.load() == 0, det.str());
}

// -- criterion 2: round-trip classification --------------------------------

bool criterion2() {
    auto cases = table_cases();
    std::atomic<size_t> failures{0};
    parallel_for(cases.size(), [&](size_t i) {
        const Case& c = cases[i];
        SamplePoint sp = sample_point(canonical_scheme(c.type, c.m), c.d, c.seed);
        Matrix M = random_projectivity(c.m, c.seed + 1000, 2);
        HomogPoly g = substitute_linear(sp.f, M.transposed());
        RankReport rep = classify_rank(g, c.d, c.seed);
        bool ok = rep.type == c.type && rep.rank == rank_from_type(c.type, c.d) && rep.all_ok();
        if (!ok) {
            failures.fetch_add(1);
            note("criterion2 " + c.type.str() + " m=" + std::to_string(c.m) +
                 " d=" + std::to_string(c.d) + " got " + rep.type.str());
        }
    });
    std::ostringstream det;
    det << cases.size() - failures.load() << "/" << cases.size()
        << " transformed samples classified back to their type";
    return report(2, "round-trip classification", failures.load() == 0, det.str());
}

// -- criterion 3: stratum dimensions ----------------------------------------

bool criterion3() {
    struct Job {
        SchemeType type;
        unsigned m, d;
    };
    std::vector<Job> jobs;
    for (const char* ts : kTypes)
        for (unsigned m : {4u, 5u})
            for (unsigned d : {9u, 10u}) jobs.push_back({SchemeType::parse(ts), m, d});
    std::atomic<size_t> failures{0};
    parallel_for(jobs.size(), [&](size_t i) {
        const Job& j = jobs[i];
        StratumProbe p = stratum_dimension(j.type, j.m, j.d, 17 + i, 3);
        size_t expect = 5 * size_t(j.m) + j.type.s() - 1;
        if (p.projective_dimension != expect) {
            failures.fetch_add(1);
            note("criterion3 " + j.type.str() + " m=" + std::to_string(j.m) + " got " +
                 std::to_string(p.projective_dimension) + " expected " + std::to_string(expect));
        }
        for (size_t r : p.trial_ranks)
            if (r != p.jacobian_rank) {
                failures.fetch_add(1);
                note("criterion3 unstable rank for " + j.type.str());
            }
    });
    std::ostringstream det;
    det << jobs.size() - failures.load() << "/" << jobs.size()
        << " probes match 5m+s-1 exactly";
    return report(3, "stratum dimensions (Jacobian probes)", failures.load() == 0, det.str());
}

// -- criterion 4: concision/border invariants + mutation detection ----------

bool criterion4() {
    std::vector<Case> cases;
    for (const char* ts : kTypes)
        for (unsigned m : {4u, 5u}) cases.push_back({SchemeType::parse(ts), m, 9, 11});
    std::atomic<size_t> failures{0};
    parallel_for(cases.size(), [&](size_t i) {
        const Case& c = cases[i];
        JetScheme A = canonical_scheme(c.type, c.m);
        SamplePoint sp = sample_point(A, c.d, c.seed);
        if (essential_vars(sp.f).essential_count != 5 || border_rank_lower_bound(sp.f) != 5) {
            failures.fetch_add(1);
            note("criterion4 invariants fail for " + c.type.str());
            return;
        }
        // Mutations: zero one component's top coefficient. The mutated f
        // must drop below border rank 5 or lose minimality against A.
        for (size_t comp = 0; comp < A.components.size(); ++comp) {
            HomogPoly f2(c.m + 1, c.d);
            for (size_t i2 = 0; i2 < A.components.size(); ++i2)
                for (unsigned j = 0; j < A.components[i2].length; ++j) {
                    if (i2 == comp && j + 1 == A.components[i2].length) continue;
                    f2 = poly_add(f2, poly_scale(jet_coefficient(A.components[i2].path, j, c.d),
                                                 Scalar(sp.coefficients[i2][j])));
                }
            bool detected = false;
            if (f2.is_zero() || border_rank_lower_bound(f2) < 5) detected = true;
            if (!detected) {
                RankReport rep = verify_certificate(f2, A, c.d);
                bool minimality = true;
                for (const auto& ch : rep.checks)
                    if (ch.name == "minimality") minimality = ch.ok;
                detected = !minimality;
            }
            if (!detected) {
                failures.fetch_add(1);
                note("criterion4 mutation undetected for " + c.type.str() + " component " +
                     std::to_string(comp));
            }
        }
    });
    std::ostringstream det;
    det << "invariants and 100% mutation detection over " << cases.size() << " samples";
    return report(4, "concision and border-rank invariants", failures.load() == 0, det.str());
}

// -- criterion 5: Sylvester suite -------------------------------------------

bool criterion5() {
    size_t failures = 0;
    for (unsigned a = 1; a <= 39; ++a)
        for (unsigned b = 1; b <= a && a + b <= 40; ++b) {
            HomogPoly g(2, a + b);
            g.add_term(ExponentVec{a, b}, Scalar(Rational(1)));
            if (binary_rank(g) != a + 1) {
                ++failures;
                note("criterion5 monomial rank " + std::to_string(a) + "," + std::to_string(b));
            }
        }
    for (unsigned d = 9; d <= 12; ++d) {
        HomogPoly g(2, 4 * d);
        g.add_term(ExponentVec{4 * d - 4, 4}, Scalar(Rational(1)));
        if (binary_rank(g) != 4 * d - 3) {
            ++failures;
            note("criterion5 jet form rank at d=" + std::to_string(d));
        }
    }
    // Exact re-expansion of returned decompositions across a spread of
    // inputs (exact flags only; numeric handled in criterion 1).
    Rng rng(2025);
    for (int trial = 0; trial < 12; ++trial) {
        HomogPoly g(2, 9);
        unsigned k = 1 + unsigned(rng.below(5));
        std::set<std::pair<long, long>> used;
        unsigned placed = 0;
        while (placed < k) {
            long p = rng.int_in(-9, 9), q = rng.int_in(1, 9);
            if (!used.insert({p, q}).second) continue;
            g = poly_add(g, power_of_linear(linear_form_rational({Rational(p), Rational(q)}), 9));
            ++placed;
        }
        auto dec = binary_decomposition(g, false, SylvesterOptions{.seed = uint64_t(trial)});
        if (!dec || dec->exactness == Exactness::numeric ||
            !verify_binary_decomposition(g, *dec)) {
            ++failures;
            note("criterion5 exact re-expansion failed on trial " + std::to_string(trial));
        }
    }
    {
        HomogPoly g = parse_poly("x0^8*x1");
        auto dec = binary_decomposition(g, true, SylvesterOptions{.seed = 5});
        if (!dec || !verify_binary_decomposition(g, *dec)) {
            ++failures;
            note("criterion5 x^8 y decomposition");
        }
    }
    return report(5, "Sylvester suite (monomial ranks, jet forms, exact re-expansion)",
                  failures == 0);
}

// -- criterion 6: Lemma-style desk check ------------------------------------

bool criterion6() {
    std::atomic<size_t> failures{0};
    const unsigned d = 9;
    struct Job {
        int kind;  // 0 line, 1 conic, 2 cubic, 3 control
        unsigned m;
        uint64_t seed;
    };
    std::vector<Job> jobs;
    for (int kind = 0; kind < 4; ++kind)
        for (unsigned i = 0; i < 50; ++i) jobs.push_back({kind, 2 + i % 3, 100 + i});

    parallel_for(jobs.size(), [&](size_t ji) {
        const Job& job = jobs[ji];
        const unsigned m = job.m;
        Rng rng(job.seed * 7919 + job.kind);
        auto rand_point = [&](unsigned dim) {
            std::vector<Rational> p(dim + 1);
            for (auto& x : p) x = rng.rational(30);
            bool zero = true;
            for (const auto& x : p)
                if (!x.is_zero()) zero = false;
            if (zero) p[0] = 1;
            return p;
        };
        std::vector<std::vector<Rational>> Z;
        auto add_distinct = [&](std::vector<Rational> p) {
            for (const auto& q : Z)
                if (q == p) return false;
            Z.push_back(std::move(p));
            return true;
        };

        if (job.kind == 0) {
            // d+2 points on a random line + 5 generic points.
            auto a = rand_point(m), b = rand_point(m);
            long t = 0;
            while (Z.size() < size_t(d) + 2) {
                std::vector<Rational> p(m + 1);
                for (unsigned i = 0; i <= m; ++i) p[i] = a[i] + Rational(t) * b[i];
                add_distinct(std::move(p));
                ++t;
            }
            for (int i = 0; i < 5; ++i) add_distinct(rand_point(m));
        } else if (job.kind == 1) {
            // 2d+2 points on a plane conic + 3 generic points.
            auto a = rand_point(m), b = rand_point(m), c = rand_point(m);
            long t = 0;
            while (Z.size() < 2 * size_t(d) + 2) {
                std::vector<Rational> p(m + 1);
                for (unsigned i = 0; i <= m; ++i)
                    p[i] = a[i] + Rational(t) * b[i] + Rational(t) * Rational(t) * c[i];
                add_distinct(std::move(p));
                ++t;
            }
            for (int i = 0; i < 3; ++i) add_distinct(rand_point(m));
        } else if (job.kind == 2) {
            // 3d+1 points on a rational (nodal) plane cubic.
            auto a = rand_point(m), b = rand_point(m), c = rand_point(m);
            long t = 2;
            while (Z.size() < 3 * size_t(d) + 1) {
                Rational u = Rational(t) * Rational(t) - 1;
                std::vector<Rational> p(m + 1);
                for (unsigned i = 0; i <= m; ++i)
                    p[i] = u * a[i] + Rational(t) * u * b[i] + c[i];
                add_distinct(std::move(p));
                ++t;
            }
        } else {
            // Control: a handful of generic points, h1 = 0.
            for (int i = 0; i < 20; ++i) add_distinct(rand_point(m));
        }

        auto h = hilbert_h0_h1(scheme_of_points(m, Z), d);
        auto w = low_degree_curve_witness(Z, m, d);
        bool ok = true;
        if (job.kind == 3) {
            ok = h.h1 == 0 && !w.has_value();
        } else {
            ok = h.h1 > 0 && w.has_value();
            if (ok) {
                size_t threshold = job.kind == 0 ? d + 1 : (job.kind == 1 ? 2 * d + 2 : 3 * d);
                ok = w->incidence >= threshold &&
                     curve_witness_incidence(*w, Z) == w->incidence;
            }
        }
        if (!ok) {
            failures.fetch_add(1);
            note("criterion6 kind=" + std::to_string(job.kind) + " m=" + std::to_string(m) +
                 " seed=" + std::to_string(job.seed));
        }
    });
    std::ostringstream det;
    det << "150 planted witnesses found, 50 h1=0 controls clean";
    return report(6, "low-degree curve desk check", failures.load() == 0, det.str());
}

// -- criterion 7: plane-case bounds ------------------------------------------

bool criterion7() {
    size_t failures = 0;
    const unsigned d = 9;
    auto rv = [](std::initializer_list<long> v) {
        return std::vector<Rational>(v.begin(), v.end());
    };

    // (a) five points on a smooth conic: bound 2d, decomposition optional.
    {
        std::vector<std::vector<Rational>> pts;
        for (long t = 1; t <= 5; ++t) pts.push_back(rv({1, t, t * t}));
        JetScheme A = scheme_of_points(2, pts);
        Rng rng(71);
        HomogPoly f(3, d);
        for (const auto& p : pts)
            f = poly_add(f, poly_scale(power_of_linear(linear_form_rational(p), d),
                                       Scalar(rng.rational(9, true))));
        PlaneBound pb = plane_upper_bound(f, A, d, WitnessOptions{.seed = 71});
        if (pb.bound != 2 * d || pb.curve.degree != 2) {
            ++failures;
            note("criterion7 smooth conic bound");
        }
        if (pb.decomposition &&
            !(pb.decomposition->terms.size() <= 2 * d && verify_decomposition(f, *pb.decomposition).ok)) {
            ++failures;
            note("criterion7 smooth conic decomposition");
        }
    }

    // (b) deg(L cap A) = 4: bound 2d with the conic L u D.
    {
        JetScheme A;
        A.m = 2;
        A.components.push_back(JetComponent{CurvePath{{rv({1, 0, 0}), rv({0, 1, 0})}}, 4});
        A.components.push_back(JetComponent{CurvePath{{rv({0, 0, 1})}}, 1});
        Rng rng(72);
        HomogPoly f(3, d);
        for (unsigned j = 0; j < 4; ++j)
            f = poly_add(f, poly_scale(jet_coefficient(A.components[0].path, j, d),
                                       Scalar(rng.rational(9, true))));
        f = poly_add(f, power_of_linear(linear_form_rational(rv({0, 0, 1})), d));
        PlaneBound pb = plane_upper_bound(f, A, d, WitnessOptions{.seed = 72});
        if (pb.bound != 2 * d || pb.curve.degree != 2) {
            ++failures;
            note("criterion7 contact-4 bound");
        }
        if (pb.decomposition && !verify_decomposition(f, *pb.decomposition).ok) {
            ++failures;
            note("criterion7 contact-4 decomposition");
        }
    }

    // (c) deg(L cap A) = 3 via the (1, t, t^3) jet: bound 3d with a cubic.
    {
        JetScheme A;
        A.m = 2;
        A.components.push_back(JetComponent{
            CurvePath{{rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 0}), rv({0, 0, 1}),
                       rv({0, 0, 0})}},
            5});
        Rng rng(73);
        HomogPoly f(3, d);
        for (unsigned j = 0; j < 5; ++j)
            f = poly_add(f, poly_scale(jet_coefficient(A.components[0].path, j, d),
                                       Scalar(rng.rational(9, true))));
        PlaneBound pb = plane_upper_bound(f, A, d, WitnessOptions{.seed = 73});
        if (pb.bound != 3 * d || pb.curve.degree != 3) {
            ++failures;
            note("criterion7 contact-3 bound");
        }
        if (pb.decomposition && !verify_decomposition(f, *pb.decomposition).ok) {
            ++failures;
            note("criterion7 contact-3 decomposition");
        }
    }
    return report(7, "plane-case upper bounds", failures == 0);
}

}  // namespace

int main() {
    set_precision_bits(256);
    bool ok = true;
    ok &= criterion1();
    ok &= criterion2();
    ok &= criterion3();
    ok &= criterion4();
    ok &= criterion5();
    ok &= criterion6();
    ok &= criterion7();
    std::printf(
        "note: rank lower bounds for types 1:5 and 2:4,1 rest on the upper-bound witnesses\n"
        "plus border/cactus certification and the round-trip suite; they are not\n"
        "recomputed from scratch (see README).\n");
    if (!g_notes.empty()) {
        std::printf("failure notes:\n");
        for (const auto& n : g_notes) std::printf("  %s\n", n.c_str());
    }
    return ok ? 0 : 1;
}
