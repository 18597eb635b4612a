// Acceptance suite: runs every gate criterion at its stated tolerance
// (exact arithmetic throughout) and prints one pass/fail line each.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "mixvol/cayley.hpp"
#include "mixvol/criteria.hpp"
#include "mixvol/io.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/system.hpp"

using namespace mixvol;
using fixtures::iv;
using fixtures::pt;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;
    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            why << (why.str().empty() ? "" : "; ") << msg;
        }
    }
};

// ---------------------------------------------------------------------- 1
void criterion_pentagon_equality(Check& c) {
    std::vector<Polytope> ps{fixtures::p1_triangle(), fixtures::p2_first()};
    MvReport mv = mixed_volume(ps, MvMethod::all);
    int ran = 0;
    for (const auto& m : mv.methods) {
        if (!m.ran) continue;
        ++ran;
        c.require(m.value == 3, m.name + " disagrees with the exact value 3");
    }
    c.require(ran == 3, "all three algorithms must run");
    c.require(mv.normalized == 6, "normalized mixed volume must be 6");
    c.require(mv.normalized == normalized_volume(fixtures::pentagon()),
              "mixed volume must equal 2! Vol(Q)");

    auto verdict = strict_monotonicity_equal(ps, fixtures::pentagon());
    c.require(!verdict.strict, "the first pair must not be strict");

    auto ber = ber_check(fixtures::first_pentagon_system());
    c.require(ber.pass, "the rank audit must pass");
    for (const auto& f : ber.faces) {
        if (f.dim_f == 1)
            c.require(f.rank_c == 2 && f.rank_abar == 2, "edge ranks must equal 2");
        else
            c.require(f.rank_c == 1 && f.rank_abar == 1, "vertex ranks must equal 1");
    }
}

// ---------------------------------------------------------------------- 2
void criterion_pentagon_strict(Check& c) {
    std::vector<Polytope> ps{fixtures::p1_triangle(), fixtures::p2_second()};
    Polytope q = fixtures::pentagon();
    auto verdict = strict_monotonicity_equal(ps, q);
    c.require(verdict.strict, "the moved pair must be strict");
    std::set<Point> vs;
    for (auto id : verdict.face_vertex_ids) vs.insert(q.vertices()[id]);
    c.require(vs == std::set<Point>{pt({1, 2}), pt({2, 1})},
              "the witness must be the {2,3} edge");

    auto ber = ber_check(fixtures::second_pentagon_system());
    c.require(!ber.pass, "the rank audit must fail");
    bool found = false;
    for (const auto& f : ber.faces) {
        if (f.pass) continue;
        found = true;
        c.require(f.point_ids == std::vector<std::size_t>{1, 2},
                  "failure must sit at the edge with support points {2,3}");
        c.require(f.rank_c == 1 && f.rank_abar == 2, "ranks must be 1 < 2");
    }
    c.require(found, "a failing face must be reported");

    MvReport mv = mixed_volume(ps, MvMethod::all);
    int ran = 0;
    for (const auto& m : mv.methods)
        if (m.ran) ++ran;
    c.require(ran == 3, "all three algorithms must run");
    c.require(mv.normalized == 5, "normalized mixed volume must be the exact value 5");
    c.require(mv.normalized < 6, "normalized mixed volume must drop below 6");
}

// ---------------------------------------------------------------------- 3
void criterion_prism(Check& c) {
    SparseSystem s = fixtures::prism_system();
    c.require(normalized_volume(s.system_polytope()) == 3, "3! Vol(Q) must be 3");
    auto ber = ber_check(s);
    c.require(!ber.pass, "the prism audit must fail");
    bool found = false;
    for (const auto& f : ber.faces) {
        if (f.pass) continue;
        found = true;
        c.require(f.point_ids == std::vector<std::size_t>{4, 5},
                  "failure must sit at the {5,6} edge");
        c.require(f.rank_c == 1, "the coefficient rank must be 1");
        c.require(f.rank_abar == 2, "the augmented rank must be 2");
    }
    c.require(found, "a failing face must be reported");
    c.require(ber.conclusion ==
                  "strictly less than n!Vol(Q) isolated solutions or infinitely many",
              "the conclusion string must be emitted verbatim");
}

// ---------------------------------------------------------------------- 4
void criterion_equivalence(Check& c) {
    oracles::Rng rng(20260811);
    auto equal_case = [&](std::size_t n, int box, int count) {
        for (int iter = 0; iter < count; ++iter) {
            Polytope q = oracles::random_full_dim_lattice_polytope(rng, n, box, 8);
            std::vector<Polytope> ps;
            for (std::size_t i = 0; i < n; ++i)
                ps.push_back(oracles::random_subpolytope(rng, q, box));
            bool verdict = strict_monotonicity_equal(ps, q).strict;
            bool truth = mixed_volume_inductive(ps) < to_int(normalized_volume(q));
            c.require(verdict == truth, "equal-body criterion disagrees with the oracle");
            if (!c.ok) return;
        }
    };
    auto general_case = [&](std::size_t n, int box, int count) {
        for (int iter = 0; iter < count; ++iter) {
            std::vector<Polytope> qs, ps;
            for (std::size_t i = 0; i < n; ++i) {
                qs.push_back(oracles::random_full_dim_lattice_polytope(rng, n, box, 8));
                ps.push_back(oracles::random_subpolytope(rng, qs.back(), box));
            }
            auto general = strict_monotonicity_general(ps, qs);
            bool truth = mixed_volume_inductive(ps) < mixed_volume_inductive(qs);
            c.require(general.strict == truth,
                      "general criterion disagrees with the oracle");
            // the B-body route must agree as well (also asserted inside)
            auto b = main3_essential_direction(ps, qs);
            c.require(b.strict == general.strict,
                      "B-body criterion disagrees with the general criterion");
            if (!c.ok) return;
        }
    };
    equal_case(2, 5, 200);
    equal_case(3, 3, 50);
    general_case(2, 5, 200);
    general_case(3, 3, 50);
}

// ---------------------------------------------------------------------- 5
void criterion_algorithm_agreement(Check& c) {
    auto run = [&](const std::vector<Polytope>& ps, const std::string& label) {
        try {
            MvReport r = mixed_volume(ps, MvMethod::all);
            int ran = 0;
            for (const auto& m : r.methods)
                if (m.ran) ++ran;
            c.require(ran >= (r.lattice ? 3 : 2), label + ": methods skipped unexpectedly");
        } catch (const CrossCheckError& e) {
            c.require(false, label + ": " + e.what());
        }
    };
    run({fixtures::segment_e1(), fixtures::segment_e2()}, "segments");
    run({fixtures::unit_square(), fixtures::unit_square()}, "squares");
    run({fixtures::p1_triangle(), fixtures::p2_first()}, "pentagon pair");
    run({fixtures::p1_triangle(), fixtures::p2_second()}, "moved pentagon pair");
    run(std::vector<Polytope>(3, fixtures::prism()), "prism triple");

    oracles::Rng rng(512);
    for (int iter = 0; iter < 200 && c.ok; ++iter) {
        std::vector<Polytope> ps;
        for (int i = 0; i < 2; ++i)
            ps.push_back(oracles::random_lattice_polytope(rng, 2, 4, 7));
        run(ps, "random planar collection");
    }
    for (int iter = 0; iter < 50 && c.ok; ++iter) {
        std::vector<Polytope> ps;
        for (int i = 0; i < 3; ++i)
            ps.push_back(oracles::random_lattice_polytope(rng, 3, 3, 6));
        run(ps, "random spatial collection");
    }
}

// ---------------------------------------------------------------------- 6
void criterion_axioms(Check& c) {
    oracles::Rng rng(606);
    // symmetry
    for (int iter = 0; iter < 20 && c.ok; ++iter) {
        std::vector<Polytope> ps;
        for (int i = 0; i < 3; ++i)
            ps.push_back(oracles::random_lattice_polytope(rng, 3, 3, 5));
        Rat v = mixed_volume_polarization(ps);
        for (int s = 0; s < 10; ++s) {
            std::swap(ps[rng.below(3)], ps[rng.below(3)]);
            c.require(mixed_volume_polarization(ps) == v, "symmetry violated");
        }
    }
    // multilinearity
    for (int iter = 0; iter < 50 && c.ok; ++iter) {
        Polytope a = oracles::random_lattice_polytope(rng, 2, 4, 5);
        Polytope b = oracles::random_lattice_polytope(rng, 2, 4, 5);
        Polytope d = oracles::random_lattice_polytope(rng, 2, 4, 5);
        c.require(mixed_volume_polarization({minkowski_sum(a, b), d}) ==
                      mixed_volume_polarization({a, d}) + mixed_volume_polarization({b, d}),
                  "multilinearity violated");
    }
    // translation invariance
    for (int iter = 0; iter < 50 && c.ok; ++iter) {
        Polytope a = oracles::random_lattice_polytope(rng, 2, 4, 5);
        Polytope b = oracles::random_lattice_polytope(rng, 2, 4, 5);
        Point t{Rat(rng.range(-7, 7)), Rat(rng.range(-7, 7))};
        Point u{Rat(rng.range(-7, 7)), Rat(rng.range(-7, 7))};
        c.require(mixed_volume_polarization({a.translated(t), b.translated(u)}) ==
                      mixed_volume_polarization({a, b}),
                  "translation invariance violated");
    }
    // diagonal
    for (int iter = 0; iter < 30 && c.ok; ++iter) {
        Polytope p = oracles::random_lattice_polytope(rng, 2, 5, 7);
        c.require(mixed_volume_polarization({p, p}) == p.volume(),
                  "diagonal must equal the volume");
    }
    // monotonicity
    for (int iter = 0; iter < 100 && c.ok; ++iter) {
        Polytope q1 = oracles::random_full_dim_lattice_polytope(rng, 2, 4, 7);
        Polytope q2 = oracles::random_full_dim_lattice_polytope(rng, 2, 4, 7);
        Polytope a = oracles::random_subpolytope(rng, q1, 4);
        Polytope b = oracles::random_subpolytope(rng, q2, 4);
        c.require(mixed_volume_polarization({a, b}) <= mixed_volume_polarization({q1, q2}),
                  "monotonicity violated");
    }
}

// ---------------------------------------------------------------------- 7
void criterion_deficit(Check& c) {
    // the tight square fixture
    std::vector<Polytope> ps{fixtures::bottom_edge(), fixtures::unit_square()};
    auto b = volume_deficit_bound(ps, fixtures::unit_square(), iv({0, 1}), {0});
    c.require(b.bound == 1 && b.actual_deficit == 1, "square fixture must be tight at 1");

    // the essentiality hypothesis cannot be dropped
    Polytope simplex = fixtures::standard_simplex(2);
    Polytope origin = Polytope::hull({pt({0, 0})});
    bool rejected = false;
    try {
        volume_deficit_bound({origin, origin}, simplex, iv({1, 1}), {0, 1});
    } catch (const InputError& e) {
        rejected = std::string(e.what()).find("essentiality") != std::string::npos;
    }
    c.require(rejected, "the simplex counterexample must fail the essentiality hypothesis");

    // random hypothesis-checked instances
    oracles::Rng rng(707);
    int accepted = 0;
    int guard = 0;
    while (accepted < 50 && ++guard < 4000 && c.ok) {
        std::size_t n = accepted % 3 == 2 ? 3 : 2;
        int box = n == 2 ? 4 : 3;
        Polytope q = oracles::random_full_dim_lattice_polytope(rng, n, box, 8);
        std::vector<Polytope> inner;
        for (std::size_t i = 0; i < n; ++i)
            inner.push_back(oracles::random_subpolytope(rng, q, box));
        std::optional<DeficitBound> best;
        try {
            best = deficit_bound_search(inner, q);
        } catch (const InputError&) {
            continue;
        }
        if (!best) continue;
        ++accepted;
        c.require(best->bound >= 1, "certified bounds are at least 1");
        c.require(best->bound <= best->actual_deficit,
                  "the lattice-distance bound must not exceed the deficit");
    }
    c.require(accepted >= 50, "not enough hypothesis-satisfying instances found");
}

// ---------------------------------------------------------------------- 8
void criterion_cramer(Check& c) {
    auto lin = analyze(fixtures::dense_linear_system());
    c.require(lin.cramer, "the dense linear system must pass the minor check");
    c.require(lin.volume_bound == 1, "the linear count must be 1");
    c.require(lin.cramer_annotation.find("maximal number 1") != std::string::npos,
              "the count annotation must carry the value 1");

    oracles::Rng rng(808);
    int produced = 0;
    int guard = 0;
    while (produced < 100 && ++guard < 5000 && c.ok) {
        std::size_t n = produced < 70 ? 2 : 3;
        int box = n == 2 ? 3 : 2;
        std::set<IntVec> pset;
        std::size_t want = n + 2 + rng.below(3);
        while (pset.size() < want) {
            IntVec a(n);
            for (auto& x : a) x = rng.range(0, box);
            pset.insert(a);
        }
        std::vector<IntVec> points(pset.begin(), pset.end());
        RatMatrix cm(n, points.size());
        for (auto& x : cm.a) x = Rat(rng.range(1, 9)) * (rng.below(2) ? 1 : -1);
        std::vector<std::string> names{"x", "y", "z"};
        SparseSystem s(std::vector<std::string>(names.begin(), names.begin() + n), points,
                       cm);
        if (s.system_polytope().dim() != static_cast<int>(n)) continue;
        if (!cramer_check(s)) continue;  // rejection sampling on the minors
        ++produced;
        auto report = analyze(s);
        c.require(report.ber.pass, "a dense-minor system must pass the rank audit");
        c.require(report.cramer_annotation.find(report.volume_bound.str()) !=
                      std::string::npos,
                  "the annotation must carry n!Vol(Q)");
    }
    c.require(produced >= 100, "not enough dense-minor systems generated");
}

// ---------------------------------------------------------------------- 9
void criterion_failure_linkage(Check& c) {
    auto exercise = [&](const SparseSystem& s, const std::string& label) {
        auto ber = ber_check(s);
        if (ber.pass) return false;
        for (const auto& f : ber.faces) {
            if (f.pass) continue;
            auto link = failure_linkage(s, f);
            c.require(link.verdict.strict, label + ": linkage verdict must be strict");
            c.require(link.face_condition,
                      label + ": the failing face must satisfy the touch condition");
        }
        return true;
    };
    exercise(fixtures::second_pentagon_system(), "pentagon fixture");
    exercise(fixtures::prism_system(), "prism fixture");

    oracles::Rng rng(909);
    int produced = 0;
    int guard = 0;
    while (produced < 50 && ++guard < 4000 && c.ok) {
        std::size_t n = produced % 3 == 2 ? 3 : 2;
        int box = n == 2 ? 4 : 2;
        std::set<IntVec> pset;
        std::size_t want = n + 3 + rng.below(3);
        while (pset.size() < want) {
            IntVec a(n);
            for (auto& x : a) x = rng.range(0, box);
            pset.insert(a);
        }
        std::vector<IntVec> points(pset.begin(), pset.end());
        std::vector<Point> rpoints;
        for (const auto& a : points) rpoints.push_back(to_rational(a));
        Polytope q = Polytope::hull(rpoints);
        if (q.dim() != static_cast<int>(n)) continue;
        // plant a rank-1 edge: all columns on one edge proportional
        const Face* edge = nullptr;
        for (const auto& f : q.face_lattice())
            if (f.dim == 1 && f.proper) { edge = &f; break; }
        if (!edge) continue;
        std::vector<std::size_t> on_edge;
        Rat h = q.support_value(edge->normal);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (dot(edge->normal, rpoints[j]) == h) on_edge.push_back(j);
        if (on_edge.size() < 2) continue;
        RatMatrix cm(n, points.size());
        for (auto& x : cm.a) x = Rat(rng.range(1, 9)) * (rng.below(2) ? 1 : -1);
        Point w(n);
        for (auto& x : w) x = Rat(rng.range(1, 5));
        for (std::size_t k = 0; k < on_edge.size(); ++k) {
            Rat alpha = Rat(rng.range(1, 5));
            for (std::size_t r = 0; r < n; ++r) cm.at(r, on_edge[k]) = alpha * w[r];
        }
        if (exact_rank(cm) != static_cast<int>(n)) continue;
        std::vector<std::string> names{"x", "y", "z"};
        SparseSystem s(std::vector<std::string>(names.begin(), names.begin() + n), points,
                       cm);
        if (exercise(s, "random failing system")) ++produced;
    }
    c.require(produced >= 50, "not enough failing systems generated");
}

// --------------------------------------------------------------------- 10
void criterion_support_construction(Check& c) {
    oracles::Rng rng(1010);
    auto run_dim = [&](std::size_t n, int box, int count) {
        int done = 0;
        int guard = 0;
        while (done < count && ++guard < 3000 && c.ok) {
            std::set<IntVec> pset;
            std::size_t want = n + 2 + rng.below(4);
            while (pset.size() < want) {
                IntVec a(n);
                for (auto& x : a) x = rng.range(0, box);
                pset.insert(a);
            }
            std::vector<Point> support;
            for (const auto& a : pset) support.push_back(to_rational(a));
            Polytope q = Polytope::hull(support);
            if (q.dim() != static_cast<int>(n)) continue;
            std::set<std::size_t> special;
            while (special.size() < n) special.insert(rng.below(support.size()));
            std::vector<std::size_t> chosen(special.begin(), special.end());
            std::vector<Polytope> ps;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Point> pts;
                for (std::size_t j = 0; j < support.size(); ++j)
                    if (!special.count(j) || j == chosen[i]) pts.push_back(support[j]);
                ps.push_back(Polytope::hull(pts));
            }
            auto verdict = strict_monotonicity_equal(ps, q);
            c.require(!verdict.strict, "the support construction must attain the volume");
            ++done;
        }
        c.require(done >= count, "not enough support constructions generated");
    };
    run_dim(2, 4, 100);
    run_dim(3, 2, 100);
}

struct Criterion {
    int id;
    std::string name;
    std::function<void(Check&)> fn;
    double limit_seconds;
};

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "pentagon equality example (values, verdict, ranks)",
         criterion_pentagon_equality, 1.0},
        {2, "pentagon strict example (witness edge, failing ranks, exact drop)",
         criterion_pentagon_strict, 1.0},
        {3, "prism example (volume bound, failing edge, conclusion string)",
         criterion_prism, 1.0},
        {4, "criterion-vs-oracle equivalence on random instances",
         criterion_equivalence, 300.0},
        {5, "three-algorithm agreement on fixtures and random collections",
         criterion_algorithm_agreement, 300.0},
        {6, "mixed-volume axioms (symmetry, multilinearity, translation, diagonal, "
            "monotonicity)",
         criterion_axioms, 300.0},
        {7, "lattice-distance deficit bound (tight fixture, hypotheses, counterexample)",
         criterion_deficit, 300.0},
        {8, "generalized Cramer systems attain the maximal count", criterion_cramer,
         300.0},
        {9, "failure linkage: rank failures force strict monotonicity",
         criterion_failure_linkage, 300.0},
        {10, "support construction attaining the volume bound",
         criterion_support_construction, 300.0},
    };
    int failures = 0;
    for (auto& cr : criteria) {
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.fn(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        if (secs > cr.limit_seconds)
            check.require(false, "runtime " + std::to_string(secs) + "s over the limit");
        std::ostringstream line;
        line << (check.ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": "
             << cr.name << " (" << secs << " s)";
        if (!check.ok) line << "\n       " << check.why.str();
        std::cout << line.str() << std::endl;
        if (!check.ok) ++failures;
    }
    if (failures == 0)
        std::cout << "acceptance: all " << criteria.size() << " criteria passed"
                  << std::endl;
    else
        std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return failures == 0 ? 0 : 1;
}
