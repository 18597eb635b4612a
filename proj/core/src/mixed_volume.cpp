#include "mixvol/mixed_volume.hpp"

#include <bit>
#include <chrono>

#include "mixvol/linalg.hpp"

namespace mixvol {

namespace {

void check_collection(const std::vector<Polytope>& ps) {
    check_input(!ps.empty(), "mixed volume: empty collection");
    const std::size_t n = ps[0].ambient_dim();
    for (const auto& p : ps)
        check_input(p.ambient_dim() == n, "mixed volume: ambient dimension mismatch");
    check_input(ps.size() == n,
                "mixed volume: collection length must equal the ambient dimension");
}

bool all_lattice(const std::vector<Polytope>& ps) {
    for (const auto& p : ps)
        if (!p.is_lattice()) return false;
    return true;
}

// n! V(P_1,...,P_n) in the lattice normalization of the current ambient
// space; recursion peels off P_1 against the facet directions of the sum
// of the rest.
Int inductive_rec(const std::vector<Polytope>& ps) {
    const std::size_t n = ps[0].ambient_dim();
    if (n == 1) {
        Rat len = ps[0].support_value({Rat(1)}) + ps[0].support_value({Rat(-1)});
        return to_int(len);
    }
    std::vector<Polytope> tail(ps.begin() + 1, ps.end());
    Polytope s = minkowski_sum(tail);
    std::vector<IntVec> candidates;
    if (s.dim() == static_cast<int>(n)) {
        for (const auto& f : s.facets()) candidates.push_back(f.normal);
    } else if (s.dim() == static_cast<int>(n) - 1) {
        // the sum spans a hyperplane: both of its primitive normals carry
        // full faces
        check_internal(s.hull_equations().size() == 1,
                       "inductive recursion: hyperplane case expects one equation");
        IntVec u = s.hull_equations()[0].normal;
        candidates.push_back(u);
        for (auto& x : u) x = -x;
        candidates.push_back(std::move(u));
    } else {
        return 0;
    }

    Int total = 0;
    for (const auto& u : candidates) {
        auto basis = sublattice_basis(u);
        Point ur = to_rational(u);
        std::vector<Polytope> faces;
        faces.reserve(tail.size());
        for (const auto& q : tail) {
            auto ids = q.argmax_vertices(ur);
            const Point& base = q.vertices()[ids[0]];
            std::vector<Point> flat;
            flat.reserve(ids.size());
            for (auto id : ids) {
                IntVec z = to_integral(sub(q.vertices()[id], base));
                Point coords = lattice_coordinates(basis, z);
                check_internal(is_lattice_point(coords),
                               "face flattening produced non-integral coordinates");
                flat.push_back(std::move(coords));
            }
            faces.push_back(Polytope::hull(flat));
        }
        Int sub_mv = inductive_rec(faces);
        if (sub_mv == 0) continue;
        Int h = to_int(ps[0].support_value(ur));
        total += h * sub_mv;
    }
    return total;
}

} // namespace

Rat mixed_volume_polarization(const std::vector<Polytope>& ks) {
    check_collection(ks);
    const std::size_t n = ks.size();
    const std::size_t full = (std::size_t{1} << n);
    std::vector<std::vector<Point>> verts(full);
    Rat signed_sum = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(mask));
        const std::size_t rest = mask & (mask - 1);
        Polytope h = [&] {
            if (rest == 0) return ks[i];
            std::vector<Point> sums;
            sums.reserve(verts[rest].size() * ks[i].vertices().size());
            for (const auto& a : verts[rest])
                for (const auto& b : ks[i].vertices()) sums.push_back(add(a, b));
            return Polytope::hull(sums);
        }();
        verts[mask] = h.vertices();
        const int m = std::popcount(mask);
        if ((n + m) % 2 == 0)
            signed_sum += h.volume();
        else
            signed_sum -= h.volume();
    }
    return signed_sum / Rat(factorial(static_cast<unsigned>(n)));
}

Rat mixed_volume_subdivision(const std::vector<Polytope>& ps, std::uint64_t seed) {
    check_collection(ps);
    MixedSubdivision ms = pure_mixed_subdivision(ps, seed);
    Rat total = 0;
    for (const auto& cell : ms.cells)
        if (cell.fully_mixed) total += cell.volume;
    return total / Rat(factorial(static_cast<unsigned>(ps.size())));
}

Int mixed_volume_inductive(const std::vector<Polytope>& ps) {
    check_collection(ps);
    check_input(all_lattice(ps), "mixed_volume_inductive: non-lattice input");
    Int value = inductive_rec(ps);
    // translation invariance of the support sum, asserted rather than assumed
    {
        Point t(ps[0].ambient_dim());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rat(static_cast<int>(i) + 1);
        std::vector<Polytope> shifted = ps;
        shifted[0] = ps[0].translated(t);
        check_internal(inductive_rec(shifted) == value,
                       "inductive mixed volume is not translation invariant");
    }
    return value;
}

MvReport mixed_volume(const std::vector<Polytope>& ps, MvMethod method,
                      std::uint64_t seed) {
    check_collection(ps);
    const std::size_t n = ps.size();
    MvReport report;
    report.lattice = all_lattice(ps);

    const bool subdivision_feasible = 2 * n <= 8;  // lifted Cayley hull dimension cap
    auto timed = [](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        Rat v = fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::pair<Rat, long long>(
            v, std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
    };

    auto want = [&](MvMethod m) { return method == MvMethod::all || method == m; };

    if (want(MvMethod::polarization)) {
        MethodResult r;
        r.name = "polarization";
        auto [v, us] = timed([&] { return mixed_volume_polarization(ps); });
        r.ran = true;
        r.value = v;
        r.microseconds = us;
        report.methods.push_back(std::move(r));
    }
    if (want(MvMethod::subdivision)) {
        MethodResult r;
        r.name = "subdivision";
        if (!subdivision_feasible) {
            r.skip_reason = "lifted Cayley hull would exceed the dimension cap";
            check_input(method != MvMethod::subdivision, r.skip_reason);
        } else {
            auto [v, us] = timed([&] { return mixed_volume_subdivision(ps, seed); });
            r.ran = true;
            r.value = v;
            r.microseconds = us;
        }
        report.methods.push_back(std::move(r));
    }
    if (want(MvMethod::inductive)) {
        MethodResult r;
        r.name = "inductive";
        if (!report.lattice) {
            r.skip_reason = "inductive algorithm requires lattice polytopes";
            check_input(method != MvMethod::inductive, r.skip_reason);
        } else {
            auto [v, us] = timed([&] {
                return Rat(mixed_volume_inductive(ps)) /
                       Rat(factorial(static_cast<unsigned>(n)));
            });
            r.ran = true;
            r.value = v;
            r.microseconds = us;
        }
        report.methods.push_back(std::move(r));
    }

    const MethodResult* first = nullptr;
    for (const auto& m : report.methods) {
        if (!m.ran) continue;
        if (!first) {
            first = &m;
            continue;
        }
        if (m.value != first->value)
            throw CrossCheckError("mixed volume disagreement: " + first->name + " = " +
                                  rat_to_string(first->value) + " but " + m.name + " = " +
                                  rat_to_string(m.value));
    }
    check_internal(first != nullptr, "mixed_volume: no algorithm ran");
    report.value = first->value;
    report.normalized = Rat(factorial(static_cast<unsigned>(n))) * report.value;
    return report;
}

} // namespace mixvol
