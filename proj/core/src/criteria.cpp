#include "mixvol/criteria.hpp"

#include <algorithm>
#include <bit>

#include "mixvol/mixed_volume.hpp"

namespace mixvol {

namespace {

std::vector<Point> direction_generators(const Polytope& p) {
    std::vector<Point> gens;
    const auto& vs = p.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i) gens.push_back(sub(vs[i], vs[0]));
    return gens;
}

bool essential_impl(const std::vector<Polytope>& ks) {
    const std::size_t m = ks.size();
    const std::size_t n = ks[0].ambient_dim();
    std::vector<std::vector<Point>> gens(m);
    for (std::size_t i = 0; i < m; ++i) gens[i] = direction_generators(ks[i]);
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        const int size = std::popcount(mask);
        if (static_cast<std::size_t>(size) > n) continue;
        RankAccumulator acc(n);
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            for (const auto& g : gens[i]) acc.add(g);
        }
        if (acc.rank() < size) return false;
    }
    return true;
}

bool essential_or_empty(const std::vector<Polytope>& ks) {
    return ks.empty() || essential_impl(ks);
}

void check_nested(const std::vector<Polytope>& ps, const std::vector<Polytope>& qs) {
    check_input(ps.size() == qs.size(), "inner and outer collections differ in length");
    check_input(!ps.empty(), "empty collection");
    const std::size_t n = ps[0].ambient_dim();
    for (std::size_t i = 0; i < ps.size(); ++i) {
        check_input(ps[i].ambient_dim() == n && qs[i].ambient_dim() == n,
                    "ambient dimension mismatch");
        check_input(qs[i].contains_polytope(ps[i]),
                    "containment violated: P_" + std::to_string(i + 1) +
                        " is not inside Q_" + std::to_string(i + 1));
    }
    check_input(ps.size() == n, "collection length must equal the ambient dimension");
}

} // namespace

bool is_essential(const std::vector<Polytope>& ks) {
    check_input(!ks.empty(), "is_essential: empty collection");
    const std::size_t n = ks[0].ambient_dim();
    for (const auto& k : ks)
        check_input(k.ambient_dim() == n, "is_essential: ambient dimension mismatch");
    check_input(ks.size() <= n, "is_essential: more members than the ambient dimension");
    return essential_impl(ks);
}

std::optional<SegmentWitness> independent_segments(const std::vector<Polytope>& ks) {
    check_input(!ks.empty(), "independent_segments: empty collection");
    const std::size_t n = ks[0].ambient_dim();
    check_input(ks.size() == n, "independent_segments: expected n polytopes in R^n");
    if (!is_essential(ks)) return std::nullopt;

    std::vector<std::pair<Point, Point>> chosen(n);
    // backtracking over vertex pairs; a solution exists by essentiality
    auto rec = [&](auto&& self, std::size_t level, const RankAccumulator& acc) -> bool {
        if (level == n) return true;
        const auto& vs = ks[level].vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                RankAccumulator next = acc;
                if (!next.add(sub(vs[b], vs[a]))) continue;
                chosen[level] = {vs[a], vs[b]};
                if (self(self, level + 1, next)) return true;
            }
        return false;
    };
    bool found = rec(rec, 0, RankAccumulator(n));
    check_internal(found, "essential collection without an independent segment tuple");

    // the witness re-verifies: directions of exact rank n, endpoints inside
    std::vector<Point> dirs;
    for (std::size_t i = 0; i < n; ++i) {
        dirs.push_back(sub(chosen[i].second, chosen[i].first));
        check_internal(ks[i].contains(chosen[i].first) && ks[i].contains(chosen[i].second),
                       "segment witness escapes its polytope");
    }
    check_internal(rank_of_vectors(dirs) == static_cast<int>(n),
                   "segment witness directions are dependent");
    return SegmentWitness{std::move(chosen)};
}

TouchSet touch_set(const std::vector<Polytope>& ps, const std::vector<Polytope>& qs,
                   const Point& u) {
    check_nested(ps, qs);
    TouchSet t;
    t.direction = u;
    t.members.resize(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        t.members[i] = ps[i].support_value(u) == qs[i].support_value(u);
    return t;
}

std::vector<Point> normal_fan_representatives(const Polytope& s) {
    check_input(s.dim() >= 1, "normal_fan_representatives: dim must be at least 1");
    std::vector<Point> reps;
    for (const auto& f : s.face_lattice()) {
        if (!f.proper) continue;
        check_internal(!is_zero(f.normal), "proper face with zero representative normal");
        reps.push_back(f.normal);
    }
    return reps;
}

MonotonicityVerdict strict_monotonicity_general(const std::vector<Polytope>& ps,
                                                const std::vector<Polytope>& qs) {
    check_nested(ps, qs);
    const std::size_t n = ps.size();
    MonotonicityVerdict verdict;
    Polytope s = minkowski_sum(qs);
    if (s.dim() < static_cast<int>(n)) return verdict;  // both volumes vanish

    bool all_full = true;
    for (const auto& q : qs)
        if (q.dim() != static_cast<int>(n)) all_full = false;

    for (const auto& u : normal_fan_representatives(s)) {
        TouchSet t = touch_set(ps, qs, u);
        std::vector<Polytope> collection;
        std::vector<Polytope> touched_faces;
        collection.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (t.members[i]) {
                Polytope face = qs[i].face_polytope(qs[i].face_in_direction(u));
                touched_faces.push_back(face);
                collection.push_back(std::move(face));
            } else {
                collection.push_back(qs[i]);
            }
        }
        bool ess = essential_impl(collection);
        if (all_full)
            check_internal(essential_or_empty(touched_faces) == ess,
                           "full-dimensional simplification disagrees with the general test");
        if (ess) {
            verdict.strict = true;
            verdict.kind = WitnessKind::direction;
            verdict.direction = u;
            verdict.touch_members = t.members;
            return verdict;
        }
    }
    return verdict;
}

MonotonicityVerdict strict_monotonicity_equal(const std::vector<Polytope>& ps,
                                              const Polytope& q) {
    check_input(!ps.empty(), "empty collection");
    const std::size_t n = q.ambient_dim();
    check_input(ps.size() == n, "collection length must equal the ambient dimension");
    for (std::size_t i = 0; i < n; ++i) {
        check_input(ps[i].ambient_dim() == n, "ambient dimension mismatch");
        check_input(q.contains_polytope(ps[i]),
                    "containment violated: P_" + std::to_string(i + 1) +
                        " is not inside Q");
    }
    MonotonicityVerdict verdict;
    if (q.dim() < static_cast<int>(n)) {
        verdict.lhs_normalized = 0;
        verdict.rhs_normalized = 0;
        return verdict;
    }
    for (const auto& f : q.face_lattice()) {
        if (!f.proper) continue;
        int count = 0;
        for (const auto& p : ps)
            if (touches(p, q, f)) ++count;
        if (count <= f.dim) {
            verdict.strict = true;
            verdict.kind = WitnessKind::face;
            verdict.face_vertex_ids = f.vertex_ids;
            verdict.face_dim = f.dim;
            verdict.touch_count = count;
            return verdict;
        }
    }
    return verdict;
}

BPolytope b_polytope(const Polytope& p, const Polytope& q, const Point& u) {
    check_input(!is_zero(u), "b_polytope: u = 0");
    check_input(q.contains_polytope(p), "b_polytope: containment violated");
    Rat level = p.support_value(u);
    BPolytope b{truncate_above(q, u, level), u, level};
    check_internal(b.body.support_value(u) == q.support_value(u),
                   "B body must reach the top of Q");
    Point neg = scale(Rat(-1), u);
    check_internal(b.body.support_value(neg) == -level,
                   "B body must rest on the support level of P");
    return b;
}

MonotonicityVerdict main3_essential_direction(const std::vector<Polytope>& ps,
                                              const std::vector<Polytope>& qs) {
    check_nested(ps, qs);
    const std::size_t n = ps.size();
    MonotonicityVerdict verdict;
    Polytope s = minkowski_sum(qs);
    if (s.dim() == static_cast<int>(n)) {
        for (const auto& u : normal_fan_representatives(s)) {
            std::vector<Polytope> bs;
            bs.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                bs.push_back(b_polytope(ps[i], qs[i], u).body);
            if (essential_impl(bs)) {
                verdict.strict = true;
                verdict.kind = WitnessKind::direction;
                verdict.direction = u;
                break;
            }
        }
    }
    check_internal(verdict.strict == strict_monotonicity_general(ps, qs).strict,
                   "B-body criterion disagrees with the touching criterion");
    return verdict;
}

CayleySimplexWitness fully_mixed_simplex_witness(const std::vector<Polytope>& ps,
                                                 const std::vector<Polytope>& qs,
                                                 const Point& u) {
    check_nested(ps, qs);
    check_input(!is_zero(u), "fully_mixed_simplex_witness: u = 0");
    const std::size_t n = ps.size();
    std::vector<Polytope> bs;
    bs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) bs.push_back(b_polytope(ps[i], qs[i], u).body);
    check_input(essential_impl(bs),
                "fully_mixed_simplex_witness: precondition violated, the B bodies "
                "are not essential for this direction");
    auto segs = independent_segments(bs);
    check_internal(segs.has_value(), "essential B bodies must admit segment witnesses");

    CayleySimplexWitness w;
    w.segments = segs->segments;
    w.u = u;
    w.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.v[i] = -ps[i].support_value(u);
    w.separation_level = 0;  // h_{P_i}(u) + v_i = 0 for every i

    for (std::size_t i = 0; i < n; ++i) {
        for (const Point* end : {&w.segments[i].first, &w.segments[i].second}) {
            Point z = *end;
            z.resize(2 * n, Rat(0));
            z[n + i] = 1;
            w.cayley_vertices.push_back(std::move(z));
        }
    }
    // a fully mixed (2n-1)-simplex ...
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < w.cayley_vertices.size(); ++i)
        diffs.push_back(sub(w.cayley_vertices[i], w.cayley_vertices[0]));
    check_internal(rank_of_vectors(diffs) == static_cast<int>(2 * n - 1),
                   "Cayley witness is not a (2n-1)-simplex");
    // ... on the far side of the supporting hyperplane of C(P_1,...,P_n)
    for (std::size_t i = 0; i < n; ++i)
        for (const Point* end : {&w.segments[i].first, &w.segments[i].second})
            check_internal(dot(u, *end) + w.v[i] >= w.separation_level,
                           "Cayley witness violates its separation certificate");
    return w;
}

DeficitBound volume_deficit_bound(const std::vector<Polytope>& ps, const Polytope& q,
                                  const IntVec& v, const std::vector<std::size_t>& order) {
    check_input(!ps.empty(), "empty collection");
    const std::size_t n = q.ambient_dim();
    check_input(ps.size() == n, "collection length must equal the ambient dimension");
    check_input(q.is_lattice(), "deficit bound: Q must be a lattice polytope");
    for (const auto& p : ps)
        check_input(p.is_lattice(), "deficit bound: lattice polytopes required");
    for (std::size_t i = 0; i < n; ++i)
        check_input(q.contains_polytope(ps[i]),
                    "hypothesis violated: containment, P_" + std::to_string(i + 1) +
                        " is not inside Q");
    check_input(is_primitive(v), "deficit bound: v must be primitive");
    Point vr = to_rational(v);
    Face fv = q.face_in_direction(vr);
    check_input(fv.dim == static_cast<int>(n) - 1,
                "hypothesis violated: Q^v is not a facet");
    check_input(!order.empty(), "deficit bound: empty index list");
    std::vector<bool> seen(n, false);
    for (auto i : order) {
        check_input(i < n, "deficit bound: index out of range");
        check_input(!seen[i], "deficit bound: repeated index");
        seen[i] = true;
    }
    for (auto i : order)
        check_input(ps[i].support_value(vr) < q.support_value(vr),
                    "hypothesis violated: touching, P_" + std::to_string(i + 1) +
                        " touches the facet Q^v");
    if (order.size() >= 2) {
        std::vector<Polytope> faces;
        for (std::size_t j = 0; j + 1 < order.size(); ++j)
            faces.push_back(ps[order[j]].face_polytope(ps[order[j]].face_in_direction(vr)));
        check_input(essential_impl(faces),
                    "hypothesis violated: essentiality of the ordered face collection "
                    "{P_i1^v,...,P_i(m-1)^v}");
    }
    DeficitBound b;
    b.direction = v;
    b.order = order;
    for (auto i : order) {
        Int l = lattice_distance(ps[i], q, v);
        check_internal(l >= 1, "non-touching member at lattice distance 0");
        b.distances.push_back(l);
        b.bound += l;
    }
    b.actual_deficit = to_int(normalized_volume(q)) - mixed_volume_inductive(ps);
    check_internal(b.bound <= b.actual_deficit,
                   "deficit bound exceeds the actual deficit");
    return b;
}

std::optional<DeficitBound> deficit_bound_search(const std::vector<Polytope>& ps,
                                                 const Polytope& q,
                                                 const std::optional<IntVec>& v) {
    const std::size_t n = q.ambient_dim();
    check_input(n <= 4, "deficit_bound_search: exhaustive search is limited to n <= 4");
    check_input(ps.size() == n, "collection length must equal the ambient dimension");
    check_input(q.dim() == static_cast<int>(n), "deficit_bound_search: Q must be full-dimensional");

    std::vector<IntVec> candidates;
    if (v.has_value()) {
        candidates.push_back(*v);
    } else {
        for (const auto& f : q.facets()) candidates.push_back(f.normal);
    }

    std::optional<DeficitBound> best;
    for (const auto& dir : candidates) {
        Point dr = to_rational(dir);
        Face fd = q.face_in_direction(dr);
        if (fd.dim != static_cast<int>(n) - 1) continue;
        std::vector<std::size_t> misses;
        for (std::size_t i = 0; i < n; ++i)
            if (ps[i].support_value(dr) < q.support_value(dr)) misses.push_back(i);
        if (misses.empty()) continue;
        for (std::size_t mask = 1; mask < (std::size_t{1} << misses.size()); ++mask) {
            std::vector<std::size_t> subset;
            for (std::size_t j = 0; j < misses.size(); ++j)
                if (mask & (std::size_t{1} << j)) subset.push_back(misses[j]);
            // an ordering qualifies when the faces of all but its last
            // member form an essential collection
            for (std::size_t drop = 0; drop < subset.size(); ++drop) {
                std::vector<std::size_t> order;
                std::vector<Polytope> faces;
                for (std::size_t j = 0; j < subset.size(); ++j) {
                    if (j == drop) continue;
                    order.push_back(subset[j]);
                    faces.push_back(
                        ps[subset[j]].face_polytope(ps[subset[j]].face_in_direction(dr)));
                }
                order.push_back(subset[drop]);
                if (!essential_or_empty(faces)) continue;
                DeficitBound b = volume_deficit_bound(ps, q, dir, order);
                if (!best || b.bound > best->bound) best = std::move(b);
                break;
            }
        }
    }
    return best;
}

} // namespace mixvol
