#pragma once

// Independent oracles for expected values: a monotone-chain planar hull
// and the shoelace area, sharing nothing with the production hull or
// volume path, plus deterministic random generators for property suites.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mixvol/polytope.hpp"

namespace oracles {

using namespace mixvol;

inline Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Monotone chain; returns the hull vertices in counterclockwise order.
inline std::vector<Point> hull2d(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline Rat shoelace(const std::vector<Point>& cycle) {
    Rat s = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point& a = cycle[i];
        const Point& b = cycle[(i + 1) % cycle.size()];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return abs(s) / 2;
}

inline Rat polygon_area(const std::vector<Point>& pts) {
    auto h = hull2d(pts);
    if (h.size() <= 2) return 0;
    return shoelace(h);
}

inline std::vector<Point> pairwise_sums(const std::vector<Point>& a,
                                        const std::vector<Point>& b) {
    std::vector<Point> s;
    for (const auto& x : a)
        for (const auto& y : b) s.push_back(add(x, y));
    return s;
}

/// 2-dimensional mixed volume by polarization over the shoelace oracle.
inline Rat mv2(const std::vector<Point>& a, const std::vector<Point>& b) {
    return (polygon_area(pairwise_sums(a, b)) - polygon_area(a) - polygon_area(b)) / 2;
}

// ---------------------------------------------------------------------------
// deterministic random generation

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::uint64_t next() { return g(); }
    /// uniform in [0, m)
    std::size_t below(std::size_t m) { return static_cast<std::size_t>(g() % m); }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
    }
};

inline Point random_lattice_point(Rng& rng, std::size_t n, int box) {
    Point p(n);
    for (auto& c : p) c = rng.range(0, box);
    return p;
}

inline Polytope random_lattice_polytope(Rng& rng, std::size_t n, int box,
                                        std::size_t max_points) {
    std::size_t k = 1 + rng.below(max_points);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(random_lattice_point(rng, n, box));
    return Polytope::hull(pts);
}

inline Polytope random_full_dim_lattice_polytope(Rng& rng, std::size_t n, int box,
                                                 std::size_t max_points) {
    while (true) {
        Polytope p = random_lattice_polytope(rng, n, box, max_points);
        if (p.dim() == static_cast<int>(n)) return p;
    }
}

inline std::vector<Point> lattice_points_inside(const Polytope& q, int box) {
    const std::size_t n = q.ambient_dim();
    std::vector<Point> found;
    std::vector<int> idx(n, 0);
    while (true) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = idx[i];
        if (q.contains(p)) found.push_back(p);
        std::size_t k = 0;
        while (k < n && ++idx[k] > box) idx[k++] = 0;
        if (k == n) break;
    }
    return found;
}

/// Random non-empty sub-polytope spanned by lattice points of Q.
inline Polytope random_subpolytope(Rng& rng, const Polytope& q, int box) {
    auto inside = lattice_points_inside(q, box);
    std::vector<Point> chosen;
    std::size_t want = 1 + rng.below(std::min<std::size_t>(inside.size(), 6));
    for (std::size_t i = 0; i < want; ++i) chosen.push_back(inside[rng.below(inside.size())]);
    return Polytope::hull(chosen);
}

/// Exact disjoint-interiors check for two full-dimensional polytopes:
/// searches for a separating hyperplane through n affinely independent
/// combined vertices (an extreme separating ray always has that form).
inline bool interiors_disjoint(const Polytope& a, const Polytope& b) {
    const std::size_t n = a.ambient_dim();
    std::vector<Point> all = a.vertices();
    all.insert(all.end(), b.vertices().begin(), b.vertices().end());
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    auto separated_by = [&](const Point& g) {
        if (is_zero(g)) return false;
        Rat amax = a.support_value(g);
        Rat bmin = -b.support_value(scale(Rat(-1), g));
        if (amax <= bmin) return true;
        Rat bmax = b.support_value(g);
        Rat amin = -a.support_value(scale(Rat(-1), g));
        return bmax <= amin;
    };
    // cheap first pass: facet normals
    for (const auto& f : a.facets())
        if (separated_by(to_rational(f.normal))) return true;
    for (const auto& f : b.facets())
        if (separated_by(to_rational(f.normal))) return true;
    if (all.size() < n) return false;
    while (true) {
        RatMatrix diffs(n - 1, n);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                diffs.at(i - 1, j) = all[idx[i]][j] - all[idx[0]][j];
        auto ns = nullspace(diffs);
        if (ns.size() == 1 && separated_by(ns[0])) return true;
        std::size_t k = n;
        bool advanced = false;
        while (k-- > 0) {
            if (idx[k] < all.size() - n + k) {
                ++idx[k];
                for (std::size_t j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

} // namespace oracles
