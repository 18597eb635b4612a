#include "mixvol/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mixvol {

namespace {

constexpr std::size_t kMaxAmbientDim = 8;

Rat dot_iv(const IntVec& g, const Point& p) {
    check_internal(g.size() == p.size(), "dot_iv: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += Rat(g[i]) * p[i];
    return s;
}

// Simplicial boundary facet of the growing hull, in reduced coordinates.
struct BFacet {
    std::vector<std::size_t> verts;  // d point ids, sorted
    IntVec normal;                   // canonical primitive outer normal
    Rat offset;
};

// Primitive integer normal of the hyperplane through d affinely
// independent points of R^d, oriented so that <g, inside> < offset.
std::pair<IntVec, Rat> oriented_hyperplane(const std::vector<Point>& pts,
                                           const std::vector<std::size_t>& ids,
                                           const Point& inside) {
    const std::size_t d = pts[ids[0]].size();
    RatMatrix diffs(ids.size() - 1, d);
    for (std::size_t i = 1; i < ids.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            diffs.at(i - 1, j) = pts[ids[i]][j] - pts[ids[0]][j];
    auto ns = nullspace(diffs);
    check_internal(ns.size() == 1, "hyperplane through affinely dependent points");
    IntVec g = primitive_direction(ns[0]);
    Rat c = dot_iv(g, pts[ids[0]]);
    Rat side = dot_iv(g, inside);
    check_internal(side != c, "hyperplane orientation: reference point on hyperplane");
    if (side > c) {
        for (auto& x : g) x = -x;
        c = -c;
    }
    return {std::move(g), std::move(c)};
}

Rat simplex_volume_factor(const std::vector<Point>& pts,
                          const std::vector<std::size_t>& ids, const Point& apex) {
    const std::size_t d = apex.size();
    RatMatrix m(d, d);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = pts[ids[i]][j] - apex[j];
    return abs(exact_det(m));
}

struct ReducedHull {
    int d = 0;
    std::vector<BFacet> boundary;
    Rat volume = 0;  // reduced-space volume times d! is accumulated /d! at end
};

// Incremental (beneath-beyond) hull with a placing triangulation of the
// boundary. `pts` are distinct points spanning R^d affinely; `initial`
// holds d+1 affinely independent ids.
ReducedHull incremental_hull(const std::vector<Point>& pts,
                             const std::vector<std::size_t>& initial) {
    const std::size_t d = pts[0].size();
    ReducedHull h;
    h.d = static_cast<int>(d);

    Point inner(d, Rat(0));
    for (auto id : initial) inner = add(inner, pts[id]);
    inner = scale(Rat(1, static_cast<int>(d) + 1), inner);

    Rat vol_dfact = 0;  // d! * volume
    {
        std::vector<std::size_t> base(initial.begin() + 1, initial.end());
        vol_dfact += simplex_volume_factor(pts, base, pts[initial[0]]);
    }
    for (std::size_t omit = 0; omit < initial.size(); ++omit) {
        std::vector<std::size_t> f;
        for (std::size_t i = 0; i < initial.size(); ++i)
            if (i != omit) f.push_back(initial[i]);
        std::sort(f.begin(), f.end());
        auto [g, c] = oriented_hyperplane(pts, f, inner);
        h.boundary.push_back({std::move(f), std::move(g), std::move(c)});
    }

    std::set<std::size_t> placed(initial.begin(), initial.end());
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (placed.count(p)) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < h.boundary.size(); ++f)
            if (dot_iv(h.boundary[f].normal, pts[p]) > h.boundary[f].offset)
                visible.push_back(f);
        if (visible.empty()) continue;  // inside or on the current hull

        std::map<std::vector<std::size_t>, int> ridge_count;
        for (auto f : visible) {
            vol_dfact += simplex_volume_factor(pts, h.boundary[f].verts, pts[p]);
            const auto& vs = h.boundary[f].verts;
            for (std::size_t omit = 0; omit < vs.size(); ++omit) {
                std::vector<std::size_t> ridge;
                for (std::size_t i = 0; i < vs.size(); ++i)
                    if (i != omit) ridge.push_back(vs[i]);
                ridge_count[ridge] += 1;
            }
        }
        std::vector<BFacet> kept;
        kept.reserve(h.boundary.size());
        std::set<std::size_t> vis(visible.begin(), visible.end());
        for (std::size_t f = 0; f < h.boundary.size(); ++f)
            if (!vis.count(f)) kept.push_back(std::move(h.boundary[f]));
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;  // interior to the visible region
            std::vector<std::size_t> f = ridge;
            f.push_back(p);
            std::sort(f.begin(), f.end());
            auto [g, c] = oriented_hyperplane(pts, f, inner);
            kept.push_back({std::move(f), std::move(g), std::move(c)});
        }
        h.boundary = std::move(kept);
    }
    h.volume = vol_dfact / Rat(factorial(static_cast<unsigned>(d)));
    return h;
}

} // namespace

Polytope::Polytope(const Polytope& o)
    : ambient_dim_(o.ambient_dim_), dim_(o.dim_), vertices_(o.vertices_),
      facets_(o.facets_), equations_(o.equations_), volume_(o.volume_),
      lattice_(o.lattice_) {
    std::lock_guard<std::mutex> lk(o.lattice_mutex_);
    lattice_cache_ = o.lattice_cache_;
}

Polytope& Polytope::operator=(const Polytope& o) {
    if (this == &o) return *this;
    ambient_dim_ = o.ambient_dim_;
    dim_ = o.dim_;
    vertices_ = o.vertices_;
    facets_ = o.facets_;
    equations_ = o.equations_;
    volume_ = o.volume_;
    lattice_ = o.lattice_;
    std::scoped_lock lk(lattice_mutex_, o.lattice_mutex_);
    lattice_cache_ = o.lattice_cache_;
    return *this;
}

Polytope::Polytope(Polytope&& o) noexcept
    : ambient_dim_(o.ambient_dim_), dim_(o.dim_), vertices_(std::move(o.vertices_)),
      facets_(std::move(o.facets_)), equations_(std::move(o.equations_)),
      volume_(std::move(o.volume_)), lattice_(o.lattice_),
      lattice_cache_(std::move(o.lattice_cache_)) {}

Polytope& Polytope::operator=(Polytope&& o) noexcept {
    ambient_dim_ = o.ambient_dim_;
    dim_ = o.dim_;
    vertices_ = std::move(o.vertices_);
    facets_ = std::move(o.facets_);
    equations_ = std::move(o.equations_);
    volume_ = std::move(o.volume_);
    lattice_ = o.lattice_;
    lattice_cache_ = std::move(o.lattice_cache_);
    return *this;
}

AffineFrame::AffineFrame(const std::vector<Point>& pts) {
    check_internal(!pts.empty(), "AffineFrame: empty point set");
    const std::size_t n = pts[0].size();
    origin_ = pts[0];
    independent_.push_back(0);
    RankAccumulator acc(n);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Point diff = sub(pts[i], origin_);
        if (acc.add(diff)) {
            basis_.push_back(std::move(diff));
            independent_.push_back(i);
        }
    }
    const std::size_t d = basis_.size();
    if (d == 0) return;
    RankAccumulator rows(d);
    for (std::size_t r = 0; r < n && pivot_rows_.size() < d; ++r) {
        Point row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = basis_[c][r];
        if (rows.add(row)) pivot_rows_.push_back(r);
    }
    check_internal(pivot_rows_.size() == d, "affine basis has deficient row rank");
    RatMatrix s(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) s.at(r, c) = basis_[c][pivot_rows_[r]];
    s_inv_cols_.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
        Point e(d, Rat(0));
        e[c] = 1;
        auto col = solve(s, e);
        check_internal(col.has_value(), "pivot submatrix is singular");
        s_inv_cols_[c] = *col;
    }
}

Point AffineFrame::reduce(const Point& p) const {
    const std::size_t d = basis_.size();
    Point rhs(d);
    for (std::size_t r = 0; r < d; ++r) rhs[r] = p[pivot_rows_[r]] - origin_[pivot_rows_[r]];
    Point lam(d, Rat(0));
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) lam[r] += s_inv_cols_[c][r] * rhs[c];
    return lam;
}

Polytope Polytope::hull(const std::vector<Point>& points) {
    check_input(!points.empty(), "convex hull of an empty point set");
    const std::size_t n = points[0].size();
    check_input(n >= 1, "points must have at least one coordinate");
    check_input(n <= kMaxAmbientDim, "ambient dimension exceeds the supported limit of 8");
    for (const auto& p : points)
        check_input(p.size() == n, "points with mixed ambient dimensions");

    // distinct points, first occurrence kept
    std::vector<Point> pts;
    {
        std::map<Point, std::size_t> seen;
        for (const auto& p : points)
            if (seen.emplace(p, pts.size()).second) pts.push_back(p);
    }

    Polytope poly;
    poly.ambient_dim_ = n;

    AffineFrame frame(pts);
    const std::vector<Point>& basis = frame.basis();
    const std::size_t d = basis.size();
    poly.dim_ = static_cast<int>(d);

    // affine hull equations: primitive solutions of B^T u = 0
    {
        RatMatrix bt(d, n);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < n; ++c) bt.at(r, c) = basis[r][c];
        for (const auto& v : nullspace(bt)) {
            IntVec g = primitive_direction(v);
            Rat off = dot_iv(g, pts[0]);
            poly.equations_.push_back({std::move(g), std::move(off)});
        }
    }

    if (d == 0) {
        poly.vertices_ = {pts[0]};
        poly.volume_ = 0;
        poly.lattice_ = is_lattice_point(pts[0]);
        return poly;
    }

    std::vector<Point> red(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) red[i] = frame.reduce(pts[i]);

    ReducedHull rh = incremental_hull(red, frame.independent_ids());

    // true facets: group boundary simplices by supporting hyperplane
    std::map<std::pair<IntVec, Rat>, bool> hyperplanes;
    for (const auto& f : rh.boundary) hyperplanes[{f.normal, f.offset}] = true;

    // vertices: points whose active reduced normals span R^d
    std::vector<std::size_t> vertex_ids;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> active;
        for (const auto& [key, unused] : hyperplanes) {
            (void)unused;
            if (dot_iv(key.first, red[i]) == key.second) active.push_back(to_rational(key.first));
        }
        if (static_cast<std::size_t>(rank_of_vectors(active)) == d) vertex_ids.push_back(i);
    }
    poly.vertices_.reserve(vertex_ids.size());
    for (auto i : vertex_ids) poly.vertices_.push_back(pts[i]);

    // map facet hyperplanes to ambient primitive normals
    RatMatrix bt(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) bt.at(r, c) = basis[r][c];
    for (const auto& [key, unused] : hyperplanes) {
        (void)unused;
        const IntVec& g = key.first;
        Point rhs(d);
        for (std::size_t r = 0; r < d; ++r) rhs[r] = Rat(g[r]);
        auto u_any = solve(bt, rhs);
        check_internal(u_any.has_value(), "facet normal lift failed");
        IntVec u = primitive_direction(*u_any);
        Facet facet;
        facet.normal = std::move(u);
        facet.offset = 0;
        bool first = true;
        for (std::size_t vi = 0; vi < vertex_ids.size(); ++vi) {
            Rat val = dot_iv(facet.normal, pts[vertex_ids[vi]]);
            if (first || val > facet.offset) facet.offset = val;
            first = false;
        }
        for (std::size_t vi = 0; vi < vertex_ids.size(); ++vi) {
            if (dot_iv(key.first, red[vertex_ids[vi]]) == key.second)
                facet.vertex_ids.push_back(vi);
        }
        // consistency: the reduced and ambient hyperplanes cut out the
        // same vertex set
        for (auto vi : facet.vertex_ids)
            check_internal(dot_iv(facet.normal, poly.vertices_[vi]) == facet.offset,
                           "facet lift: offset mismatch");
        poly.facets_.push_back(std::move(facet));
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(),
              [](const Facet& a, const Facet& b) { return a.vertex_ids < b.vertex_ids; });

    if (d == n) {
        RatMatrix b(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) b.at(r, c) = basis[c][r];
        poly.volume_ = rh.volume * abs(exact_det(b));
    } else {
        poly.volume_ = 0;
    }

    poly.lattice_ = true;
    for (const auto& v : poly.vertices_)
        if (!is_lattice_point(v)) { poly.lattice_ = false; break; }
    return poly;
}

Rat Polytope::support_value(const Point& u) const {
    check_internal(u.size() == ambient_dim_, "support_value: dimension mismatch");
    Rat best = dot(u, vertices_[0]);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        Rat v = dot(u, vertices_[i]);
        if (v > best) best = v;
    }
    return best;
}

std::vector<std::size_t> Polytope::argmax_vertices(const Point& u) const {
    Rat h = support_value(u);
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (dot(u, vertices_[i]) == h) ids.push_back(i);
    return ids;
}

Face Polytope::face_in_direction(const Point& u) const {
    Face f;
    f.vertex_ids = argmax_vertices(u);
    f.normal = u;
    f.proper = f.vertex_ids.size() != vertices_.size();
    std::vector<Point> diffs;
    for (std::size_t i = 1; i < f.vertex_ids.size(); ++i)
        diffs.push_back(sub(vertices_[f.vertex_ids[i]], vertices_[f.vertex_ids[0]]));
    f.dim = rank_of_vectors(diffs);
    return f;
}

const std::vector<Face>& Polytope::face_lattice() const {
    check_input(dim_ >= 1, "face_lattice requires dim >= 1");
    {
        std::lock_guard<std::mutex> lk(lattice_mutex_);
        if (lattice_cache_) return *lattice_cache_;
    }
    // closure of the facet vertex sets under intersection
    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> work;
    for (const auto& f : facets_) {
        if (sets.insert(f.vertex_ids).second) work.push_back(f.vertex_ids);
    }
    while (!work.empty()) {
        auto cur = std::move(work.back());
        work.pop_back();
        for (const auto& f : facets_) {
            std::vector<std::size_t> inter;
            std::set_intersection(cur.begin(), cur.end(), f.vertex_ids.begin(),
                                  f.vertex_ids.end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            if (sets.insert(inter).second) work.push_back(inter);
        }
    }
    auto faces = std::make_shared<std::vector<Face>>();
    auto build = [&](const std::vector<std::size_t>& ids, bool proper) {
        Face f;
        f.vertex_ids = ids;
        f.proper = proper;
        std::vector<Point> diffs;
        for (std::size_t i = 1; i < ids.size(); ++i)
            diffs.push_back(sub(vertices_[ids[i]], vertices_[ids[0]]));
        f.dim = rank_of_vectors(diffs);
        Point nrm(ambient_dim_, Rat(0));
        if (proper) {
            for (const auto& facet : facets_) {
                if (std::includes(facet.vertex_ids.begin(), facet.vertex_ids.end(),
                                  ids.begin(), ids.end()))
                    nrm = add(nrm, to_rational(facet.normal));
            }
        }
        f.normal = std::move(nrm);
        faces->push_back(std::move(f));
    };
    for (const auto& ids : sets) build(ids, true);
    std::vector<std::size_t> all(vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!sets.count(all)) build(all, false);
    std::sort(faces->begin(), faces->end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_ids < b.vertex_ids;
    });
    std::lock_guard<std::mutex> lk(lattice_mutex_);
    if (!lattice_cache_) lattice_cache_ = std::move(faces);
    return *lattice_cache_;
}

bool Polytope::contains(const Point& x) const {
    check_internal(x.size() == ambient_dim_, "contains: dimension mismatch");
    for (const auto& e : equations_)
        if (dot_iv(e.normal, x) != e.offset) return false;
    for (const auto& f : facets_)
        if (dot_iv(f.normal, x) > f.offset) return false;
    if (dim_ == 0) return x == vertices_[0];
    return true;
}

bool Polytope::contains_polytope(const Polytope& other) const {
    for (const auto& v : other.vertices())
        if (!contains(v)) return false;
    return true;
}

Polytope Polytope::translated(const Point& t) const {
    std::vector<Point> moved;
    moved.reserve(vertices_.size());
    for (const auto& v : vertices_) moved.push_back(add(v, t));
    return Polytope::hull(moved);
}

bool Polytope::same_vertex_set(const Polytope& other) const {
    if (vertices_.size() != other.vertices_.size()) return false;
    std::set<Point> a(vertices_.begin(), vertices_.end());
    std::set<Point> b(other.vertices_.begin(), other.vertices_.end());
    return a == b;
}

std::vector<Point> Polytope::face_points(const Face& f) const {
    std::vector<Point> pts;
    pts.reserve(f.vertex_ids.size());
    for (auto id : f.vertex_ids) pts.push_back(vertices_[id]);
    return pts;
}

Polytope Polytope::face_polytope(const Face& f) const {
    return Polytope::hull(face_points(f));
}

Polytope convex_hull(const std::vector<Point>& points) { return Polytope::hull(points); }

int affine_dim(const Polytope& p) { return p.dim(); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    check_input(p.ambient_dim() == q.ambient_dim(),
                "minkowski_sum: ambient dimension mismatch");
    std::vector<Point> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(add(a, b));
    return Polytope::hull(sums);
}

Polytope minkowski_sum(const std::vector<Polytope>& ps) {
    check_input(!ps.empty(), "minkowski_sum: empty list");
    Polytope acc = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
    return acc;
}

Rat euclidean_volume(const Polytope& p) { return p.volume(); }

Rat normalized_volume(const Polytope& p) {
    Rat nv = Rat(factorial(static_cast<unsigned>(p.ambient_dim()))) * p.volume();
    if (p.is_lattice())
        check_internal(is_integer(nv),
                       "normalized volume of a lattice polytope must be an integer");
    return nv;
}

Rat support_value(const Polytope& p, const Point& u) { return p.support_value(u); }

Int lattice_distance(const Polytope& p, const Polytope& q, const IntVec& u) {
    check_input(p.is_lattice() && q.is_lattice(),
                "lattice_distance: non-integral vertices");
    check_input(is_primitive(u), "lattice_distance: u must be primitive");
    check_input(q.contains_polytope(p), "lattice_distance: containment violated");
    Point ur = to_rational(u);
    Rat diff = q.support_value(ur) - p.support_value(ur);
    Int l = to_int(diff);
    check_internal(l >= 0, "lattice_distance must be non-negative");
    return l;
}

bool touches(const Polytope& k, const Polytope& q, const Face& f) {
    check_input(q.contains_polytope(k), "touches: K is not contained in the parent polytope");
    const auto& vs = k.vertices();
    std::vector<Point> rows;
    Point rhs;
    rows.emplace_back(vs.size(), Rat(1));
    rhs.push_back(1);
    for (const auto& facet : q.facets()) {
        if (!std::includes(facet.vertex_ids.begin(), facet.vertex_ids.end(),
                           f.vertex_ids.begin(), f.vertex_ids.end()))
            continue;
        Point row(vs.size());
        for (std::size_t i = 0; i < vs.size(); ++i) row[i] = dot_iv(facet.normal, vs[i]);
        rows.push_back(std::move(row));
        rhs.push_back(facet.offset);
    }
    return linear_feasible_eq(RatMatrix::from_rows(rows), rhs);
}

Polytope truncate_above(const Polytope& q, const Point& u, const Rat& level) {
    check_input(!is_zero(u), "truncate_above: direction must be non-zero");
    std::vector<Point> kept;
    for (const auto& v : q.vertices())
        if (dot(u, v) >= level) kept.push_back(v);
    if (q.dim() >= 1) {
        // crossing points on the 1-faces
        std::vector<const Face*> edges;
        for (const auto& f : q.face_lattice())
            if (f.dim == 1) edges.push_back(&f);
        for (const Face* e : edges) {
            check_internal(e->vertex_ids.size() == 2, "1-face with more than two vertices");
            const Point& a = q.vertices()[e->vertex_ids[0]];
            const Point& b = q.vertices()[e->vertex_ids[1]];
            Rat va = dot(u, a), vb = dot(u, b);
            if ((va > level && vb < level) || (va < level && vb > level)) {
                Rat t = (va - level) / (va - vb);
                kept.push_back(add(a, scale(t, sub(b, a))));
            }
        }
    }
    check_input(!kept.empty(), "truncate_above: empty result");
    return Polytope::hull(kept);
}

} // namespace mixvol
