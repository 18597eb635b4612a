#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "mixvol/linalg.hpp"
#include "mixvol/rational.hpp"

namespace mixvol {

/// Supporting inequality <normal, x> <= offset, tight on a facet of the
/// polytope relative to its affine hull. Normals are primitive integer
/// vectors (rational input always admits one).
struct Facet {
    IntVec normal;
    Rat offset;
    std::vector<std::size_t> vertex_ids;  // vertices lying on the facet
};

/// Affine-hull equation <normal, x> = offset.
struct HullEquation {
    IntVec normal;
    Rat offset;
};

/// A face of a polytope, identified by the vertices it contains. The
/// representative normal is the sum of the primitive normals of all facets
/// containing the face (zero for the improper face), which lies in the
/// relative interior of the face's normal cone.
struct Face {
    std::vector<std::size_t> vertex_ids;  // sorted
    int dim = -1;
    Point normal;
    bool proper = true;
};

/// Exact affine coordinate frame of a point set: origin = first point,
/// basis made of point differences. Members of the affine span get exact
/// coordinates in that basis.
class AffineFrame {
public:
    explicit AffineFrame(const std::vector<Point>& pts);
    int dim() const { return static_cast<int>(basis_.size()); }
    std::size_t ambient_dim() const { return origin_.size(); }
    const Point& origin() const { return origin_; }
    const std::vector<Point>& basis() const { return basis_; }
    /// Ids (into the constructing point list) of dim()+1 affinely
    /// independent points, starting with the origin.
    const std::vector<std::size_t>& independent_ids() const { return independent_; }
    Point reduce(const Point& p) const;

private:
    Point origin_;
    std::vector<Point> basis_;
    std::vector<std::size_t> independent_;
    std::vector<std::size_t> pivot_rows_;
    std::vector<Point> s_inv_cols_;
};

/// Convex polytope in exact rational V-representation. Irredundant
/// vertices, facets and the ambient volume are computed at construction;
/// the face lattice is derived lazily. Instances are immutable and safe to
/// share across threads.
class Polytope {
public:
    /// Convex hull of an arbitrary rational point set. Interior and other
    /// redundant points are dropped; hulls of any affine dimension are
    /// supported. Ambient dimension is capped at 8.
    static Polytope hull(const std::vector<Point>& points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<HullEquation>& hull_equations() const { return equations_; }

    /// Euclidean volume in ambient measure; 0 when dim < ambient_dim.
    const Rat& volume() const { return volume_; }
    bool is_lattice() const { return lattice_; }

    Rat support_value(const Point& u) const;
    std::vector<std::size_t> argmax_vertices(const Point& u) const;

    /// The face P^u (u = 0 yields the improper face P).
    Face face_in_direction(const Point& u) const;

    /// All faces of dimensions 0..dim, including the improper face,
    /// sorted by (dim, vertex ids). Requires dim >= 1.
    const std::vector<Face>& face_lattice() const;

    bool contains(const Point& x) const;
    bool contains_polytope(const Polytope& other) const;

    Polytope translated(const Point& t) const;
    bool same_vertex_set(const Polytope& other) const;

    /// Vertex points of a face, and the face as a polytope of its own.
    std::vector<Point> face_points(const Face& f) const;
    Polytope face_polytope(const Face& f) const;

    /// Empty placeholder; every meaningful instance comes from hull().
    Polytope() = default;

private:
    std::size_t ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    std::vector<HullEquation> equations_;
    Rat volume_ = 0;
    bool lattice_ = false;

    mutable std::mutex lattice_mutex_;
    mutable std::shared_ptr<const std::vector<Face>> lattice_cache_;

public:
    Polytope(const Polytope& o);
    Polytope& operator=(const Polytope& o);
    Polytope(Polytope&& o) noexcept;
    Polytope& operator=(Polytope&& o) noexcept;
};

Polytope convex_hull(const std::vector<Point>& points);
int affine_dim(const Polytope& p);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const std::vector<Polytope>& ps);
Rat euclidean_volume(const Polytope& p);

/// n! times the Euclidean volume. Integrality is asserted for lattice
/// input.
Rat normalized_volume(const Polytope& p);

Rat support_value(const Polytope& p, const Point& u);

/// h_Q(u) - h_P(u) for lattice P inside lattice Q and primitive u.
Int lattice_distance(const Polytope& p, const Polytope& q, const IntVec& u);

/// K intersects the face f of q? Decided by exact linear feasibility:
/// a convex combination of K's vertices subject to the equations of every
/// facet of q containing f. Requires K inside q.
bool touches(const Polytope& k, const Polytope& q, const Face& f);

/// { x in q : <u, x> >= level }, as a polytope.
Polytope truncate_above(const Polytope& q, const Point& u, const Rat& level);

} // namespace mixvol
