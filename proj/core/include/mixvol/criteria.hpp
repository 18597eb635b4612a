#pragma once

#include <optional>
#include <vector>

#include "mixvol/polytope.hpp"

namespace mixvol {

/// dim of the Minkowski sum of every non-empty sub-collection of size at
/// most n is at least the sub-collection size. Throws on an empty
/// collection and on more than n members.
bool is_essential(const std::vector<Polytope>& ks);

/// Segments E_i inside K_i with linearly independent directions; exists
/// exactly when the collection is essential.
struct SegmentWitness {
    std::vector<std::pair<Point, Point>> segments;
};
std::optional<SegmentWitness> independent_segments(const std::vector<Polytope>& ks);

/// T_u: which P_i touch the face Q_i^u. Decided through the support
/// equality h_{P_i}(u) = h_{Q_i}(u), which for P_i inside Q_i is exact.
struct TouchSet {
    Point direction;
    std::vector<bool> members;
};
TouchSet touch_set(const std::vector<Polytope>& ps, const std::vector<Polytope>& qs,
                   const Point& u);

/// One outer-normal representative per non-empty proper face of S (the
/// face's representative normal), covering every cone of the normal fan.
std::vector<Point> normal_fan_representatives(const Polytope& s);

enum class WitnessKind { none, direction, face, segments };

struct MonotonicityVerdict {
    bool strict = false;
    WitnessKind kind = WitnessKind::none;
    /// direction witness (general criterion and the B-body criterion)
    Point direction;
    std::vector<bool> touch_members;
    /// face witness (equal-outer-body criterion)
    std::vector<std::size_t> face_vertex_ids;
    int face_dim = -1;
    int touch_count = -1;
    /// normalized mixed volumes, filled only on request
    std::optional<Rat> lhs_normalized, rhs_normalized;
};

/// V(P_1,...,P_n) < V(Q_1,...,Q_n)? Searches the normal-fan
/// representatives of Q_1+...+Q_n for a direction u making
/// { Q_i^u : i in T_u } union { Q_i : i not in T_u } essential. When all
/// Q_i are full-dimensional the simplified test (essentiality of the
/// touched faces alone) is cross-asserted against the general one.
MonotonicityVerdict strict_monotonicity_general(const std::vector<Polytope>& ps,
                                                const std::vector<Polytope>& qs);

/// All outer bodies equal to one n-dimensional Q: strict inequality holds
/// exactly when some proper face of dimension t is touched by at most t
/// of the P_i. For dim Q < n both mixed volumes vanish and the verdict is
/// non-strict.
MonotonicityVerdict strict_monotonicity_equal(const std::vector<Polytope>& ps,
                                              const Polytope& q);

/// B_{i,u} = { x in Q_i : <u,x> >= h_{P_i}(u) }, the part of Q_i on top
/// of P_i in direction u.
struct BPolytope {
    Polytope body;
    Point direction;
    Rat level;
};
BPolytope b_polytope(const Polytope& p, const Polytope& q, const Point& u);

/// Searches for u with { B_{1,u},...,B_{n,u} } essential; the verdict is
/// asserted to agree with strict_monotonicity_general.
MonotonicityVerdict main3_essential_direction(const std::vector<Polytope>& ps,
                                              const std::vector<Polytope>& qs);

/// Fully mixed Cayley simplex C(E_1,...,E_n) separated from
/// C(P_1,...,P_n) by the lifted functional (u, v): the witness for the
/// subdivision form of strict monotonicity. Requires { B_{i,u} }
/// essential for the given u.
struct CayleySimplexWitness {
    std::vector<std::pair<Point, Point>> segments;  // E_i inside B_{i,u}
    std::vector<Point> cayley_vertices;             // 2n points in R^{2n}
    Point u;
    Point v;               // chosen so that h_{P_i}(u) + v_i all agree
    Rat separation_level;  // h_{C(P_1,...,P_n)}(u, v)
};
CayleySimplexWitness fully_mixed_simplex_witness(const std::vector<Polytope>& ps,
                                                 const std::vector<Polytope>& qs,
                                                 const Point& u);

/// Lattice-distance lower bound on the normalized volume deficit across a
/// facet Q^v missed by the ordered members of `order`.
struct DeficitBound {
    IntVec direction;
    std::vector<std::size_t> order;
    std::vector<Int> distances;
    Int bound = 0;           // sum of the distances
    Int actual_deficit = 0;  // n! Vol(Q) - n! V(P_1,...,P_n), checked >= bound
};
DeficitBound volume_deficit_bound(const std::vector<Polytope>& ps, const Polytope& q,
                                  const IntVec& v, const std::vector<std::size_t>& order);

/// Tries all facets (or only the given one), all subsets of non-touching
/// indices and all qualifying orderings; returns the largest certified
/// bound. Desk-scale search, n <= 4.
std::optional<DeficitBound> deficit_bound_search(const std::vector<Polytope>& ps,
                                                 const Polytope& q,
                                                 const std::optional<IntVec>& v = std::nullopt);

} // namespace mixvol
