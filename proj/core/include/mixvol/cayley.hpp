#pragma once

#include <utility>
#include <vector>

#include "mixvol/polytope.hpp"

namespace mixvol {

/// The Cayley polytope of factors P_1,...,P_k in R^n: the hull of the
/// slices P_i x {e_i}. Stored in reduced coordinates R^{n+k-1} (the last
/// simplex coordinate y_k is eliminated through sum y_i = 1) so that the
/// embedded polytope can be full-dimensional.
struct CayleyPolytope {
    std::vector<Polytope> factors;
    std::size_t n = 0;  // factor ambient dimension
    std::size_t k = 0;  // number of factors
    Polytope embedded;  // in R^{n+k-1}
    /// embedded vertex id -> (factor index, vertex id within the factor)
    std::vector<std::pair<std::size_t, std::size_t>> tags;

    /// (x, e_i) in reduced coordinates.
    Point embed_point(const Point& x, std::size_t factor) const;
};

CayleyPolytope cayley(const std::vector<Polytope>& ps);

/// The face of the Cayley polytope in direction (u, v), u in R^n and
/// v in R^k acting on the unreduced coordinates. Computed directly on the
/// embedded polytope and cross-checked against the support formula
/// max_i { h_{P_i}(u) + v_i } with face hull over the argmax slices.
Face cayley_support_face(const CayleyPolytope& cp, const Point& u, const Point& v);

} // namespace mixvol
