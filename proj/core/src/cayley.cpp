#include "mixvol/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mixvol {

Point CayleyPolytope::embed_point(const Point& x, std::size_t factor) const {
    check_internal(x.size() == n && factor < k, "embed_point: bad arguments");
    Point p = x;
    p.resize(n + k - 1, Rat(0));
    if (factor + 1 < k) p[n + factor] = 1;
    return p;
}

CayleyPolytope cayley(const std::vector<Polytope>& ps) {
    check_input(!ps.empty(), "cayley: empty factor list");
    CayleyPolytope cp;
    cp.factors = ps;
    cp.n = ps[0].ambient_dim();
    cp.k = ps.size();
    for (const auto& p : ps)
        check_input(p.ambient_dim() == cp.n, "cayley: ambient dimension mismatch");

    std::vector<Point> pts;
    std::map<Point, std::pair<std::size_t, std::size_t>> origin;
    for (std::size_t i = 0; i < cp.k; ++i)
        for (std::size_t j = 0; j < ps[i].vertices().size(); ++j) {
            Point e = cp.embed_point(ps[i].vertices()[j], i);
            origin[e] = {i, j};
            pts.push_back(std::move(e));
        }
    cp.embedded = Polytope::hull(pts);

    // dim C = dim(P_1 + ... + P_k) + k - 1
    {
        RankAccumulator acc(cp.n);
        for (const auto& p : ps)
            for (std::size_t j = 1; j < p.vertices().size(); ++j)
                acc.add(sub(p.vertices()[j], p.vertices()[0]));
        check_internal(cp.embedded.dim() ==
                           acc.rank() + static_cast<int>(cp.k) - 1,
                       "cayley: embedded dimension violates the Cayley dimension formula");
    }

    // every factor vertex survives as a vertex of the Cayley polytope
    check_internal(cp.embedded.vertices().size() == pts.size(),
                   "cayley: a factor vertex is not a vertex of the Cayley polytope");
    cp.tags.reserve(pts.size());
    for (const auto& v : cp.embedded.vertices()) {
        auto it = origin.find(v);
        check_internal(it != origin.end(), "cayley: untagged embedded vertex");
        cp.tags.push_back(it->second);
    }
    return cp;
}

Face cayley_support_face(const CayleyPolytope& cp, const Point& u, const Point& v) {
    check_input(u.size() == cp.n && v.size() == cp.k,
                "cayley_support_face: direction shape mismatch");
    // reduced functional: <(u,v),(x,y)> = <u,x> + v_i on slice i; dropping
    // y_k subtracts the constant v_k
    Point w = u;
    for (std::size_t i = 0; i + 1 < cp.k; ++i) w.push_back(v[i] - v[cp.k - 1]);
    Face face = cp.embedded.face_in_direction(w);

    Rat hmax = cp.factors[0].support_value(u) + v[0];
    for (std::size_t i = 1; i < cp.k; ++i)
        hmax = std::max(hmax, cp.factors[i].support_value(u) + v[i]);
    std::set<Point> expected;
    for (std::size_t i = 0; i < cp.k; ++i) {
        if (cp.factors[i].support_value(u) + v[i] != hmax) continue;
        for (auto id : cp.factors[i].argmax_vertices(u))
            expected.insert(cp.embed_point(cp.factors[i].vertices()[id], i));
    }
    std::set<Point> got;
    for (auto id : face.vertex_ids) got.insert(cp.embedded.vertices()[id]);
    check_internal(got == expected,
                   "cayley_support_face: direct face disagrees with the support formula");
    return face;
}

} // namespace mixvol
