#pragma once

// Shared fixtures: the pentagon pair in both variants, the prism system,
// and a few tiny bodies.

#include "mixvol/polytope.hpp"
#include "mixvol/system.hpp"

namespace fixtures {

using namespace mixvol;

inline Point pt(std::initializer_list<int> cs) {
    Point p;
    for (int c : cs) p.push_back(Rat(c));
    return p;
}

inline Polytope segment_e1() { return Polytope::hull({pt({0, 0}), pt({1, 0})}); }
inline Polytope segment_e2() { return Polytope::hull({pt({0, 0}), pt({0, 1})}); }
inline Polytope unit_square() {
    return Polytope::hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
}
inline Polytope bottom_edge() { return segment_e1(); }

// total support of the pentagon examples, in the labelled order 1..5 (+6)
inline std::vector<Point> pentagon_support() {
    return {pt({0, 0}), pt({1, 2}), pt({2, 1}), pt({2, 0}), pt({0, 1})};
}
inline Polytope pentagon() { return Polytope::hull(pentagon_support()); }
inline Polytope p1_triangle() {
    return Polytope::hull({pt({0, 0}), pt({1, 2}), pt({2, 1})});
}
inline Polytope p2_first() {
    return Polytope::hull({pt({2, 0}), pt({0, 1}), pt({1, 2})});
}
inline Polytope p2_second() {
    return Polytope::hull({pt({2, 0}), pt({0, 1}), pt({1, 1})});
}

inline std::vector<Point> prism_points() {
    return {pt({0, 0, 0}), pt({1, 0, 0}), pt({1, 1, 0}),
            pt({0, 1, 0}), pt({0, 0, 1}), pt({0, 1, 1})};
}
inline Polytope prism() { return Polytope::hull(prism_points()); }

inline Polytope standard_simplex(std::size_t n) {
    std::vector<Point> pts{Point(n, Rat(0))};
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, Rat(0));
        e[i] = 1;
        pts.push_back(e);
    }
    return Polytope::hull(pts);
}

inline RatMatrix mat(std::vector<std::vector<int>> rows) {
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

inline IntVec iv(std::initializer_list<int> cs) {
    IntVec v;
    for (int c : cs) v.push_back(c);
    return v;
}

// pentagon system with equality (unit coefficients on both triangle supports)
inline SparseSystem first_pentagon_system() {
    std::vector<IntVec> pts{iv({0, 0}), iv({1, 2}), iv({2, 1}), iv({2, 0}), iv({0, 1})};
    return SparseSystem({"x", "y"}, pts, mat({{1, 1, 1, 0, 0}, {0, 1, 0, 1, 1}}));
}

// pentagon system with the moved support point (strict drop)
inline SparseSystem second_pentagon_system() {
    std::vector<IntVec> pts{iv({0, 0}), iv({1, 2}), iv({2, 1}),
                            iv({2, 0}), iv({0, 1}), iv({1, 1})};
    return SparseSystem({"x", "y"}, pts,
                        mat({{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}}));
}

// Degenerate fixture: the rank audit fails at the {5,6} edge, so the
// bound of 3 torus solutions is not attained. The true count (two) is
// not machine-checked anywhere; no solver exists in this project.
inline SparseSystem prism_system() {
    std::vector<IntVec> pts{iv({0, 0, 0}), iv({1, 0, 0}), iv({1, 1, 0}),
                            iv({0, 1, 0}), iv({0, 0, 1}), iv({0, 1, 1})};
    return SparseSystem({"x", "y", "z"}, pts,
                        mat({{1, 3, 5, 1, -2, 2}, {1, 1, -3, 3, 1, -1}, {1, 3, 1, 3, -1, 1}}));
}

inline SparseSystem dense_linear_system() {
    std::vector<IntVec> pts{iv({0, 0}), iv({1, 0}), iv({0, 1})};
    return SparseSystem({"x", "y"}, pts, mat({{1, 2, 3}, {4, 5, 7}}));
}

} // namespace fixtures
