#include "mixvol/subdivision.hpp"

#include <algorithm>
#include <random>

namespace mixvol {

namespace {

Rat dot_iv(const IntVec& g, const Point& p) {
    Rat s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) s += Rat(g[i]) * p[i];
    return s;
}

} // namespace

RegularSubdivision regular_subdivision(const std::vector<Point>& points,
                                       const std::vector<Int>& heights) {
    check_input(!points.empty(), "regular_subdivision: empty point set");
    check_input(points.size() == heights.size(),
                "regular_subdivision: one height per point required");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            check_input(points[i] != points[j], "regular_subdivision: duplicate points");

    AffineFrame frame(points);
    const int d = frame.dim();
    std::vector<Point> lifted(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        lifted[i] = frame.reduce(points[i]);
        lifted[i].push_back(Rat(heights[i]));
    }

    RegularSubdivision rs;
    rs.base_dim = d;

    RankAccumulator acc(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 1; i < lifted.size(); ++i) acc.add(sub(lifted[i], lifted[0]));
    if (acc.rank() == d) {
        // the lift is affine over the configuration: trivial subdivision
        SubdivisionCell cell;
        cell.point_ids.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) cell.point_ids[i] = i;
        rs.cells.push_back(std::move(cell));
        rs.triangulation = points.size() == static_cast<std::size_t>(d) + 1;
        return rs;
    }
    check_internal(acc.rank() == d + 1, "regular_subdivision: lift rank out of range");

    Polytope upper = Polytope::hull(lifted);
    rs.triangulation = true;
    for (const auto& facet : upper.facets()) {
        if (facet.normal.back() >= 0) continue;  // not a lower facet
        SubdivisionCell cell;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (dot_iv(facet.normal, lifted[i]) == facet.offset) cell.point_ids.push_back(i);
        if (cell.point_ids.size() != static_cast<std::size_t>(d) + 1) rs.triangulation = false;
        rs.cells.push_back(std::move(cell));
    }
    check_internal(!rs.cells.empty(), "regular_subdivision: no lower facets");
    std::sort(rs.cells.begin(), rs.cells.end(),
              [](const SubdivisionCell& a, const SubdivisionCell& b) {
                  return a.point_ids < b.point_ids;
              });
    return rs;
}

MixedSubdivision pure_mixed_subdivision(const std::vector<Polytope>& ps,
                                        std::uint64_t seed) {
    check_input(!ps.empty(), "pure_mixed_subdivision: empty collection");
    const std::size_t n = ps[0].ambient_dim();
    const std::size_t k = ps.size();
    check_input(k == n, "pure_mixed_subdivision: expected n polytopes in R^n");
    for (const auto& p : ps)
        check_input(p.ambient_dim() == n, "pure_mixed_subdivision: dimension mismatch");

    // Cayley configuration in reduced coordinates
    std::vector<Point> pts;
    std::vector<std::pair<std::size_t, std::size_t>> tags;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < ps[i].vertices().size(); ++j) {
            Point e = ps[i].vertices()[j];
            e.resize(n + k - 1, Rat(0));
            if (i + 1 < k) e[n + i] = 1;
            pts.push_back(std::move(e));
            tags.emplace_back(i, j);
        }

    Int max_coord = 1;
    for (const auto& p : pts)
        for (const auto& c : p) {
            Int m = abs(numerator(c)) / denominator(c) + 1;
            if (m > max_coord) max_coord = m;
        }
    Int bound = 4 * Int(pts.size()) * max_coord;

    std::mt19937_64 rng(seed);
    auto draw = [&rng](const Int& b) {
        // deterministic bounded draw; modulo bias is irrelevant here
        std::uint64_t span = b.convert_to<std::uint64_t>();
        return Int(rng() % (span + 1));
    };

    RegularSubdivision rs;
    Lifting lifting;
    bool found = false;
    for (int attempt = 0; attempt < 256; ++attempt) {
        if (attempt > 0 && attempt % 32 == 0) bound *= 16;
        std::vector<Int> heights(pts.size());
        for (auto& h : heights) h = draw(bound);
        rs = regular_subdivision(pts, heights);
        if (rs.triangulation) {
            lifting = {seed, bound, std::move(heights)};
            found = true;
            break;
        }
    }
    check_internal(found, "pure_mixed_subdivision: no generic lifting found");

    MixedSubdivision ms;
    ms.lifting = std::move(lifting);
    for (const auto& cell : rs.cells) {
        MixedCell mc;
        mc.parts.assign(k, {});
        for (auto id : cell.point_ids)
            mc.parts[tags[id].first].push_back(ps[tags[id].first].vertices()[tags[id].second]);
        for (std::size_t i = 0; i < k; ++i) {
            check_internal(!mc.parts[i].empty(),
                           "mixed cell misses a summand from some factor");
            std::vector<Point> diffs;
            for (std::size_t j = 1; j < mc.parts[i].size(); ++j)
                diffs.push_back(sub(mc.parts[i][j], mc.parts[i][0]));
            check_internal(rank_of_vectors(diffs) + 1 ==
                               static_cast<int>(mc.parts[i].size()),
                           "mixed cell part is not a simplex");
        }
        bool segments = true;
        for (const auto& part : mc.parts)
            if (part.size() != 2) { segments = false; break; }
        if (segments) {
            RatMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                Point diff = sub(mc.parts[i][1], mc.parts[i][0]);
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = diff[j];
            }
            Rat det = exact_det(m);
            mc.fully_mixed = det != 0;
            if (mc.fully_mixed) mc.volume = abs(det);
        }
        if (!mc.fully_mixed) {
            std::vector<Point> sums{Point(n, Rat(0))};
            for (const auto& part : mc.parts) {
                std::vector<Point> next;
                next.reserve(sums.size() * part.size());
                for (const auto& s : sums)
                    for (const auto& p : part) next.push_back(add(s, p));
                sums = std::move(next);
            }
            mc.volume = Polytope::hull(sums).volume();
        }
        ms.total_volume += mc.volume;
        ms.cells.push_back(std::move(mc));
    }

    check_internal(ms.total_volume == minkowski_sum(ps).volume(),
                   "pure mixed subdivision does not tile the Minkowski sum");
    return ms;
}

} // namespace mixvol
