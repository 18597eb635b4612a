#include "mixvol/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace mixvol {

Json rat_to_json(const Rat& r) {
    if (is_integer(r)) {
        Int n = numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return Json(n.convert_to<std::int64_t>());
        return Json(n.str());
    }
    return Json(rat_to_string(r));
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw InputError("expected an integer or a fraction string, got: " + j.dump());
}

Json point_to_json(const Point& p) {
    Json arr = Json::array();
    for (const auto& c : p) arr.push_back(rat_to_json(c));
    return arr;
}

Point point_from_json(const Json& j) {
    check_input(j.is_array() && !j.empty(), "a point must be a non-empty array");
    Point p;
    for (const auto& c : j) p.push_back(rat_from_json(c));
    return p;
}

Json polytope_to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.ambient_dim();
    Json pts = Json::array();
    for (const auto& v : p.vertices()) pts.push_back(point_to_json(v));
    j["points"] = pts;
    return j;
}

Polytope polytope_from_json(const Json& j) {
    check_input(j.is_object() && j.contains("dim") && j.contains("points"),
                "polytope object needs \"dim\" and \"points\"");
    const auto n = j.at("dim").get<std::size_t>();
    check_input(n >= 1, "polytope dim must be at least 1");
    std::vector<Point> pts;
    for (const auto& pj : j.at("points")) {
        Point p = point_from_json(pj);
        check_input(p.size() == n, "point length differs from \"dim\"");
        pts.push_back(std::move(p));
    }
    return Polytope::hull(pts);
}

Json collection_to_json(const std::vector<Polytope>& ps) {
    check_input(!ps.empty(), "empty collection");
    Json j;
    j["dim"] = ps[0].ambient_dim();
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(polytope_to_json(p));
    j["polytopes"] = arr;
    return j;
}

std::vector<Polytope> collection_from_json(const Json& j) {
    check_input(j.is_object() && j.contains("dim") && j.contains("polytopes"),
                "collection object needs \"dim\" and \"polytopes\"");
    const auto n = j.at("dim").get<std::size_t>();
    std::vector<Polytope> ps;
    for (const auto& pj : j.at("polytopes")) {
        Polytope p = polytope_from_json(pj);
        check_input(p.ambient_dim() == n, "collection member of wrong dimension");
        ps.push_back(std::move(p));
    }
    check_input(!ps.empty(), "collection without polytopes");
    return ps;
}

Json system_to_json(const SparseSystem& s) {
    Json j;
    j["n"] = s.n();
    j["vars"] = s.vars();
    Json pts = Json::array();
    for (const auto& a : s.points()) pts.push_back(point_to_json(to_rational(a)));
    j["points"] = pts;
    Json c = Json::array();
    for (std::size_t r = 0; r < s.n(); ++r) {
        Json row = Json::array();
        for (std::size_t col = 0; col < s.num_points(); ++col)
            row.push_back(rat_to_json(s.coeffs().at(r, col)));
        c.push_back(row);
    }
    j["C"] = c;
    return j;
}

SparseSystem system_from_json(const Json& j) {
    check_input(j.is_object() && j.contains("n") && j.contains("points") && j.contains("C"),
                "system object needs \"n\", \"points\" and \"C\"");
    const auto n = j.at("n").get<std::size_t>();
    std::vector<IntVec> pts;
    for (const auto& pj : j.at("points")) {
        Point p = point_from_json(pj);
        check_input(p.size() == n, "support point length differs from \"n\"");
        check_input(is_lattice_point(p), "support points must be integral");
        pts.push_back(to_integral(p));
    }
    const auto& cj = j.at("C");
    check_input(cj.is_array() && cj.size() == n, "C must have n rows");
    RatMatrix c(n, pts.size());
    for (std::size_t r = 0; r < n; ++r) {
        check_input(cj[r].is_array() && cj[r].size() == pts.size(),
                    "C row " + std::to_string(r + 1) + " has the wrong width");
        for (std::size_t col = 0; col < pts.size(); ++col)
            c.at(r, col) = rat_from_json(cj[r][col]);
    }
    std::vector<std::string> vars;
    if (j.contains("vars")) {
        vars = j.at("vars").get<std::vector<std::string>>();
        check_input(vars.size() == n, "\"vars\" length differs from \"n\"");
    } else {
        for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
    }
    return SparseSystem(std::move(vars), std::move(pts), std::move(c));
}

SparseSystem system_from_string(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return system_from_json(Json::parse(text));
        break;
    }
    return parse_system_text(text);
}

Json verdict_to_json(const MonotonicityVerdict& v) {
    Json j;
    j["strict"] = v.strict;
    Json w;
    switch (v.kind) {
        case WitnessKind::none:
            w["kind"] = "none";
            break;
        case WitnessKind::direction: {
            w["kind"] = "direction";
            w["u"] = point_to_json(v.direction);
            if (!v.touch_members.empty()) {
                Json t = Json::array();
                for (std::size_t i = 0; i < v.touch_members.size(); ++i)
                    if (v.touch_members[i]) t.push_back(i + 1);
                w["touching"] = t;
            }
            break;
        }
        case WitnessKind::face: {
            w["kind"] = "face";
            w["vertex_ids"] = v.face_vertex_ids;
            w["dim"] = v.face_dim;
            w["touch_count"] = v.touch_count;
            break;
        }
        case WitnessKind::segments:
            w["kind"] = "segments";
            break;
    }
    j["witness"] = w;
    if (v.lhs_normalized) j["lhs_normalized_mv"] = rat_to_string(*v.lhs_normalized);
    if (v.rhs_normalized) j["rhs_normalized_mv"] = rat_to_string(*v.rhs_normalized);
    return j;
}

Json deficit_to_json(const DeficitBound& b) {
    Json j;
    j["v"] = point_to_json(to_rational(b.direction));
    Json order = Json::array();
    for (auto i : b.order) order.push_back(i + 1);
    j["order"] = order;
    Json dist = Json::array();
    for (const auto& l : b.distances) dist.push_back(l.str());
    j["distances"] = dist;
    j["bound"] = b.bound.str();
    j["actual_deficit"] = b.actual_deficit.str();
    return j;
}

Json subdivision_to_json(const MixedSubdivision& ms) {
    Json j;
    j["seed"] = ms.lifting.seed;
    j["total_volume"] = rat_to_string(ms.total_volume);
    Json cells = Json::array();
    for (const auto& cell : ms.cells) {
        Json cj;
        Json parts = Json::array();
        for (const auto& part : cell.parts) {
            Json pj = Json::array();
            for (const auto& p : part) pj.push_back(point_to_json(p));
            parts.push_back(pj);
        }
        cj["parts"] = parts;
        cj["fully_mixed"] = cell.fully_mixed;
        cj["volume"] = rat_to_string(cell.volume);
        cells.push_back(cj);
    }
    j["cells"] = cells;
    return j;
}

Json mv_report_to_json(const MvReport& r, bool timings) {
    Json j;
    j["mixed_volume"] = rat_to_string(r.value);
    j["normalized_mixed_volume"] = rat_to_string(r.normalized);
    j["lattice"] = r.lattice;
    Json ms = Json::array();
    bool agreement = true;
    for (const auto& m : r.methods) {
        Json mj;
        mj["method"] = m.name;
        if (m.ran) {
            mj["value"] = rat_to_string(m.value);
            if (timings) mj["microseconds"] = m.microseconds;
            if (m.value != r.value) agreement = false;
        } else {
            mj["skipped"] = m.skip_reason;
        }
        ms.push_back(mj);
    }
    j["methods"] = ms;
    j["agreement"] = agreement;
    return j;
}

Json system_report_to_json(const SystemReport& r, bool timings) {
    Json j;
    j["n"] = r.n;
    if (timings) {
        Json ms = Json::array();
        for (const auto& m : r.mv_methods) {
            Json mj;
            mj["method"] = m.name;
            if (m.ran) mj["microseconds"] = m.microseconds;
            ms.push_back(mj);
        }
        j["mv_timings"] = ms;
    }
    j["num_points"] = r.num_points;
    j["bkk_bound"] = r.bkk.str();
    j["volume_bound"] = r.volume_bound.str();
    j["attains_volume_bound"] = r.attains_volume_bound;
    Json ber;
    ber["pass"] = r.ber.pass;
    Json faces = Json::array();
    for (const auto& f : r.ber.faces) {
        Json fj;
        Json ids = Json::array();
        for (auto id : f.point_ids) ids.push_back(id + 1);
        fj["points"] = ids;
        fj["dim"] = f.dim_f;
        fj["rank_C"] = f.rank_c;
        fj["rank_Abar"] = f.rank_abar;
        fj["pass"] = f.pass;
        faces.push_back(fj);
    }
    ber["faces"] = faces;
    if (!r.ber.pass) ber["conclusion"] = r.ber.conclusion;
    j["ber"] = ber;
    Json cramer;
    cramer["pass"] = r.cramer;
    if (r.cramer) cramer["annotation"] = r.cramer_annotation;
    j["cramer"] = cramer;
    switch (r.simplicial) {
        case SimplicialVerdict::non_degenerate: j["simplicial"] = "non-degenerate"; break;
        case SimplicialVerdict::fails: j["simplicial"] = "fails"; break;
        case SimplicialVerdict::not_applicable: j["simplicial"] = "not applicable"; break;
    }
    if (!r.simplicial_annotation.empty())
        j["simplicial_annotation"] = r.simplicial_annotation;
    return j;
}

std::string ber_table(const BerResult& ber) {
    std::ostringstream os;
    os << "face points        dim  rank C  rank Abar  verdict\n";
    for (const auto& f : ber.faces) {
        std::string pts = "{";
        for (std::size_t i = 0; i < f.point_ids.size(); ++i) {
            if (i) pts += ",";
            pts += std::to_string(f.point_ids[i] + 1);
        }
        pts += "}";
        os << pts;
        for (std::size_t i = pts.size(); i < 18; ++i) os << ' ';
        os << ' ' << f.dim_f << "    " << f.rank_c << "       " << f.rank_abar
           << "          " << (f.pass ? "ok" : "FAIL") << "\n";
    }
    os << (ber.pass ? "rank audit: pass\n" : "rank audit: FAIL: " + ber.conclusion + "\n");
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << contents;
}

} // namespace mixvol
