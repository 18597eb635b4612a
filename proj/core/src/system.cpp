#include "mixvol/system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace mixvol {

SparseSystem::SparseSystem(std::vector<std::string> vars, std::vector<IntVec> points,
                           RatMatrix coeffs, std::vector<std::string> warnings)
    : vars_(std::move(vars)), points_(std::move(points)), coeffs_(std::move(coeffs)),
      warnings_(std::move(warnings)) {
    const std::size_t n = vars_.size();
    check_input(n >= 1, "system must have at least one variable");
    check_input(!points_.empty(), "system has an empty support");
    check_input(coeffs_.rows == n, "equation/variable count mismatch");
    check_input(coeffs_.cols == points_.size(),
                "coefficient matrix width differs from the support size");
    {
        std::set<std::string> distinct(vars_.begin(), vars_.end());
        check_input(distinct.size() == n, "repeated variable names");
    }
    std::set<IntVec> seen;
    for (const auto& a : points_) {
        check_input(a.size() == n, "support point of wrong dimension");
        check_input(seen.insert(a).second, "duplicate support point");
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < points_.size(); ++j)
            if (coeffs_.at(i, j) != 0) nonzero = true;
        check_input(nonzero, "zero polynomial row " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < points_.size(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i)
            if (coeffs_.at(i, j) != 0) nonzero = true;
        check_input(nonzero, "unused support point (zero column) " + std::to_string(j + 1));
    }
    supports_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < points_.size(); ++j)
            if (coeffs_.at(i, j) != 0) supports_[i].push_back(j);
    newtons_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point> pts;
        for (auto j : supports_[i]) pts.push_back(to_rational(points_[j]));
        newtons_.push_back(Polytope::hull(pts));
    }
    std::vector<Point> all;
    for (const auto& a : points_) all.push_back(to_rational(a));
    q_ = Polytope::hull(all);
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, Caret, Slash, Equals, Comma, Break, End };
    Kind kind;
    std::string text;
    int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> ts;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Kind k, std::string t) {
        ts.push_back({k, std::move(t), line, col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n' || c == ';') {
            push(Token::Break, std::string(1, c));
            if (c == '\n') { ++line; col = 1; } else { ++col; }
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; ++col; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            push(Token::Number, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            push(Token::Ident, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (c) {
            case '+': push(Token::Plus, "+"); break;
            case '-': push(Token::Minus, "-"); break;
            case '*': push(Token::Star, "*"); break;
            case '^': push(Token::Caret, "^"); break;
            case '/': push(Token::Slash, "/"); break;
            case '=': push(Token::Equals, "="); break;
            case ',': push(Token::Comma, ","); break;
            default:
                throw InputError("syntax error at line " + std::to_string(line) +
                                 ", column " + std::to_string(col) +
                                 ": unexpected character '" + std::string(1, c) + "'");
        }
        ++i;
        ++col;
    }
    ts.push_back({Token::End, "", line, col});
    return ts;
}

[[noreturn]] void fail_at(const Token& t, const std::string& what) {
    throw InputError("syntax error at line " + std::to_string(t.line) + ", column " +
                     std::to_string(t.col) + ": " + what);
}

struct RawTerm {
    Rat coeff;
    std::map<std::string, long> exps;
};

// terms of one equation; cursor left after the statement break
std::vector<RawTerm> parse_equation(const std::vector<Token>& ts, std::size_t& i) {
    std::vector<RawTerm> terms;
    bool done = false;
    bool first = true;
    while (!done) {
        int sign = 1;
        bool saw_sign = false;
        while (ts[i].kind == Token::Plus || ts[i].kind == Token::Minus) {
            if (ts[i].kind == Token::Minus) sign = -sign;
            saw_sign = true;
            ++i;
        }
        if (!first && !saw_sign) fail_at(ts[i], "expected '+' or '-' between terms");
        RawTerm term;
        term.coeff = sign;
        bool have_factor = false;
        if (ts[i].kind == Token::Number) {
            std::string num = ts[i].text;
            ++i;
            if (ts[i].kind == Token::Slash) {
                ++i;
                if (ts[i].kind != Token::Number) fail_at(ts[i], "expected a denominator");
                num += "/" + ts[i].text;
                ++i;
            }
            term.coeff *= parse_rat(num);
            have_factor = true;
            if (ts[i].kind == Token::Star) ++i;  // coefficient times monomial
        }
        while (ts[i].kind == Token::Ident) {
            std::string var = ts[i].text;
            ++i;
            long e = 1;
            if (ts[i].kind == Token::Caret) {
                ++i;
                int esign = 1;
                while (ts[i].kind == Token::Minus || ts[i].kind == Token::Plus) {
                    if (ts[i].kind == Token::Minus) esign = -esign;
                    ++i;
                }
                if (ts[i].kind != Token::Number) fail_at(ts[i], "expected an exponent");
                e = esign * std::stol(ts[i].text);
                ++i;
            }
            term.exps[var] += e;
            have_factor = true;
            if (ts[i].kind == Token::Star) {
                ++i;
                if (ts[i].kind != Token::Ident && ts[i].kind != Token::Number)
                    fail_at(ts[i], "expected a factor after '*'");
                if (ts[i].kind == Token::Number) fail_at(ts[i], "coefficient must lead its term");
            }
        }
        if (!have_factor) fail_at(ts[i], "expected a term");
        terms.push_back(std::move(term));
        first = false;
        if (ts[i].kind == Token::Equals) {
            ++i;
            if (ts[i].kind != Token::Number || ts[i].text != "0")
                fail_at(ts[i], "only '= 0' is supported");
            ++i;
            while (ts[i].kind == Token::Break) ++i;
            done = true;
        } else if (ts[i].kind == Token::Break || ts[i].kind == Token::End) {
            while (ts[i].kind == Token::Break) ++i;
            done = true;
        } else if (ts[i].kind != Token::Plus && ts[i].kind != Token::Minus) {
            fail_at(ts[i], "unexpected token '" + ts[i].text + "'");
        }
    }
    return terms;
}

} // namespace

SparseSystem parse_system_text(const std::string& text) {
    auto ts = tokenize(text);
    std::size_t i = 0;
    while (ts[i].kind == Token::Break) ++i;

    std::vector<std::string> declared;
    if (ts[i].kind == Token::Ident && ts[i].text == "vars") {
        ++i;
        while (ts[i].kind == Token::Ident || ts[i].kind == Token::Comma) {
            if (ts[i].kind == Token::Ident) declared.push_back(ts[i].text);
            ++i;
        }
        if (ts[i].kind != Token::Break && ts[i].kind != Token::End)
            fail_at(ts[i], "malformed variable declaration");
        while (ts[i].kind == Token::Break) ++i;
        check_input(!declared.empty(), "empty variable declaration");
    }

    std::vector<std::vector<RawTerm>> equations;
    while (ts[i].kind != Token::End) equations.push_back(parse_equation(ts, i));
    check_input(!equations.empty(), "no equations");

    std::vector<std::string> vars = declared;
    if (vars.empty()) {
        std::set<std::string> seen;
        for (const auto& eq : equations)
            for (const auto& t : eq)
                for (const auto& [v, e] : t.exps) {
                    (void)e;
                    if (seen.insert(v).second) vars.push_back(v);
                }
        check_input(!vars.empty(), "no variables appear in the system");
    } else {
        std::set<std::string> ok(vars.begin(), vars.end());
        for (const auto& eq : equations)
            for (const auto& t : eq)
                for (const auto& [v, e] : t.exps) {
                    (void)e;
                    check_input(ok.count(v) > 0, "undeclared variable '" + v + "'");
                }
    }
    const std::size_t n = vars.size();
    check_input(equations.size() == n,
                "equation/variable count mismatch: " + std::to_string(equations.size()) +
                    " equations, " + std::to_string(n) + " variables");
    std::map<std::string, std::size_t> var_index;
    for (std::size_t v = 0; v < n; ++v) var_index[vars[v]] = v;

    // merge like terms per row, keep first-appearance order of the points
    std::vector<IntVec> points;
    std::map<IntVec, std::size_t> point_index;
    std::vector<std::map<std::size_t, Rat>> rows(n);
    auto exponent_vector = [&](const RawTerm& t) {
        IntVec a(n, Int(0));
        for (const auto& [v, e] : t.exps) a[var_index.at(v)] = e;
        return a;
    };
    for (std::size_t r = 0; r < n; ++r) {
        for (const auto& t : equations[r]) {
            IntVec a = exponent_vector(t);
            auto [it, fresh] = point_index.emplace(a, points.size());
            if (fresh) points.push_back(a);
            rows[r][it->second] += t.coeff;
        }
    }
    std::vector<std::string> warnings;
    for (std::size_t r = 0; r < n; ++r) {
        bool any = false;
        for (const auto& [j, c] : rows[r])
            if (c != 0) any = true;
        check_input(any, "zero polynomial row " + std::to_string(r + 1));
    }
    // drop points whose every merged coefficient cancelled
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < points.size(); ++j) {
        bool used = false;
        for (std::size_t r = 0; r < n; ++r) {
            auto it = rows[r].find(j);
            if (it != rows[r].end() && it->second != 0) used = true;
        }
        if (used)
            keep.push_back(j);
        else
            warnings.push_back("support point " + std::to_string(j + 1) +
                               " cancelled in every equation and was dropped");
    }
    std::vector<IntVec> kept_points;
    std::map<std::size_t, std::size_t> remap;
    for (auto j : keep) {
        remap[j] = kept_points.size();
        kept_points.push_back(points[j]);
    }
    RatMatrix c(n, kept_points.size());
    for (std::size_t r = 0; r < n; ++r)
        for (const auto& [j, val] : rows[r])
            if (val != 0) c.at(r, remap.at(j)) = val;
    return SparseSystem(std::move(vars), std::move(kept_points), std::move(c),
                        std::move(warnings));
}

// ---------------------------------------------------------------------------
// matrices and audits

SystemMatrices matrices(const SparseSystem& s) {
    SystemMatrices m;
    m.c = s.coeffs();
    const std::size_t n = s.n(), l = s.num_points();
    m.a.assign(n, IntVec(l));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < l; ++j) m.a[r][j] = s.points()[j][r];
    m.a_augmented.assign(n + 1, IntVec(l, Int(1)));
    for (std::size_t r = 0; r < n; ++r) m.a_augmented[r + 1] = m.a[r];
    return m;
}

Int bkk_bound(const SparseSystem& s) {
    MvReport r = mixed_volume(s.newton_polytopes(), MvMethod::all);
    return to_int(r.normalized);
}

RestrictedSystem restricted_system(const SparseSystem& s, const Point& u) {
    check_input(!is_zero(u), "restricted_system: u = 0");
    RestrictedSystem r;
    r.direction = u;
    r.coeffs = RatMatrix(s.n(), s.num_points());
    r.kept.resize(s.n());
    for (std::size_t i = 0; i < s.n(); ++i) {
        const Polytope& p = s.newton_polytopes()[i];
        Rat h = p.support_value(u);
        for (auto j : s.supports()[i]) {
            if (dot(u, to_rational(s.points()[j])) == h) {
                r.coeffs.at(i, j) = s.coeffs().at(i, j);
                r.kept[i].push_back(j);
            }
        }
    }
    return r;
}

namespace {

std::vector<std::size_t> points_on_face(const SparseSystem& s, const Face& f) {
    const Polytope& q = s.system_polytope();
    Rat h = q.support_value(f.normal);
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < s.num_points(); ++j)
        if (dot(f.normal, to_rational(s.points()[j])) == h) ids.push_back(j);
    return ids;
}

RatMatrix abar_columns(const SparseSystem& s, const std::vector<std::size_t>& ids) {
    RatMatrix m(s.n() + 1, ids.size());
    for (std::size_t c = 0; c < ids.size(); ++c) {
        m.at(0, c) = 1;
        for (std::size_t r = 0; r < s.n(); ++r) m.at(r + 1, c) = Rat(s.points()[ids[c]][r]);
    }
    return m;
}

constexpr const char* kBerFailureConclusion =
    "strictly less than n!Vol(Q) isolated solutions or infinitely many";

} // namespace

BerResult ber_check(const SparseSystem& s) {
    const Polytope& q = s.system_polytope();
    check_input(q.dim() == static_cast<int>(s.n()),
                "ber_check requires dim Q = n");
    BerResult result;
    result.pass = true;
    for (const auto& f : q.face_lattice()) {
        if (!f.proper) continue;
        FaceRankReport r;
        r.point_ids = points_on_face(s, f);
        r.dim_f = f.dim;
        r.rank_c = exact_rank(s.coeffs().select_columns(r.point_ids));
        r.rank_abar = exact_rank(abar_columns(s, r.point_ids));
        check_internal(r.rank_abar == r.dim_f + 1,
                       "rank of the augmented exponent columns must be dim F + 1");
        r.pass = r.rank_c >= r.rank_abar;
        if (!r.pass) result.pass = false;
        result.faces.push_back(std::move(r));
    }
    if (!result.pass) result.conclusion = kBerFailureConclusion;
    return result;
}

bool cramer_check(const SparseSystem& s) {
    const Polytope& q = s.system_polytope();
    check_input(q.dim() == static_cast<int>(s.n()),
                "cramer_check requires dim Q = n");
    const std::size_t n = s.n(), l = s.num_points();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        if (exact_det(s.coeffs().select_columns(idx)) == 0) return false;
        std::size_t k = n;
        bool advanced = false;
        while (k-- > 0) {
            if (idx[k] < l - n + k) {
                ++idx[k];
                for (std::size_t j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return true;
    }
}

SimplicialVerdict simplicial_nondegeneracy_check(const SparseSystem& s) {
    const Polytope& q = s.system_polytope();
    check_input(q.dim() == static_cast<int>(s.n()),
                "simplicial check requires dim Q = n");
    for (const auto& p : s.newton_polytopes())
        if (!p.same_vertex_set(q)) return SimplicialVerdict::not_applicable;
    // every proper face must be a simplex meeting the support only at its
    // vertices
    std::map<Point, std::size_t> point_of;
    for (std::size_t j = 0; j < s.num_points(); ++j)
        point_of[to_rational(s.points()[j])] = j;
    for (const auto& f : q.face_lattice()) {
        if (!f.proper) continue;
        if (f.vertex_ids.size() != static_cast<std::size_t>(f.dim) + 1)
            return SimplicialVerdict::not_applicable;
        std::set<std::size_t> vertex_points;
        for (auto vid : f.vertex_ids) {
            auto it = point_of.find(q.vertices()[vid]);
            check_internal(it != point_of.end(), "vertex of Q missing from the support");
            vertex_points.insert(it->second);
        }
        auto on_face = points_on_face(s, f);
        if (std::set<std::size_t>(on_face.begin(), on_face.end()) != vertex_points)
            return SimplicialVerdict::not_applicable;
    }
    return ber_check(s).pass ? SimplicialVerdict::non_degenerate : SimplicialVerdict::fails;
}

SparseSystem left_multiply(const SparseSystem& s, const RatMatrix& l) {
    check_input(l.rows == s.n() && l.cols == s.n(), "left_multiply: L must be n x n");
    check_input(exact_det(l) != 0, "left_multiply: singular L");
    RatMatrix c = l * s.coeffs();
    for (std::size_t i = 0; i < s.n(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < s.num_points(); ++j)
            if (c.at(i, j) != 0) nonzero = true;
        check_input(nonzero,
                    "zero polynomial row " + std::to_string(i + 1) + " after transformation");
    }
    std::vector<std::size_t> keep;
    std::vector<std::size_t> dropped;
    for (std::size_t j = 0; j < s.num_points(); ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < s.n(); ++i)
            if (c.at(i, j) != 0) nonzero = true;
        (nonzero ? keep : dropped).push_back(j);
    }
    std::vector<std::string> warnings = s.warnings();
    if (!dropped.empty()) {
        std::string w = "left multiplication shrank the total support; dropped points:";
        for (auto j : dropped) w += " " + std::to_string(j + 1);
        warnings.push_back(std::move(w));
    }
    std::vector<IntVec> pts;
    for (auto j : keep) pts.push_back(s.points()[j]);
    return SparseSystem(s.vars(), std::move(pts), c.select_columns(keep),
                        std::move(warnings));
}

SparseSystem monomial_transform(const SparseSystem& s, const std::vector<IntVec>& mbar) {
    const std::size_t n = s.n();
    check_input(mbar.size() == n + 1, "monomial_transform: Mbar must be (n+1) x (n+1)");
    for (const auto& row : mbar)
        check_input(row.size() == n + 1, "monomial_transform: Mbar must be (n+1) x (n+1)");
    check_input(mbar[0][0] == 1, "monomial_transform: first row must be (1, 0, ..., 0)");
    for (std::size_t j = 1; j <= n; ++j)
        check_input(mbar[0][j] == 0, "monomial_transform: first row must be (1, 0, ..., 0)");
    Int det = int_det(mbar);
    check_input(det == 1 || det == -1, "monomial_transform: Mbar is not unimodular");
    std::vector<IntVec> pts;
    pts.reserve(s.num_points());
    for (const auto& a : s.points()) {
        IntVec aug(n + 1);
        aug[0] = 1;
        for (std::size_t r = 0; r < n; ++r) aug[r + 1] = a[r];
        IntVec img(n);
        for (std::size_t r = 0; r < n; ++r) {
            Int v = 0;
            for (std::size_t k = 0; k <= n; ++k) v += mbar[r + 1][k] * aug[k];
            img[r] = v;
        }
        pts.push_back(std::move(img));
    }
    return SparseSystem(s.vars(), std::move(pts), s.coeffs(), s.warnings());
}

FailureLinkage failure_linkage(const SparseSystem& s, const FaceRankReport& failing) {
    const std::size_t n = s.n();
    const Polytope& q = s.system_polytope();
    check_input(!failing.pass, "failure_linkage expects a failing face report");
    RatMatrix cf = s.coeffs().select_columns(failing.point_ids);
    auto kernel = left_nullspace(cf);
    check_input(!kernel.empty(), "failure_linkage: the face columns have full row rank");

    FailureLinkage out;
    RankAccumulator acc(n);
    for (const auto& k : kernel) check_internal(acc.add(k), "dependent kernel basis");
    std::vector<Point> completion;
    for (std::size_t i = 0; i < n && completion.size() + kernel.size() < n; ++i) {
        Point e(n, Rat(0));
        e[i] = 1;
        if (acc.add(e)) completion.push_back(std::move(e));
    }
    check_internal(completion.size() + kernel.size() == n, "kernel extension failed");
    std::vector<Point> rows = completion;
    for (std::size_t i = 0; i < kernel.size(); ++i) {
        out.zeroed_rows.push_back(rows.size());
        rows.push_back(kernel[i]);
    }
    out.l = RatMatrix::from_rows(rows);
    check_internal(exact_det(out.l) != 0, "constructed L is singular");

    RatMatrix c = out.l * s.coeffs();
    std::set<std::size_t> on_face(failing.point_ids.begin(), failing.point_ids.end());
    for (auto r : out.zeroed_rows)
        for (auto j : failing.point_ids)
            check_internal(c.at(r, j) == 0, "kernel row fails to vanish on the face");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Point> pts;
        for (std::size_t j = 0; j < s.num_points(); ++j)
            if (c.at(i, j) != 0) pts.push_back(to_rational(s.points()[j]));
        check_input(!pts.empty(),
                    "failure_linkage: an equation vanished entirely (C has deficient rank)");
        out.transformed_newtons.push_back(Polytope::hull(pts));
    }
    // the zeroed equations' polytopes avoid the face entirely
    Face face;
    bool face_found = false;
    for (const auto& f : q.face_lattice()) {
        if (!f.proper) continue;
        if (points_on_face(s, f) == failing.point_ids) {
            face = f;
            face_found = true;
            break;
        }
    }
    check_internal(face_found, "failing face not found in the face lattice");
    int touching = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (touches(out.transformed_newtons[i], q, face)) ++touching;
    for (auto r : out.zeroed_rows)
        check_internal(!touches(out.transformed_newtons[r], q, face),
                       "a zeroed equation still touches the failing face");
    out.face_condition = touching <= face.dim;
    check_internal(out.face_condition,
                   "failing face is touched by more than dim F transformed polytopes");
    out.verdict = strict_monotonicity_equal(out.transformed_newtons, q);
    check_internal(out.verdict.strict,
                   "failure linkage did not produce a strict-monotonicity verdict");
    return out;
}

SystemReport analyze(const SparseSystem& s) {
    SystemReport r;
    r.n = s.n();
    r.num_points = s.num_points();
    const Polytope& q = s.system_polytope();
    check_input(q.dim() == static_cast<int>(s.n()),
                "system analysis requires dim Q = n");
    MvReport mv = mixed_volume(s.newton_polytopes(), MvMethod::all);
    r.bkk = to_int(mv.normalized);
    r.mv_methods = mv.methods;
    r.volume_bound = to_int(normalized_volume(q));
    check_internal(r.bkk <= r.volume_bound, "BKK bound exceeds the volume bound");
    r.attains_volume_bound = r.bkk == r.volume_bound;
    r.ber = ber_check(s);
    r.cramer = cramer_check(s);
    if (r.cramer)
        r.cramer_annotation =
            "no maximal minor of C vanishes: the system has the maximal number " +
            r.volume_bound.str() +
            " = n!Vol(Q) of isolated solutions in the torus, counted with multiplicity";
    r.simplicial = simplicial_nondegeneracy_check(s);
    if (r.simplicial == SimplicialVerdict::non_degenerate)
        r.simplicial_annotation =
            "all proper faces are simplices meeting the support at vertices only and the "
            "rank audit passes: non-degenerate, exactly " +
            r.volume_bound.str() + " = n!Vol(Q) solutions counted with multiplicity";
    return r;
}

} // namespace mixvol
