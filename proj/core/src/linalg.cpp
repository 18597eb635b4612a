#include "mixvol/linalg.hpp"

#include <algorithm>
#include <map>

namespace mixvol {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Point>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_internal(rows[r].size() == m.cols, "from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Point>& cols) {
    return from_rows(cols).transposed();
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix m(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(c, r) = at(r, c);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    check_internal(cols == rhs.rows, "matrix product shape mismatch");
    RatMatrix m(rows, rhs.cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < cols; ++k) {
            if (at(r, k) == 0) continue;
            for (std::size_t c = 0; c < rhs.cols; ++c)
                m.at(r, c) += at(r, k) * rhs.at(k, c);
        }
    return m;
}

Point RatMatrix::row(std::size_t r) const {
    Point v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Point RatMatrix::column(std::size_t c) const {
    Point v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

RatMatrix RatMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    RatMatrix m(rows, idx.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) m.at(r, c) = at(r, idx[c]);
    return m;
}

namespace {

// Division known to be exact by Sylvester's identity; checked loudly.
Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    divide_qr(a, b, q, r);
    check_internal(r == 0, "fraction-free elimination: inexact division");
    return q;
}

// Clears denominators row by row; row scaling preserves rank.
std::vector<IntVec> integerized_rows(const RatMatrix& m) {
    std::vector<IntVec> rows(m.rows, IntVec(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r) {
        Int l = 1;
        for (std::size_t c = 0; c < m.cols; ++c) l = lcm(l, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < m.cols; ++c)
            rows[r][c] = numerator(m.at(r, c) * Rat(l));
    }
    return rows;
}

// Fraction-free elimination; returns the pivot count. The exact divisions
// are guaranteed by Sylvester's identity.
int bareiss_rank(std::vector<IntVec>& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int exact_rank(const RatMatrix& m) {
    auto rows = integerized_rows(m);
    return bareiss_rank(rows);
}

Int int_det(std::vector<IntVec> m) {
    const std::size_t n = m.size();
    for (const auto& r : m) check_internal(r.size() == n, "int_det: not square");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[c][c] - m[i][c] * m[c][j], prev);
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Rat exact_det(const RatMatrix& m) {
    check_internal(m.rows == m.cols, "exact_det: not square");
    if (m.rows == 0) return 1;
    Rat scale = 1;
    std::vector<IntVec> rows(m.rows, IntVec(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r) {
        Int l = 1;
        for (std::size_t c = 0; c < m.cols; ++c) l = lcm(l, denominator(m.at(r, c)));
        scale *= Rat(l);
        for (std::size_t c = 0; c < m.cols; ++c)
            rows[r][c] = numerator(m.at(r, c) * Rat(l));
    }
    return Rat(int_det(std::move(rows))) / scale;
}

namespace {

// Gauss-Jordan on [A | rhs...]; returns reduced rows and pivot columns.
struct Echelon {
    std::vector<Point> rows;
    std::vector<std::size_t> pivots;
};

Echelon gauss_jordan(RatMatrix m) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rat p = m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) /= p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rows.resize(r);
    for (std::size_t i = 0; i < r; ++i) e.rows[i] = m.row(i);
    return e;
}

} // namespace

std::optional<Point> solve(const RatMatrix& a, const Point& b) {
    check_internal(b.size() == a.rows, "solve: rhs length mismatch");
    RatMatrix aug(a.rows, a.cols + 1);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    Echelon e = gauss_jordan(std::move(aug));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        if (e.pivots[i] == a.cols) return std::nullopt;  // 0 = 1 row
    Point x(a.cols, Rat(0));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rows[i][a.cols];
    return x;
}

std::vector<Point> nullspace(const RatMatrix& a) {
    Echelon e = gauss_jordan(a);
    std::vector<bool> is_pivot(a.cols, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Point> basis;
    for (std::size_t f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) continue;
        Point v(a.cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Point> left_nullspace(const RatMatrix& a) { return nullspace(a.transposed()); }

int rank_of_vectors(const std::vector<Point>& vs) {
    if (vs.empty()) return 0;
    return exact_rank(RatMatrix::from_rows(vs));
}

bool RankAccumulator::add(Point v) {
    check_internal(v.size() == dim_, "RankAccumulator: dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = v[pivots_[i]];
        if (f == 0) continue;
        Rat factor = f;  // rows are normalized to pivot 1
        for (std::size_t j = 0; j < dim_; ++j) v[j] -= factor * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Rat piv = v[p];
    for (auto& x : v) x /= piv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    // keep rows sorted by pivot for the reduction loop above
    for (std::size_t i = rows_.size(); i-- > 1;) {
        if (pivots_[i] < pivots_[i - 1]) {
            std::swap(pivots_[i], pivots_[i - 1]);
            std::swap(rows_[i], rows_[i - 1]);
        } else {
            break;
        }
    }
    return true;
}

std::vector<IntVec> lattice_row_basis(std::vector<IntVec> rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // gcd-eliminate column c among rows r..end
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;  // column all zero
            std::swap(rows[r], rows[best]);
            bool reduced_all = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];  // truncated division is fine here
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (auto& x : rows[r]) x = -x;
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

IntVec unimodular_complement(const IntVec& u) {
    check_input(is_primitive(u), "unimodular_complement: u must be primitive");
    const std::size_t n = u.size();
    // extended gcd over the components: maintain g = <u, w>
    Int g = 0;
    IntVec w(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        if (g == 0) {
            // w := sign(u_i) e_i gives g = |u_i|
            w.assign(n, Int(0));
            w[i] = u[i] > 0 ? 1 : -1;
            g = abs(u[i]);
            continue;
        }
        // g' = gcd(g, u_i) = x g + y u_i
        Int old_r = g, r = u[i];
        Int old_x = 1, x = 0;
        while (r != 0) {
            Int q = old_r / r;
            Int t = old_r - q * r;
            old_r = r; r = t;
            t = old_x - q * x;
            old_x = x; x = t;
        }
        if (old_r < 0) { old_r = -old_r; old_x = -old_x; }
        Int y = (old_r - old_x * g) / u[i];
        for (auto& c : w) c *= old_x;
        w[i] += y;
        g = old_r;
        if (g == 1) break;
    }
    check_internal(g == 1, "unimodular_complement: gcd is not 1");
    return w;
}

std::vector<IntVec> sublattice_basis(const IntVec& u) {
    check_input(!u.empty(), "sublattice_basis: empty vector");
    check_input(is_primitive(u), "sublattice_basis: u must be primitive and non-zero");
    const std::size_t n = u.size();
    if (n == 1) return {};
    IntVec w = unimodular_complement(u);
    // pi_i = e_i - u_i w spans u^perp cap Z^n
    std::vector<IntVec> gens(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) {
        gens[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) gens[i][j] -= u[i] * w[j];
    }
    auto basis = lattice_row_basis(std::move(gens));
    check_internal(basis.size() == n - 1, "sublattice_basis: wrong rank");
    for (const auto& b : basis) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) s += u[j] * b[j];
        check_internal(s == 0, "sublattice_basis: vector not orthogonal to u");
    }
    std::vector<IntVec> full = basis;
    full.push_back(w);
    Int d = int_det(full);
    check_internal(d == 1 || d == -1, "sublattice_basis: extension is not unimodular");
    return basis;
}

Point lattice_coordinates(const std::vector<IntVec>& basis, const IntVec& z) {
    check_internal(!basis.empty(), "lattice_coordinates: empty basis");
    const std::size_t n = basis[0].size();
    RatMatrix m(n, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) = Rat(basis[c][r]);
    Point rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = Rat(z[r]);
    auto x = solve(m, rhs);
    check_internal(x.has_value(), "lattice_coordinates: vector outside span");
    return *x;
}

bool linear_feasible_eq(const RatMatrix& a, Point b) {
    const std::size_t m = a.rows, n = a.cols;
    check_internal(b.size() == m, "linear_feasible_eq: rhs mismatch");
    // phase-1 tableau: [A | I | b], minimize the sum of artificials
    RatMatrix t(m, n + m + 1);
    for (std::size_t r = 0; r < m; ++r) {
        int s = b[r] < 0 ? -1 : 1;
        for (std::size_t c = 0; c < n; ++c) t.at(r, c) = s * a.at(r, c);
        t.at(r, n + r) = 1;
        t.at(r, n + m) = s * b[r];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
    // reduced cost row for objective sum of artificials
    Point cost(n + m + 1, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c <= n + m; ++c) cost[c] -= t.at(r, c);
    for (std::size_t r = 0; r < m; ++r) cost[n + r] += 1;  // basic artificials cost 1
    while (true) {
        std::size_t enter = n + m;
        for (std::size_t c = 0; c < n + m; ++c) {  // Bland: lowest index
            if (cost[c] < 0) { enter = c; break; }
        }
        if (enter == n + m) break;
        std::size_t leave = m;
        Rat best_ratio = 0;
        for (std::size_t r = 0; r < m; ++r) {
            if (t.at(r, enter) <= 0) continue;
            Rat ratio = t.at(r, n + m) / t.at(r, enter);
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        check_internal(leave != m, "phase-1 simplex: unbounded objective");
        Rat p = t.at(leave, enter);
        for (std::size_t c = 0; c <= n + m; ++c) t.at(leave, c) /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || t.at(r, enter) == 0) continue;
            Rat f = t.at(r, enter);
            for (std::size_t c = 0; c <= n + m; ++c) t.at(r, c) -= f * t.at(leave, c);
        }
        Rat fc = cost[enter];
        for (std::size_t c = 0; c <= n + m; ++c) cost[c] -= fc * t.at(leave, c);
        basis[leave] = enter;
    }
    // feasible iff the optimal artificial total is zero
    return -cost[n + m] == 0;
}

} // namespace mixvol
