#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mixvol/rational.hpp"

namespace mixvol {

/// Dense rational matrix, row-major.
struct RatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<Point>& rows);
    static RatMatrix from_columns(const std::vector<Point>& cols);

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    bool operator==(const RatMatrix& rhs) const = default;

    Point row(std::size_t r) const;
    Point column(std::size_t c) const;
    RatMatrix select_columns(const std::vector<std::size_t>& idx) const;
};

/// Rank over Q by fraction-free (Bareiss) elimination on a
/// denominator-cleared integer copy.
int exact_rank(const RatMatrix& m);

/// Determinant of a square matrix, exact.
Rat exact_det(const RatMatrix& m);

/// Determinant of a square integer matrix via Bareiss.
Int int_det(std::vector<IntVec> m);

/// Any particular solution of A x = b, or nullopt when inconsistent.
std::optional<Point> solve(const RatMatrix& a, const Point& b);

/// Basis of the right null space { x : A x = 0 }.
std::vector<Point> nullspace(const RatMatrix& a);

/// Basis of { y : y A = 0 }.
std::vector<Point> left_nullspace(const RatMatrix& a);

/// Rank of a set of rational vectors.
int rank_of_vectors(const std::vector<Point>& vs);

/// Incremental rank tracker: feeds vectors one at a time, reports whether
/// each extended the span. Used by greedy basis extraction.
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t dim) : dim_(dim) {}
    /// True iff v was independent of the vectors accepted so far (in which
    /// case it is accepted).
    bool add(Point v);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::size_t dim_;
    std::vector<Point> rows_;          // reduced echelon rows
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

/// Hermite-style reduction of integer rows; returns a basis of the lattice
/// generated by the input rows (row operations are unimodular).
std::vector<IntVec> lattice_row_basis(std::vector<IntVec> rows);

/// Integer w with <u, w> = 1 for primitive u.
IntVec unimodular_complement(const IntVec& u);

/// Basis b_1,...,b_{n-1} of the sublattice u^perp cap Z^n for primitive
/// non-zero u. Appending any w with <u,w> = 1 yields a matrix of
/// determinant +-1; this is asserted.
std::vector<IntVec> sublattice_basis(const IntVec& u);

/// Coordinates of z in the lattice basis B (z must lie in the span); the
/// coordinates of a lattice member are integers.
Point lattice_coordinates(const std::vector<IntVec>& basis, const IntVec& z);

/// Feasibility of { lambda >= 0 : A lambda = b } by exact phase-1 simplex
/// with Bland's rule.
bool linear_feasible_eq(const RatMatrix& a, Point b);

} // namespace mixvol
