#pragma once

#include <string>
#include <vector>

#include "mixvol/criteria.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/polytope.hpp"

namespace mixvol {

/// A sparse Laurent polynomial system C x^A = 0: n equations over the
/// ordered, duplicate-free total support a_1,...,a_l. No equation is the
/// zero polynomial and every support point carries a non-zero coefficient
/// somewhere; both are validated at construction.
class SparseSystem {
public:
    SparseSystem(std::vector<std::string> vars, std::vector<IntVec> points,
                 RatMatrix coeffs, std::vector<std::string> warnings = {});

    std::size_t n() const { return vars_.size(); }
    std::size_t num_points() const { return points_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<IntVec>& points() const { return points_; }
    const RatMatrix& coeffs() const { return coeffs_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// A_i: indices of the points carried by equation i.
    const std::vector<std::vector<std::size_t>>& supports() const { return supports_; }
    const std::vector<Polytope>& newton_polytopes() const { return newtons_; }
    const Polytope& system_polytope() const { return q_; }

private:
    std::vector<std::string> vars_;
    std::vector<IntVec> points_;
    RatMatrix coeffs_;
    std::vector<std::string> warnings_;
    std::vector<std::vector<std::size_t>> supports_;
    std::vector<Polytope> newtons_;
    Polytope q_;
};

/// Parses the equation grammar: equations separated by newlines or
/// semicolons, terms `coeff '*' var('^' int)*` with integer or `p/q`
/// coefficients and possibly negative exponents, an optional `= 0`
/// suffix, and an optional leading `vars x y z` declaration (otherwise
/// the alphabet is inferred in order of first appearance). Like terms
/// merge; a coefficient cancelling to zero drops the term (and orphaned
/// points, with a warning).
SparseSystem parse_system_text(const std::string& text);

struct SystemMatrices {
    RatMatrix c;                     // n x l coefficients
    std::vector<IntVec> a;           // n x l exponents, row-major
    std::vector<IntVec> a_augmented; // (n+1) x l with a leading row of ones
};
SystemMatrices matrices(const SparseSystem& s);

/// n! V(P_1,...,P_n), every applicable algorithm cross-checked. An upper
/// bound on the number of isolated torus solutions, never an exact count.
Int bkk_bound(const SparseSystem& s);

/// Coefficients restricted to the faces P_i^u; rows may become zero.
struct RestrictedSystem {
    Point direction;
    RatMatrix coeffs;
    std::vector<std::vector<std::size_t>> kept;  // surviving point ids per row
};
RestrictedSystem restricted_system(const SparseSystem& s, const Point& u);

struct FaceRankReport {
    std::vector<std::size_t> point_ids;  // F: support points on the face
    int dim_f = -1;
    int rank_c = -1;
    int rank_abar = -1;  // always dim_f + 1; asserted
    bool pass = false;   // rank_c >= rank_abar
};

struct BerResult {
    bool pass = false;
    std::vector<FaceRankReport> faces;  // sorted by (dim, vertex ids)
    std::string conclusion;             // set when the check fails
};

/// Rank condition rank C_F >= rank Abar_F over every proper face of Q.
/// Requires dim Q = n.
BerResult ber_check(const SparseSystem& s);

/// True when no n x n minor of C vanishes; then the system attains the
/// full count n! Vol(Q) with multiplicity.
bool cramer_check(const SparseSystem& s);

enum class SimplicialVerdict { non_degenerate, fails, not_applicable };

/// Applicable when P_1 = ... = P_n = Q and every proper face of Q is a
/// simplex meeting the support only at its vertices; then a passing rank
/// audit certifies non-degeneracy.
SimplicialVerdict simplicial_nondegeneracy_check(const SparseSystem& s);

/// C <- L C for invertible L. Columns cancelling to zero are dropped from
/// the support with an explicit warning on the result.
SparseSystem left_multiply(const SparseSystem& s, const RatMatrix& l);

/// Abar <- Mbar Abar for unimodular integer Mbar with first row
/// (1, 0, ..., 0): an affine lattice transform of the support.
SparseSystem monomial_transform(const SparseSystem& s, const std::vector<IntVec>& mbar);

/// For a face failing the rank condition: an invertible L built from the
/// left kernel of C_F zeroes >= (rank deficit) equations on F, so the
/// transformed Newton polytopes miss the face and the strict-monotonicity
/// criterion fires there.
struct FailureLinkage {
    RatMatrix l;
    std::vector<std::size_t> zeroed_rows;
    std::vector<Polytope> transformed_newtons;
    MonotonicityVerdict verdict;  // equal-body criterion against Q
    bool face_condition = false;  // the failing face is touched by <= dim F members
};
FailureLinkage failure_linkage(const SparseSystem& s, const FaceRankReport& failing);

struct SystemReport {
    std::size_t n = 0;
    std::size_t num_points = 0;
    Int bkk = 0;
    Int volume_bound = 0;
    bool attains_volume_bound = false;
    BerResult ber;
    bool cramer = false;
    std::string cramer_annotation;
    SimplicialVerdict simplicial = SimplicialVerdict::not_applicable;
    std::string simplicial_annotation;
    std::vector<MethodResult> mv_methods;
};
SystemReport analyze(const SparseSystem& s);

} // namespace mixvol
