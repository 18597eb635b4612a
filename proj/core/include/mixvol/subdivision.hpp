#pragma once

#include <cstdint>
#include <vector>

#include "mixvol/polytope.hpp"

namespace mixvol {

/// Integer lifting heights with the seed that generated them; the seed
/// reproduces the subdivision exactly.
struct Lifting {
    std::uint64_t seed = 0;
    Int bound = 0;  // heights were drawn from [0, bound]
    std::vector<Int> heights;
};

struct SubdivisionCell {
    std::vector<std::size_t> point_ids;  // sorted ids into the input points
};

struct RegularSubdivision {
    std::vector<SubdivisionCell> cells;
    bool triangulation = false;
    int base_dim = 0;  // affine dimension of the input point set
};

/// Projects the lower faces of the lifted hull { (a, h(a)) } onto the
/// point configuration. Generic heights yield a triangulation; a
/// non-simplex cell marks the lifting as non-generic (caller retries).
RegularSubdivision regular_subdivision(const std::vector<Point>& points,
                                       const std::vector<Int>& heights);

/// One summand tuple sigma_1 + ... + sigma_n of a pure mixed subdivision.
struct MixedCell {
    std::vector<std::vector<Point>> parts;  // each a simplex, part i inside P_i
    bool fully_mixed = false;
    Rat volume = 0;
};

struct MixedSubdivision {
    std::vector<MixedCell> cells;  // the full-dimensional cells
    Lifting lifting;
    Rat total_volume = 0;  // equals Vol(P_1 + ... + P_n); checked
};

/// Pure mixed subdivision of P_1 + ... + P_n through a regular
/// triangulation of the Cayley polytope. Deterministic for a fixed seed;
/// non-generic liftings are retried with fresh heights (the range widens
/// 16x after each block of 32 failures).
MixedSubdivision pure_mixed_subdivision(const std::vector<Polytope>& ps,
                                        std::uint64_t seed);

} // namespace mixvol
