#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixvol/polytope.hpp"
#include "mixvol/subdivision.hpp"

namespace mixvol {

/// Inclusion-exclusion polarization of the volume:
/// V = (1/n!) sum_m (-1)^{n+m} sum_{i_1<...<i_m} Vol(K_{i_1}+...+K_{i_m}).
Rat mixed_volume_polarization(const std::vector<Polytope>& ks);

/// (1/n!) times the total Euclidean volume of the fully mixed cells of a
/// pure mixed subdivision.
Rat mixed_volume_subdivision(const std::vector<Polytope>& ps, std::uint64_t seed = 0);

/// n! V(P_1,...,P_n) for lattice polytopes by the recursive support-sum
/// over primitive facet normals of P_2+...+P_n, with faces flattened to
/// Z^{n-1} through a sublattice basis. The result is checked invariant
/// under translating P_1.
Int mixed_volume_inductive(const std::vector<Polytope>& ps);

enum class MvMethod { polarization, subdivision, inductive, all };

struct MethodResult {
    std::string name;
    bool ran = false;
    std::string skip_reason;
    Rat value = 0;  // the mixed volume V (not normalized)
    long long microseconds = 0;
};

struct MvReport {
    Rat value = 0;       // V(K_1,...,K_n)
    Rat normalized = 0;  // n! V
    std::vector<MethodResult> methods;
    bool lattice = false;
};

/// Runs the requested algorithm(s); with MvMethod::all every applicable
/// algorithm runs and any disagreement throws CrossCheckError.
MvReport mixed_volume(const std::vector<Polytope>& ps,
                      MvMethod method = MvMethod::all, std::uint64_t seed = 0);

} // namespace mixvol
