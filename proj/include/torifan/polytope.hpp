#pragma once

// The anticanonical polytope P = { m in M_R : <m, v> >= -1 for every ray v }
// and the anticanonical degree (-K)^d = d! vol(P).

#include "torifan/fan.hpp"

#include <vector>

namespace torifan {

struct AnticanPolytope {
    int dim = 0;
    /// Inner normals; every halfspace is <m, normal> >= -1.
    std::vector<LatticeVector> normals;
    /// Vertices, sorted lexicographically.
    std::vector<RationalVector> vertices;
};

/// Vertex enumeration over d-subsets of constraints. Throws
/// std::domain_error if the polytope is unbounded or if -K is not nef (some
/// maximal cone's vertex m_sigma violates a constraint).
AnticanPolytope anticanonical_polytope(const Fan& fan);

/// d! * volume, by triangulating each facet and coning from the origin.
Rational normalized_volume(const AnticanPolytope& polytope);

/// (-K)^d. Throws std::logic_error if the normalized volume is not integral.
Integer anticanonical_degree(const Fan& fan);

} // namespace torifan
