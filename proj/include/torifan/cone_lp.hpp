#pragma once

// Exact feasibility for { x >= 0 : A x = b } over the rationals.
//
// Phase-one simplex with Bland's rule, so it always terminates, and every
// pivot is carried out in exact rational arithmetic.

#include "torifan/lattice.hpp"

#include <optional>

namespace torifan {

/// A nonnegative solution of a x = b, if one exists.
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a,
                                                        const RationalVector& b);

inline bool has_nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
    return find_nonnegative_solution(a, b).has_value();
}

/// True iff v is a nonnegative rational combination of the columns.
bool in_cone(const IntMatrix& generators, const LatticeVector& v);

} // namespace torifan
