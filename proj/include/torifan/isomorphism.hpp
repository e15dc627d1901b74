#pragma once

// Fan isomorphism under GL(d, Z) and a canonical form for deduplication.
//
// Both rest on the same anchor search: a lattice automorphism that maps one
// smooth maximal cone onto another is pinned down completely by where it
// sends the cone's rays, so trying every maximal cone of the target with
// every ordering of its rays enumerates all candidate isomorphisms.

#include "torifan/fan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torifan {

struct FanIso {
    UniMatrix matrix;
    /// matrix * source.rays[i] == target.rays[ray_permutation[i]]
    std::vector<int> ray_permutation;
};

/// An isomorphism from `source` onto `target`, if one exists. Both fans must
/// be smooth and complete.
std::optional<FanIso> find_isomorphism(const Fan& source, const Fan& target);

/// Checks that `iso` maps rays and maximal cones of `source` bijectively
/// onto those of `target`.
bool is_isomorphism(const Fan& source, const Fan& target, const FanIso& iso);

/// Lexicographically least serialization of the fan over all normalizations
/// that send a maximal cone's ordered rays to the standard basis. Equal keys
/// exactly for isomorphic fans.
std::string canonical_key(const Fan& fan);

/// Index of the anchor cone: the maximal cone whose sorted ray vectors are
/// lexicographically least.
std::size_t anchor_cone(const Fan& fan);

} // namespace torifan
