#pragma once

// Primitive collections and primitive relations of smooth complete fans.
//
// A primitive collection P = {x_1, ..., x_m} is a minimal set of rays that
// does not span a cone. Its element sum lies in the relative interior of a
// unique cone sigma(P) = <y_1, ..., y_n>, giving the primitive relation
//     x_1 + ... + x_m = a_1 y_1 + ... + a_n y_n     (a_j positive integers)
// and deg P = m - (a_1 + ... + a_n), the anticanonical degree of r(P).

#include "torifan/fan.hpp"

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace torifan {

struct PrimitiveRelation {
    Cone collection;
    Cone sigma;
    /// Positive coefficients, aligned with `sigma`'s sorted rays.
    std::vector<Integer> coeffs;
    std::int64_t degree = 0;
    /// Class r(P) in the relation lattice: +1 on the collection, -a_j on
    /// sigma's rays. Its length is the fan's ray count.
    LatticeVector cls;

    /// a_j for a ray of sigma(P), 0 for any other ray.
    Integer coefficient(int ray) const;
};

/// Kernel of the ray matrix, i.e. relations among the rays. For smooth
/// complete fans this is A_1(X) and its rank is the Picard number.
struct RelationLattice {
    int rank = 0;
    IntMatrix basis;
};

RelationLattice relation_lattice(const Fan& fan);

/// Every primitive collection with its relation, ordered lexicographically
/// by collection. The fan must be smooth and complete (not re-checked).
std::vector<PrimitiveRelation> primitive_collections(const Fan& fan);

bool is_fano(std::span<const PrimitiveRelation> relations);
bool is_weak_fano(std::span<const PrimitiveRelation> relations);
bool is_fano(const Fan& fan);
bool is_weak_fano(const Fan& fan);

/// Shapes of a two-element primitive relation on a weak Fano fan.
struct ZeroSum {};
struct SingleRay {
    int ray = -1;
    Integer multiplicity;  // 1 or 2
};
struct TwoRays {
    int first = -1;
    int second = -1;
};
using TwoElementKind = std::variant<ZeroSum, SingleRay, TwoRays>;

/// x1 + x2 = 0, x1 + x2 = a y (a in {1, 2}) or x1 + x2 = y1 + y2. Throws
/// std::invalid_argument for collections of another size and
/// std::domain_error for relations outside the trichotomy (which happens
/// only when the fan is not weak Fano).
TwoElementKind two_element_relation_kind(const PrimitiveRelation& relation);

/// True iff r(P) spans an extremal ray of the cone generated by all
/// primitive relation classes; decided by exact LP.
bool is_extremal(const Fan& fan, std::span<const PrimitiveRelation> all,
                 const PrimitiveRelation& relation);
bool is_extremal(const Fan& fan, const PrimitiveRelation& relation);

/// Indices into `all` of the extremal relations.
std::vector<std::size_t> extremal_relations(const Fan& fan,
                                            std::span<const PrimitiveRelation> all);

/// Checks sum(collection) == sum(a_j y_j) in N exactly.
bool relation_holds(const Fan& fan, const PrimitiveRelation& relation);

} // namespace torifan
