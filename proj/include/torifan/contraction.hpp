#pragma once

// Crepant (degree-0) extremal contractions of smooth toric 3-folds and the
// weakened Fano predicate.
//
// A (0,2)-type contraction contracts the divisor E of a ray x0 onto a
// rational curve C with (-K . C) = 2. Torically this is the configuration
// (in a suitable basis of N)
//     x0 = (1,0,0), x+ = (1,1,0), x- = (1,-1,0), y+ = (0,0,1), y- = (0,a,-1)
// with maximal cones <x0,x+-,y+->, 0 <= a <= 2, and then E is F_a.
// A weak Fano, non-Fano 3-fold is weakened Fano exactly when every crepant
// extremal contraction has this form.

#include "torifan/primitive.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace torifan {

struct ZeroTwo {
    int a = 0;
    int exceptional_ray = -1;
};
struct DivisorToPoint {};
struct Small {};
struct Other {};

using ContractionKind = std::variant<ZeroTwo, DivisorToPoint, Small, Other>;

std::string to_string(const ContractionKind& kind);

struct CrepantContraction {
    PrimitiveRelation relation;
    ContractionKind kind;
};

struct WeakenedVerdict {
    bool is_weak_fano = false;
    bool is_fano = false;
    std::vector<CrepantContraction> crepant_contractions;
    bool is_weakened = false;
};

/// Kind of the contraction of an extremal degree-0 relation on a weak Fano
/// 3-fold. Throws std::invalid_argument if d != 3, the degree is nonzero,
/// or the relation is not extremal.
ContractionKind classify_contraction(const Fan& fan, std::span<const PrimitiveRelation> all,
                                     const PrimitiveRelation& relation);
ContractionKind classify_contraction(const Fan& fan, const PrimitiveRelation& relation);

/// Weak Fano, not Fano, and every crepant extremal contraction is (0,2)-type.
/// Throws std::invalid_argument unless d == 3.
WeakenedVerdict is_weakened_fano(const Fan& fan);

/// a >= 0 when the 2-fan is isomorphic to the Hirzebruch surface F_a.
std::optional<int> hirzebruch_type(const Fan& fan);

/// Basis change carrying a detected (0,2)-type configuration to the normal
/// form above, with the participating ray indices.
struct ZeroTwoWitness {
    UniMatrix basis_change;
    int x0 = -1;
    int x_plus = -1;
    int x_minus = -1;
    int y_plus = -1;
    int y_minus = -1;
    int a = 0;
};

std::optional<ZeroTwoWitness> zero_two_witness(const Fan& fan, const PrimitiveRelation& relation);

/// Transforms the fan by the witness and checks the four normal-form cones.
bool matches_normal_form(const Fan& fan, const ZeroTwoWitness& witness);

} // namespace torifan
