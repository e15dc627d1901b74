#pragma once

// Simplicial fans in N = Z^d, stored by their rays and maximal cones.

#include "torifan/lattice.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace torifan {

/// A cone of a fan, given by indices into the fan's ray list. Kept sorted.
class Cone {
public:
    Cone() = default;
    explicit Cone(std::vector<int> rays);
    Cone(std::initializer_list<int> rays) : Cone(std::vector<int>(rays)) {}

    std::span<const int> rays() const { return rays_; }
    std::size_t size() const { return rays_.size(); }
    bool empty() const { return rays_.empty(); }
    bool contains(int ray) const;
    /// True iff every ray of `other` is a ray of this cone.
    bool contains(const Cone& other) const;
    /// The cone with `ray` removed.
    Cone without(int ray) const;
    Cone with(int ray) const;

    auto begin() const { return rays_.begin(); }
    auto end() const { return rays_.end(); }
    int operator[](std::size_t i) const { return rays_[i]; }

    auto operator<=>(const Cone&) const = default;

private:
    std::vector<int> rays_;
};

Cone intersection(const Cone& a, const Cone& b);

struct Fan {
    int dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<Cone> max_cones;

    int ray_count() const { return static_cast<int>(rays.size()); }
    /// Picard number of the toric variety when the fan is smooth and complete.
    int picard_number() const { return ray_count() - dim; }
    /// d x |cone| matrix whose columns are the cone's rays.
    IntMatrix generator_matrix(const Cone& cone) const;
    /// d x n matrix of all rays.
    IntMatrix ray_matrix() const;
    /// Index of the ray equal to v, or -1.
    int find_ray(const LatticeVector& v) const;
    /// Bitmask of the cone's rays (fans here have at most 64 rays).
    std::uint64_t mask(const Cone& cone) const;
    /// True iff the rays with indices in `subset` span a cone of the fan.
    bool is_face(const Cone& subset) const;

    friend bool operator==(const Fan& a, const Fan& b);
};

enum class Defect {
    WrongDimension,
    ZeroRay,
    NonPrimitiveRay,
    DuplicateRay,
    UnusedRay,
    ConeIndexOutOfRange,
    RepeatedConeIndex,
    WrongConeSize,
    DuplicateCone,
    NotSimplicial,
    NotSmooth,
    UnmatchedFacet,
    OvermatchedFacet,
    ImproperIntersection,
};

/// Short reason string, e.g. "not complete" for an unmatched facet.
std::string to_string(Defect defect);
bool is_structural(Defect defect);

struct Offense {
    Defect defect;
    std::vector<int> cones;
    std::vector<int> rays;
};

struct ValidationReport {
    bool structurally_sound = true;
    bool is_simplicial = false;
    bool is_smooth = false;
    bool is_complete = false;
    std::vector<Offense> offending;

    bool ok() const { return structurally_sound && is_simplicial && is_smooth && is_complete; }
    /// One line per offense.
    std::vector<std::string> diagnostics() const;
};

/// Structural checks, then smoothness and completeness. Completeness is
/// certified by facet pairing plus pairwise proper intersection, which is
/// exact and sufficient for d <= 3.
ValidationReport validate(const Fan& fan);

/// Throws std::invalid_argument with the first diagnostic unless the fan is
/// smooth and complete.
void require_smooth_complete(const Fan& fan);

enum class Strictness { Boundary, RelativeInterior };

/// Membership of v in the cone spanned by `cone`'s rays: nonnegative
/// (resp. strictly positive) coordinates in the cone's generators.
bool contains(const Fan& fan, const Cone& cone, const LatticeVector& v,
              Strictness strictness);

/// Maximal cones containing the ray.
std::vector<Cone> star(const Fan& fan, int ray);

/// (d-1) x d integer matrix whose kernel is Z*ray: coordinates on N / Z*ray.
IntMatrix quotient_projection(const Fan& fan, int ray);

/// Complete (d-1)-fan of the toric divisor of `ray`: the star projected to
/// N / Z*ray in a basis chosen by Smith normal form.
Fan quotient_fan(const Fan& fan, int ray);

/// The linear map `m` applied to every ray.
Fan transform(const Fan& fan, const IntMatrix& m);

/// Same fan with rays listed in the order of `order` (a permutation of the
/// ray set given as vectors). Throws if the sets differ.
Fan reorder_rays(const Fan& fan, const std::vector<LatticeVector>& order);

/// Complete 2-dimensional fan on the given rays: maximal cones are
/// consecutive rays in counterclockwise order. Ray order is preserved.
Fan complete_fan_2d(std::vector<LatticeVector> rays);

/// Ray indices in counterclockwise order starting from angle 0.
std::vector<int> angular_order(const std::vector<LatticeVector>& rays);

} // namespace torifan
