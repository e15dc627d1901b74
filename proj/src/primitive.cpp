#include "torifan/primitive.hpp"

#include "torifan/cone_lp.hpp"

#include <algorithm>
#include <unordered_set>

namespace torifan {

Integer PrimitiveRelation::coefficient(int ray) const {
    for (std::size_t j = 0; j < sigma.size(); ++j)
        if (sigma[j] == ray)
            return coeffs[j];
    return Integer(0);
}

RelationLattice relation_lattice(const Fan& fan) {
    RelationLattice out;
    out.basis = integer_kernel(fan.ray_matrix());
    out.rank = static_cast<int>(out.basis.cols());
    return out;
}

namespace {

std::vector<Cone> combinations(int n, int k) {
    std::vector<Cone> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    if (k > n)
        return out;
    for (;;) {
        out.emplace_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Cone of the fan whose relative interior contains v.
Cone carrier_cone(const Fan& fan, const LatticeVector& v) {
    for (const Cone& c : fan.max_cones) {
        IntMatrix b = fan.generator_matrix(c);
        IntMatrix dual = adjugate(b);
        if (determinant(b) < 0)
            dual = -dual;
        LatticeVector coords = dual * v;
        bool inside = true;
        for (Index i = 0; i < coords.size() && inside; ++i)
            inside = coords(i) >= 0;
        if (!inside)
            continue;
        std::vector<int> support;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (coords(static_cast<Index>(i)) > 0)
                support.push_back(c[i]);
        return Cone(std::move(support));
    }
    throw std::invalid_argument("primitive relation has no carrier cone; fan is not complete");
}

} // namespace

std::vector<PrimitiveRelation> primitive_collections(const Fan& fan) {
    const int n = fan.ray_count();
    const int d = fan.dim;
    if (n > 64)
        throw std::invalid_argument("primitive_collections: more than 64 rays");

    std::unordered_set<std::uint64_t> faces;
    for (const Cone& c : fan.max_cones) {
        if (c.size() != static_cast<std::size_t>(d))
            throw std::invalid_argument("primitive_collections: fan is not simplicial");
        const std::uint64_t m = fan.mask(c);
        // Every subset of a maximal cone is a face.
        for (std::uint64_t s = m;; s = (s - 1) & m) {
            faces.insert(s);
            if (s == 0)
                break;
        }
    }

    // A primitive collection minus one element is a face, and faces have at
    // most d rays, so |P| <= d + 1.
    std::vector<PrimitiveRelation> out;
    for (int k = 2; k <= d + 1; ++k) {
        for (const Cone& subset : combinations(n, k)) {
            const std::uint64_t m = fan.mask(subset);
            if (faces.count(m))
                continue;
            bool minimal = true;
            for (int r : subset)
                if (!faces.count(m & ~(std::uint64_t{1} << r))) {
                    minimal = false;
                    break;
                }
            if (!minimal)
                continue;

            LatticeVector sum = LatticeVector::Zero(d);
            for (int r : subset)
                sum += fan.rays[static_cast<std::size_t>(r)];

            PrimitiveRelation rel;
            rel.collection = subset;
            rel.sigma = carrier_cone(fan, sum);
            if (!rel.sigma.empty()) {
                auto coeffs = solve_nonneg_integer(fan.generator_matrix(rel.sigma), sum);
                if (!coeffs)
                    throw std::invalid_argument(
                        "primitive relation has non-integral coefficients; fan is not smooth");
                for (Index i = 0; i < coeffs->size(); ++i)
                    rel.coeffs.push_back((*coeffs)(i));
            }
            Integer total = 0;
            for (const Integer& a : rel.coeffs)
                total += a;
            rel.degree = static_cast<std::int64_t>(k) - total.convert_to<std::int64_t>();

            rel.cls = LatticeVector::Zero(n);
            for (int r : subset)
                rel.cls(r) += 1;
            for (std::size_t j = 0; j < rel.sigma.size(); ++j)
                rel.cls(rel.sigma[j]) -= rel.coeffs[j];
            out.push_back(std::move(rel));
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimitiveRelation& a, const PrimitiveRelation& b) {
        return a.collection < b.collection;
    });
    return out;
}

bool is_fano(std::span<const PrimitiveRelation> relations) {
    return std::all_of(relations.begin(), relations.end(),
                       [](const PrimitiveRelation& r) { return r.degree > 0; });
}

bool is_weak_fano(std::span<const PrimitiveRelation> relations) {
    return std::all_of(relations.begin(), relations.end(),
                       [](const PrimitiveRelation& r) { return r.degree >= 0; });
}

bool is_fano(const Fan& fan) { return is_fano(primitive_collections(fan)); }
bool is_weak_fano(const Fan& fan) { return is_weak_fano(primitive_collections(fan)); }

TwoElementKind two_element_relation_kind(const PrimitiveRelation& relation) {
    if (relation.collection.size() != 2)
        throw std::invalid_argument("two_element_relation_kind: collection has " +
                                    std::to_string(relation.collection.size()) + " elements");
    if (relation.sigma.empty())
        return ZeroSum{};
    if (relation.sigma.size() == 1 && (relation.coeffs[0] == 1 || relation.coeffs[0] == 2))
        return SingleRay{relation.sigma[0], relation.coeffs[0]};
    if (relation.sigma.size() == 2 && relation.coeffs[0] == 1 && relation.coeffs[1] == 1)
        return TwoRays{relation.sigma[0], relation.sigma[1]};
    throw std::domain_error("two-element primitive relation of negative degree; fan is not weak Fano");
}

namespace {

// Coordinates of relation classes on the rays outside one maximal cone.
// Those rays' coefficients determine a relation uniquely because the cone's
// rays form a basis of N.
IntMatrix projected_classes(const Fan& fan, std::span<const PrimitiveRelation> rels) {
    const Cone& base = fan.max_cones.front();
    std::vector<int> rows;
    for (int i = 0; i < fan.ray_count(); ++i)
        if (!base.contains(i))
            rows.push_back(i);
    IntMatrix out(static_cast<Index>(rows.size()), static_cast<Index>(rels.size()));
    for (std::size_t j = 0; j < rels.size(); ++j)
        for (std::size_t i = 0; i < rows.size(); ++i)
            out(static_cast<Index>(i), static_cast<Index>(j)) = rels[j].cls(rows[i]);
    return out;
}

bool positive_multiple(const LatticeVector& v, const LatticeVector& of) {
    Index pivot = 0;
    while (pivot < of.size() && of(pivot) == 0)
        ++pivot;
    if (pivot == of.size())
        return false;
    // v = t * of with t = v(pivot) / of(pivot) > 0
    if (v(pivot) == 0 || (v(pivot) > 0) != (of(pivot) > 0))
        return false;
    for (Index i = 0; i < of.size(); ++i)
        if (v(i) * of(pivot) != of(i) * v(pivot))
            return false;
    return true;
}

bool extremal_among(const IntMatrix& classes, Index self) {
    const LatticeVector target = classes.col(self);
    std::vector<LatticeVector> others;
    for (Index j = 0; j < classes.cols(); ++j) {
        if (j == self)
            continue;
        LatticeVector c = classes.col(j);
        if (positive_multiple(c, target))
            continue;
        if (std::any_of(others.begin(), others.end(),
                        [&](const LatticeVector& o) { return equal(o, c); }))
            continue;
        others.push_back(std::move(c));
    }
    if (others.empty())
        return true;
    const IntMatrix a = from_columns(others, classes.rows());
    return !in_cone(a, target);
}

} // namespace

bool is_extremal(const Fan& fan, std::span<const PrimitiveRelation> all,
                 const PrimitiveRelation& relation) {
    std::vector<PrimitiveRelation> rels(all.begin(), all.end());
    Index self = -1;
    for (std::size_t j = 0; j < rels.size(); ++j)
        if (rels[j].collection == relation.collection)
            self = static_cast<Index>(j);
    if (self < 0) {
        self = static_cast<Index>(rels.size());
        rels.push_back(relation);
    }
    return extremal_among(projected_classes(fan, rels), self);
}

bool is_extremal(const Fan& fan, const PrimitiveRelation& relation) {
    return is_extremal(fan, primitive_collections(fan), relation);
}

std::vector<std::size_t> extremal_relations(const Fan& fan,
                                            std::span<const PrimitiveRelation> all) {
    const IntMatrix classes = projected_classes(fan, all);
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < all.size(); ++j)
        if (extremal_among(classes, static_cast<Index>(j)))
            out.push_back(j);
    return out;
}

bool relation_holds(const Fan& fan, const PrimitiveRelation& relation) {
    LatticeVector lhs = LatticeVector::Zero(fan.dim);
    LatticeVector rhs = LatticeVector::Zero(fan.dim);
    for (int r : relation.collection)
        lhs += fan.rays[static_cast<std::size_t>(r)];
    for (std::size_t j = 0; j < relation.sigma.size(); ++j)
        rhs += relation.coeffs[j] * fan.rays[static_cast<std::size_t>(relation.sigma[j])];
    return equal(lhs, rhs);
}

} // namespace torifan
