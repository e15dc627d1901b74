#include "torifan/contraction.hpp"

#include "torifan/cone_lp.hpp"

#include <algorithm>

namespace torifan {

std::string to_string(const ContractionKind& kind) {
    struct Visitor {
        std::string operator()(const ZeroTwo& z) const {
            return "ZeroTwo(a=" + std::to_string(z.a) + ")";
        }
        std::string operator()(const DivisorToPoint&) const { return "DivisorToPoint"; }
        std::string operator()(const Small&) const { return "Small"; }
        std::string operator()(const Other&) const { return "Other"; }
    };
    return std::visit(Visitor{}, kind);
}

namespace {

const LatticeVector& ray_of(const Fan& fan, int i) {
    return fan.rays[static_cast<std::size_t>(i)];
}

// Rays involved in a candidate x+ + x- = 2 x0 configuration.
struct Configuration {
    int x0, x_plus, x_minus;
    int y1, y2;
    int a;
};

// The intrinsic test: the star of x0 is exactly four cones pairing each of
// x+- with each of y1, y2; the divisor of x0 is F_a with a <= 2; and the
// contracted curve's image has anticanonical degree 2.
std::optional<Configuration> detect_zero_two(const Fan& fan, const PrimitiveRelation& rel) {
    if (rel.collection.size() != 2 || rel.sigma.size() != 1 || rel.coeffs[0] != 2)
        return std::nullopt;
    const int x0 = rel.sigma[0];
    const int xp = rel.collection[0];
    const int xm = rel.collection[1];

    const std::vector<Cone> cones = star(fan, x0);
    std::vector<int> others;
    for (const Cone& c : cones) {
        if (c.contains(xp) == c.contains(xm))
            return std::nullopt;
        for (int r : c)
            if (r != x0 && r != xp && r != xm &&
                std::find(others.begin(), others.end(), r) == others.end())
                others.push_back(r);
    }
    if (cones.size() != 4 || others.size() != 2)
        return std::nullopt;
    std::sort(others.begin(), others.end());
    const int y1 = others[0];
    const int y2 = others[1];
    for (int x : {xp, xm})
        for (int y : {y1, y2})
            if (std::find(cones.begin(), cones.end(), Cone{x0, x, y}) == cones.end())
                return std::nullopt;

    const Fan divisor = quotient_fan(fan, x0);
    if (divisor.ray_count() != 4)
        return std::nullopt;
    const IntMatrix proj = quotient_projection(fan, x0);
    const LatticeVector u = primitive_part(proj * ray_of(fan, xp));
    const LatticeVector v = proj * (ray_of(fan, y1) + ray_of(fan, y2));
    // v = c * u for an integer c, read off on a nonzero coordinate of u.
    Index k = 0;
    while (u(k) == 0)
        ++k;
    if (v(k) % u(k) != 0)
        return std::nullopt;
    const Integer c = v(k) / u(k);
    if (!equal(v, LatticeVector(c * u)))
        return std::nullopt;
    const int a = abs(c).convert_to<int>();
    const std::optional<int> hirzebruch = hirzebruch_type(divisor);
    if (a > 2 || !hirzebruch || *hirzebruch != a)
        return std::nullopt;

    // Wall relation across <x0, x>: y1 + y2 = c0 x0 + c1 x. The curve of
    // that wall meets -K in 2 - (c0 + c1), which must equal 2.
    for (int x : {xp, xm}) {
        IntMatrix wall(fan.dim, 2);
        wall.col(0) = ray_of(fan, x0);
        wall.col(1) = ray_of(fan, x);
        auto coords = solve_rational(wall.cast<Rational>(),
                                     (ray_of(fan, y1) + ray_of(fan, y2)).cast<Rational>());
        if (!coords || (*coords)(0) + (*coords)(1) != 0)
            return std::nullopt;
    }
    return Configuration{x0, xp, xm, y1, y2, a};
}

bool inside_two_cone(const Fan& fan, int x1, int x2, int y) {
    IntMatrix gens(fan.dim, 2);
    gens.col(0) = ray_of(fan, x1);
    gens.col(1) = ray_of(fan, x2);
    return in_cone(gens, ray_of(fan, y));
}

} // namespace

ContractionKind classify_contraction(const Fan& fan, std::span<const PrimitiveRelation> all,
                                     const PrimitiveRelation& relation) {
    if (fan.dim != 3)
        throw std::invalid_argument("classify_contraction: only 3-folds are supported");
    if (relation.degree != 0)
        throw std::invalid_argument("classify_contraction: relation is not crepant (degree " +
                                    std::to_string(relation.degree) + ")");
    if (!is_extremal(fan, all, relation))
        throw std::invalid_argument("classify_contraction: relation is not extremal");

    const std::size_t m = relation.collection.size();
    if (m == 2 && relation.sigma.size() == 1 && relation.coeffs[0] == 2) {
        if (auto config = detect_zero_two(fan, relation))
            return ZeroTwo{config->a, config->x0};
        return Other{};
    }
    if (m == 3 && relation.sigma.size() == 1)
        return DivisorToPoint{};
    if (m == 2 && relation.sigma.size() == 2 && relation.coeffs[0] == 1 &&
        relation.coeffs[1] == 1) {
        const int x1 = relation.collection[0];
        const int x2 = relation.collection[1];
        const bool contained = inside_two_cone(fan, x1, x2, relation.sigma[0]) &&
                               inside_two_cone(fan, x1, x2, relation.sigma[1]);
        return contained ? ContractionKind{Other{}} : ContractionKind{Small{}};
    }
    return Other{};
}

ContractionKind classify_contraction(const Fan& fan, const PrimitiveRelation& relation) {
    return classify_contraction(fan, primitive_collections(fan), relation);
}

WeakenedVerdict is_weakened_fano(const Fan& fan) {
    if (fan.dim != 3)
        throw std::invalid_argument("is_weakened_fano: the criterion applies to 3-folds only");
    const std::vector<PrimitiveRelation> rels = primitive_collections(fan);
    WeakenedVerdict verdict;
    verdict.is_weak_fano = is_weak_fano(rels);
    verdict.is_fano = is_fano(rels);
    if (!verdict.is_weak_fano)
        return verdict;
    for (const PrimitiveRelation& r : rels) {
        if (r.degree != 0 || !is_extremal(fan, rels, r))
            continue;
        verdict.crepant_contractions.push_back({r, classify_contraction(fan, rels, r)});
    }
    verdict.is_weakened =
        !verdict.is_fano &&
        std::all_of(verdict.crepant_contractions.begin(), verdict.crepant_contractions.end(),
                    [](const CrepantContraction& c) {
                        return std::holds_alternative<ZeroTwo>(c.kind);
                    });
    return verdict;
}

std::optional<int> hirzebruch_type(const Fan& fan) {
    if (fan.dim != 2 || fan.ray_count() != 4)
        return std::nullopt;
    std::optional<int> best;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!equal(LatticeVector(ray_of(fan, i) + ray_of(fan, j)), LatticeVector::Zero(2)))
                continue;
            if (fan.is_face(Cone{i, j}))
                continue;
            std::vector<int> rest;
            for (int k = 0; k < 4; ++k)
                if (k != i && k != j)
                    rest.push_back(k);
            if (fan.is_face(Cone{rest[0], rest[1]}))
                continue;
            const LatticeVector& u = ray_of(fan, i);
            const LatticeVector s = ray_of(fan, rest[0]) + ray_of(fan, rest[1]);
            // s must be c * u; u is primitive so c = <s, u'> for the dual
            // pairing with any w where det(u, w) = 1.
            if (u(0) * s(1) - u(1) * s(0) != 0)
                continue;
            IntMatrix basis(2, 2);
            basis.col(0) = u;
            basis.col(1) = ray_of(fan, rest[0]);
            const Integer det = determinant(basis);
            if (det != 1 && det != -1)
                continue;
            const Integer c = (u(0) != 0) ? Integer(s(0) / u(0)) : Integer(s(1) / u(1));
            const int a = abs(c).convert_to<int>();
            if (!best || a < *best)
                best = a;
        }
    }
    return best;
}

std::optional<ZeroTwoWitness> zero_two_witness(const Fan& fan, const PrimitiveRelation& relation) {
    if (fan.dim != 3)
        return std::nullopt;
    const auto config = detect_zero_two(fan, relation);
    if (!config)
        return std::nullopt;

    IntMatrix target(3, 3);
    target << 1, 1, 0,
              0, 1, 0,
              0, 0, 1;
    const LatticeVector want_minus = lattice_vector({1, -1, 0});
    for (auto [xp, xm] : {std::pair{config->x_plus, config->x_minus},
                          std::pair{config->x_minus, config->x_plus}}) {
        for (auto [yp, ym] :
             {std::pair{config->y1, config->y2}, std::pair{config->y2, config->y1}}) {
            IntMatrix source(3, 3);
            source.col(0) = ray_of(fan, config->x0);
            source.col(1) = ray_of(fan, xp);
            source.col(2) = ray_of(fan, yp);
            const UniMatrix inv = UniMatrix(source).inverse();
            const UniMatrix change(IntMatrix(target * inv.matrix()));
            const LatticeVector img_minus = change * ray_of(fan, xm);
            const LatticeVector img_y = change * ray_of(fan, ym);
            if (!equal(img_minus, want_minus) || img_y(0) != 0 || img_y(2) != -1 ||
                img_y(1) != config->a)
                continue;
            return ZeroTwoWitness{change, config->x0, xp, xm, yp, ym, config->a};
        }
    }
    return std::nullopt;
}

bool matches_normal_form(const Fan& fan, const ZeroTwoWitness& witness) {
    const Fan moved = transform(fan, witness.basis_change.matrix());
    const std::vector<LatticeVector> expected = {
        lattice_vector({1, 0, 0}), lattice_vector({1, 1, 0}), lattice_vector({1, -1, 0}),
        lattice_vector({0, 0, 1}), lattice_vector({0, witness.a, -1})};
    const int idx[] = {witness.x0, witness.x_plus, witness.x_minus, witness.y_plus,
                       witness.y_minus};
    for (int k = 0; k < 5; ++k)
        if (!equal(moved.rays[static_cast<std::size_t>(idx[k])], expected[static_cast<std::size_t>(k)]))
            return false;
    for (int x : {witness.x_plus, witness.x_minus})
        for (int y : {witness.y_plus, witness.y_minus}) {
            const Cone sigma{witness.x0, x, y};
            if (std::find(moved.max_cones.begin(), moved.max_cones.end(), sigma) ==
                moved.max_cones.end())
                return false;
        }
    return true;
}

} // namespace torifan
