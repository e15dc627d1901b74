#include "torifan/polytope.hpp"

#include "torifan/cone_lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace torifan {

namespace {

bool rational_lex_less(const RationalVector& a, const RationalVector& b) {
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return a(i) < b(i);
    return false;
}

bool rational_equal(const RationalVector& a, const RationalVector& b) {
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return false;
    return true;
}

Rational pairing(const RationalVector& m, const LatticeVector& v) {
    Rational s = 0;
    for (Index i = 0; i < m.size(); ++i)
        s += m(i) * Rational(v(i));
    return s;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(idx);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// Solution of <m, rays[i]> = -1 for i in rows, if the system is nonsingular.
std::optional<RationalVector> tight_point(const std::vector<LatticeVector>& normals,
                                          const std::vector<int>& rows, int dim) {
    RationalMatrix a(dim, dim);
    for (int r = 0; r < dim; ++r)
        a.row(r) = normals[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])]
                       .cast<Rational>()
                       .transpose();
    if (determinant(a) == 0)
        return std::nullopt;
    return solve_rational(a, RationalVector::Constant(dim, Rational(-1)));
}

class Triangulator {
public:
    explicit Triangulator(const AnticanPolytope& p) : p_(p) {
        for (const RationalVector& v : p.vertices) {
            std::vector<bool> row;
            for (const LatticeVector& n : p.normals)
                row.push_back(pairing(v, n) == -1);
            tight_.push_back(std::move(row));
        }
    }

    Index affine_dim(const std::vector<int>& face) const {
        if (face.empty())
            return -1;
        RationalMatrix diffs(p_.dim, static_cast<Index>(face.size()));
        for (std::size_t j = 0; j < face.size(); ++j)
            diffs.col(static_cast<Index>(j)) = vertex(face[j]) - vertex(face[0]);
        return rank(diffs);
    }

    // Facets of the face `face` (of affine dimension `k`), as vertex sets.
    std::vector<std::vector<int>> facets(const std::vector<int>& face, Index k) const {
        std::set<std::vector<int>> out;
        for (std::size_t h = 0; h < p_.normals.size(); ++h) {
            std::vector<int> sub;
            for (int v : face)
                if (tight_[static_cast<std::size_t>(v)][h])
                    sub.push_back(v);
            if (sub.size() == face.size() || sub.empty())
                continue;
            if (affine_dim(sub) == k - 1)
                out.insert(sub);
        }
        return {out.begin(), out.end()};
    }

    // Pulling triangulation: cone from the first vertex over the facets
    // that avoid it.
    std::vector<std::vector<int>> triangulate(const std::vector<int>& face, Index k) const {
        if (k == 0)
            return {{face.front()}};
        const int apex = face.front();
        std::vector<std::vector<int>> out;
        for (const std::vector<int>& f : facets(face, k)) {
            if (std::find(f.begin(), f.end(), apex) != f.end())
                continue;
            for (std::vector<int> simplex : triangulate(f, k - 1)) {
                simplex.push_back(apex);
                out.push_back(std::move(simplex));
            }
        }
        return out;
    }

    const RationalVector& vertex(int i) const { return p_.vertices[static_cast<std::size_t>(i)]; }

private:
    const AnticanPolytope& p_;
    std::vector<std::vector<bool>> tight_;
};

} // namespace

AnticanPolytope anticanonical_polytope(const Fan& fan) {
    const int d = fan.dim;
    const IntMatrix rays = fan.ray_matrix();
    for (int i = 0; i < d; ++i)
        for (int sign : {1, -1}) {
            LatticeVector e = LatticeVector::Zero(d);
            e(i) = sign;
            if (!in_cone(rays, e))
                throw std::domain_error("anticanonical polytope is unbounded");
        }

    AnticanPolytope p;
    p.dim = d;
    p.normals = fan.rays;

    auto feasible = [&](const RationalVector& m) {
        return std::all_of(p.normals.begin(), p.normals.end(),
                           [&](const LatticeVector& v) { return pairing(m, v) >= -1; });
    };

    // Nef: the point cut out by each maximal cone must satisfy every constraint.
    for (const Cone& c : fan.max_cones) {
        const auto m = tight_point(p.normals, std::vector<int>(c.begin(), c.end()), d);
        if (!m || !feasible(*m))
            throw std::domain_error("anticanonical divisor is not nef");
    }

    for (const std::vector<int>& rows : subsets(fan.ray_count(), d)) {
        auto m = tight_point(p.normals, rows, d);
        if (!m || !feasible(*m))
            continue;
        if (std::none_of(p.vertices.begin(), p.vertices.end(),
                         [&](const RationalVector& v) { return rational_equal(v, *m); }))
            p.vertices.push_back(std::move(*m));
    }
    std::sort(p.vertices.begin(), p.vertices.end(), rational_lex_less);
    return p;
}

Rational normalized_volume(const AnticanPolytope& polytope) {
    const Triangulator tri(polytope);
    std::vector<int> all(polytope.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = static_cast<int>(i);
    const Index d = polytope.dim;

    Rational total = 0;
    for (const std::vector<int>& facet : tri.facets(all, d)) {
        for (const std::vector<int>& simplex : tri.triangulate(facet, d - 1)) {
            RationalMatrix m(d, d);
            for (Index j = 0; j < d; ++j)
                m.col(j) = tri.vertex(simplex[static_cast<std::size_t>(j)]);
            total += abs(determinant(m));
        }
    }
    return total;
}

Integer anticanonical_degree(const Fan& fan) {
    const Rational vol = normalized_volume(anticanonical_polytope(fan));
    if (denominator(vol) != 1)
        throw std::logic_error("anticanonical degree is not an integer: " + vol.str());
    return Integer(numerator(vol));
}

} // namespace torifan
