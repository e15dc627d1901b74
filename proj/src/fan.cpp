#include "torifan/fan.hpp"

#include "torifan/cone_lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace torifan {

Cone::Cone(std::vector<int> rays) : rays_(std::move(rays)) {
    std::sort(rays_.begin(), rays_.end());
}

bool Cone::contains(int ray) const {
    return std::binary_search(rays_.begin(), rays_.end(), ray);
}

bool Cone::contains(const Cone& other) const {
    return std::includes(rays_.begin(), rays_.end(), other.rays_.begin(), other.rays_.end());
}

Cone Cone::without(int ray) const {
    std::vector<int> out;
    for (int r : rays_)
        if (r != ray)
            out.push_back(r);
    return Cone(std::move(out));
}

Cone Cone::with(int ray) const {
    std::vector<int> out = rays_;
    out.push_back(ray);
    return Cone(std::move(out));
}

Cone intersection(const Cone& a, const Cone& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Cone(std::move(out));
}

IntMatrix Fan::generator_matrix(const Cone& cone) const {
    IntMatrix m(dim, static_cast<Index>(cone.size()));
    for (std::size_t j = 0; j < cone.size(); ++j)
        m.col(static_cast<Index>(j)) = rays[static_cast<std::size_t>(cone[j])];
    return m;
}

IntMatrix Fan::ray_matrix() const { return from_columns(rays, dim); }

int Fan::find_ray(const LatticeVector& v) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (equal(rays[i], v))
            return static_cast<int>(i);
    return -1;
}

std::uint64_t Fan::mask(const Cone& cone) const {
    std::uint64_t m = 0;
    for (int r : cone)
        m |= std::uint64_t{1} << r;
    return m;
}

bool Fan::is_face(const Cone& subset) const {
    const std::uint64_t s = mask(subset);
    for (const Cone& c : max_cones)
        if ((s & ~mask(c)) == 0)
            return true;
    return false;
}

bool operator==(const Fan& a, const Fan& b) {
    if (a.dim != b.dim || a.rays.size() != b.rays.size() || a.max_cones != b.max_cones)
        return false;
    for (std::size_t i = 0; i < a.rays.size(); ++i)
        if (!equal(a.rays[i], b.rays[i]))
            return false;
    return true;
}

std::string to_string(Defect defect) {
    switch (defect) {
    case Defect::WrongDimension: return "ray has wrong dimension";
    case Defect::ZeroRay: return "zero ray";
    case Defect::NonPrimitiveRay: return "non-primitive ray";
    case Defect::DuplicateRay: return "duplicate ray";
    case Defect::UnusedRay: return "ray in no maximal cone";
    case Defect::ConeIndexOutOfRange: return "cone index out of range";
    case Defect::RepeatedConeIndex: return "repeated ray in cone";
    case Defect::WrongConeSize: return "maximal cone is not full-dimensional";
    case Defect::DuplicateCone: return "duplicate maximal cone";
    case Defect::NotSimplicial: return "not simplicial";
    case Defect::NotSmooth: return "not smooth";
    case Defect::UnmatchedFacet: return "not complete";
    case Defect::OvermatchedFacet: return "facet shared by more than two cones";
    case Defect::ImproperIntersection: return "cones intersect improperly";
    }
    return "unknown defect";
}

bool is_structural(Defect defect) {
    switch (defect) {
    case Defect::WrongDimension:
    case Defect::ZeroRay:
    case Defect::NonPrimitiveRay:
    case Defect::DuplicateRay:
    case Defect::UnusedRay:
    case Defect::ConeIndexOutOfRange:
    case Defect::RepeatedConeIndex:
    case Defect::WrongConeSize:
    case Defect::DuplicateCone:
        return true;
    default:
        return false;
    }
}

std::vector<std::string> ValidationReport::diagnostics() const {
    std::vector<std::string> out;
    for (const Offense& o : offending) {
        std::string line = to_string(o.defect);
        auto list = [](const std::vector<int>& xs) {
            std::string s;
            for (std::size_t i = 0; i < xs.size(); ++i)
                s += (i ? "," : "") + std::to_string(xs[i]);
            return s;
        };
        if (!o.cones.empty())
            line += " (cones " + list(o.cones) + ")";
        if (!o.rays.empty())
            line += " (rays " + list(o.rays) + ")";
        out.push_back(std::move(line));
    }
    return out;
}

namespace {

struct ConeFrame {
    // sign(det) * adj(B): row p measures the p-th coordinate (scaled by |det|).
    IntMatrix dual;
};

// Decides whether two simplicial full-dimensional cones meet in their
// common face.
bool intersect_properly(const Fan& fan, const Cone& a, const ConeFrame& fa, const Cone& b,
                        const ConeFrame& fb) {
    const Cone common = intersection(a, b);

    auto separated = [&](const Cone& self, const ConeFrame& frame, const Cone& other) {
        for (std::size_t p = 0; p < self.size(); ++p) {
            if (common.contains(self[p]))
                continue;
            for (int r : other) {
                Integer c = frame.dual.row(static_cast<Index>(p))
                                .dot(fan.rays[static_cast<std::size_t>(r)]);
                if (c > 0)
                    return false;
            }
        }
        return true;
    };
    if (separated(a, fa, b) || separated(b, fb, a))
        return true;

    // Search for lambda, mu >= 0 with A lambda = B mu and lambda putting
    // unit weight outside the common face; feasible means improper.
    const Index d = fan.dim;
    const Index na = static_cast<Index>(a.size());
    const Index nb = static_cast<Index>(b.size());
    RationalMatrix lhs = RationalMatrix::Zero(d + 1, na + nb);
    RationalVector rhs = RationalVector::Zero(d + 1);
    for (Index j = 0; j < na; ++j) {
        const int r = a[static_cast<std::size_t>(j)];
        lhs.block(0, j, d, 1) = fan.rays[static_cast<std::size_t>(r)].cast<Rational>();
        if (!common.contains(r))
            lhs(d, j) = 1;
    }
    for (Index j = 0; j < nb; ++j) {
        const int r = b[static_cast<std::size_t>(j)];
        lhs.block(0, na + j, d, 1) = -fan.rays[static_cast<std::size_t>(r)].cast<Rational>();
    }
    rhs(d) = 1;
    return !has_nonnegative_solution(lhs, rhs);
}

} // namespace

ValidationReport validate(const Fan& fan) {
    ValidationReport report;
    auto flag = [&](Defect d, std::vector<int> cones, std::vector<int> rays) {
        report.offending.push_back(Offense{d, std::move(cones), std::move(rays)});
    };

    const int n = fan.ray_count();
    if (fan.dim < 1)
        throw std::invalid_argument("validate: fan dimension must be positive");
    if (n > 64)
        throw std::invalid_argument("validate: fans with more than 64 rays are unsupported");

    for (int i = 0; i < n; ++i) {
        const LatticeVector& v = fan.rays[static_cast<std::size_t>(i)];
        if (v.size() != fan.dim) {
            flag(Defect::WrongDimension, {}, {i});
            continue;
        }
        const Integer g = content(v);
        if (g == 0)
            flag(Defect::ZeroRay, {}, {i});
        else if (g != 1)
            flag(Defect::NonPrimitiveRay, {}, {i});
        for (int j = 0; j < i; ++j)
            if (equal(fan.rays[static_cast<std::size_t>(j)], v))
                flag(Defect::DuplicateRay, {}, {j, i});
    }

    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const Cone& cone = fan.max_cones[c];
        const int ci = static_cast<int>(c);
        for (int r : cone) {
            if (r < 0 || r >= n) {
                flag(Defect::ConeIndexOutOfRange, {ci}, {r});
            } else {
                used[static_cast<std::size_t>(r)] = true;
            }
        }
        for (std::size_t k = 1; k < cone.size(); ++k)
            if (cone[k] == cone[k - 1])
                flag(Defect::RepeatedConeIndex, {ci}, {cone[k]});
        if (cone.size() < static_cast<std::size_t>(fan.dim))
            flag(Defect::WrongConeSize, {ci}, {});
        for (std::size_t o = 0; o < c; ++o)
            if (fan.max_cones[o] == cone)
                flag(Defect::DuplicateCone, {static_cast<int>(o), ci}, {});
    }
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<std::size_t>(i)])
            flag(Defect::UnusedRay, {}, {i});

    for (const Offense& o : report.offending)
        if (is_structural(o.defect))
            report.structurally_sound = false;
    if (!report.structurally_sound)
        return report;

    // Simplicial and smooth.
    report.is_simplicial = true;
    report.is_smooth = true;
    std::vector<ConeFrame> frames(fan.max_cones.size());
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const Cone& cone = fan.max_cones[c];
        if (cone.size() != static_cast<std::size_t>(fan.dim)) {
            report.is_simplicial = false;
            flag(Defect::NotSimplicial, {static_cast<int>(c)}, {});
            continue;
        }
        IntMatrix b = fan.generator_matrix(cone);
        Integer det = determinant(b);
        if (det == 0) {
            report.is_simplicial = false;
            flag(Defect::NotSimplicial, {static_cast<int>(c)}, {});
            continue;
        }
        if (abs(det) != 1) {
            report.is_smooth = false;
            flag(Defect::NotSmooth, {static_cast<int>(c)}, {});
        }
        frames[c].dual = adjugate(b);
        if (det < 0)
            frames[c].dual = -frames[c].dual;
    }
    if (!report.is_simplicial) {
        report.is_smooth = false;
        return report;
    }

    // Completeness: facet pairing plus proper pairwise intersections.
    bool complete = true;
    std::map<Cone, std::vector<int>> facets;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
        for (int r : fan.max_cones[c])
            facets[fan.max_cones[c].without(r)].push_back(static_cast<int>(c));
    for (const auto& [facet, owners] : facets) {
        std::vector<int> facet_rays(facet.begin(), facet.end());
        if (owners.size() == 1) {
            complete = false;
            flag(Defect::UnmatchedFacet, owners, facet_rays);
        } else if (owners.size() > 2) {
            complete = false;
            flag(Defect::OvermatchedFacet, owners, facet_rays);
        }
    }
    for (std::size_t i = 0; i < fan.max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < fan.max_cones.size(); ++j)
            if (!intersect_properly(fan, fan.max_cones[i], frames[i], fan.max_cones[j],
                                    frames[j])) {
                complete = false;
                flag(Defect::ImproperIntersection, {static_cast<int>(i), static_cast<int>(j)},
                     {});
            }
    report.is_complete = complete;
    return report;
}

void require_smooth_complete(const Fan& fan) {
    ValidationReport report = validate(fan);
    if (!report.ok()) {
        auto diag = report.diagnostics();
        throw std::invalid_argument("fan is not smooth and complete: " +
                                    (diag.empty() ? std::string("unknown") : diag.front()));
    }
}

bool contains(const Fan& fan, const Cone& cone, const LatticeVector& v,
              Strictness strictness) {
    if (cone.empty())
        return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
    auto coords = solve_rational(fan.generator_matrix(cone).cast<Rational>(),
                                 v.cast<Rational>());
    if (!coords)
        return false;
    for (Index i = 0; i < coords->size(); ++i) {
        const Rational& c = (*coords)(i);
        if (c < 0 || (strictness == Strictness::RelativeInterior && c == 0))
            return false;
    }
    return true;
}

std::vector<Cone> star(const Fan& fan, int ray) {
    if (ray < 0 || ray >= fan.ray_count())
        throw std::out_of_range("star: ray index " + std::to_string(ray) + " not in fan");
    std::vector<Cone> out;
    for (const Cone& c : fan.max_cones)
        if (c.contains(ray))
            out.push_back(c);
    return out;
}

IntMatrix quotient_projection(const Fan& fan, int ray) {
    if (ray < 0 || ray >= fan.ray_count())
        throw std::out_of_range("quotient_projection: ray index " + std::to_string(ray) +
                                " not in fan");
    IntMatrix column(fan.dim, 1);
    column.col(0) = fan.rays[static_cast<std::size_t>(ray)];
    // U x0 = +-e_1, so the remaining rows of U are coordinates on N / Z x0.
    const SmithDecomposition snf = smith_normal_form(column);
    if (snf.diagonal(0, 0) != 1)
        throw std::invalid_argument("quotient_projection: ray is not primitive");
    return snf.left.matrix().bottomRows(fan.dim - 1);
}

Fan quotient_fan(const Fan& fan, int ray) {
    const std::vector<Cone> cones = star(fan, ray);
    const IntMatrix projection = quotient_projection(fan, ray);

    Fan out;
    out.dim = fan.dim - 1;
    std::map<int, int> image_index;
    for (const Cone& c : cones) {
        std::vector<int> image;
        for (int r : c) {
            if (r == ray)
                continue;
            auto it = image_index.find(r);
            if (it == image_index.end()) {
                LatticeVector img =
                    primitive_part(projection * fan.rays[static_cast<std::size_t>(r)]);
                int idx = out.find_ray(img);
                if (idx < 0) {
                    idx = out.ray_count();
                    out.rays.push_back(std::move(img));
                }
                it = image_index.emplace(r, idx).first;
            }
            image.push_back(it->second);
        }
        out.max_cones.emplace_back(std::move(image));
    }
    return out;
}

Fan transform(const Fan& fan, const IntMatrix& m) {
    if (m.cols() != fan.dim)
        throw std::invalid_argument("transform: matrix does not act on the fan's lattice");
    Fan out = fan;
    out.dim = static_cast<int>(m.rows());
    for (LatticeVector& r : out.rays)
        r = m * r;
    return out;
}

Fan reorder_rays(const Fan& fan, const std::vector<LatticeVector>& order) {
    if (order.size() != fan.rays.size())
        throw std::invalid_argument("reorder_rays: ray count mismatch");
    std::vector<int> new_index(fan.rays.size(), -1);
    Fan out;
    out.dim = fan.dim;
    out.rays = order;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int old = fan.find_ray(order[i]);
        if (old < 0 || new_index[static_cast<std::size_t>(old)] >= 0)
            throw std::invalid_argument("reorder_rays: ray " + to_string(order[i]) +
                                        " does not match the fan");
        new_index[static_cast<std::size_t>(old)] = static_cast<int>(i);
    }
    for (const Cone& c : fan.max_cones) {
        std::vector<int> image;
        for (int r : c)
            image.push_back(new_index[static_cast<std::size_t>(r)]);
        out.max_cones.emplace_back(std::move(image));
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    return out;
}

std::vector<int> angular_order(const std::vector<LatticeVector>& rays) {
    std::vector<int> idx(rays.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto half = [](const LatticeVector& v) {
        return (v(1) > 0 || (v(1) == 0 && v(0) > 0)) ? 0 : 1;
    };
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        const LatticeVector& a = rays[static_cast<std::size_t>(i)];
        const LatticeVector& b = rays[static_cast<std::size_t>(j)];
        const int ha = half(a), hb = half(b);
        if (ha != hb)
            return ha < hb;
        return a(0) * b(1) - a(1) * b(0) > 0;
    });
    return idx;
}

Fan complete_fan_2d(std::vector<LatticeVector> rays) {
    for (const LatticeVector& v : rays)
        if (v.size() != 2)
            throw std::invalid_argument("complete_fan_2d: rays must lie in Z^2");
    Fan fan;
    fan.dim = 2;
    const std::vector<int> order = angular_order(rays);
    fan.rays = std::move(rays);
    for (std::size_t k = 0; k < order.size(); ++k)
        fan.max_cones.push_back(Cone{order[k], order[(k + 1) % order.size()]});
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    return fan;
}

} // namespace torifan
