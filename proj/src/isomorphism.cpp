#include "torifan/isomorphism.hpp"

#include "torifan/polytope.hpp"
#include "torifan/primitive.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace torifan {

namespace {

std::vector<LatticeVector> sorted_rays(const Fan& fan, const Cone& c) {
    std::vector<LatticeVector> out;
    for (int r : c)
        out.push_back(fan.rays[static_cast<std::size_t>(r)]);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::map<std::string, int> ray_index(const Fan& fan) {
    std::map<std::string, int> out;
    for (int i = 0; i < fan.ray_count(); ++i)
        out.emplace(to_string(fan.rays[static_cast<std::size_t>(i)]), i);
    return out;
}

struct Invariants {
    int dim = 0;
    int rays = 0;
    std::size_t cones = 0;
    std::vector<std::int64_t> degrees;
    std::optional<Integer> anticanonical;

    bool operator==(const Invariants&) const = default;
};

Invariants invariants(const Fan& fan) {
    Invariants inv;
    inv.dim = fan.dim;
    inv.rays = fan.ray_count();
    inv.cones = fan.max_cones.size();
    const auto rels = primitive_collections(fan);
    for (const PrimitiveRelation& r : rels)
        inv.degrees.push_back(r.degree);
    std::sort(inv.degrees.begin(), inv.degrees.end());
    if (is_weak_fano(rels))
        inv.anticanonical = anticanonical_degree(fan);
    return inv;
}

// Calls visit(ordered cone rays) for every maximal cone and ray ordering.
template <typename Visit>
void for_each_ordered_cone(const Fan& fan, Visit visit) {
    for (const Cone& c : fan.max_cones) {
        std::vector<int> order(c.begin(), c.end());
        do {
            visit(order);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

IntMatrix ordered_matrix(const Fan& fan, const std::vector<int>& order) {
    IntMatrix m(fan.dim, static_cast<Index>(order.size()));
    for (std::size_t j = 0; j < order.size(); ++j)
        m.col(static_cast<Index>(j)) = fan.rays[static_cast<std::size_t>(order[j])];
    return m;
}

} // namespace

std::size_t anchor_cone(const Fan& fan) {
    std::size_t best = 0;
    std::vector<LatticeVector> best_rays;
    for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
        std::vector<LatticeVector> rays = sorted_rays(fan, fan.max_cones[i]);
        if (i == 0 || std::lexicographical_compare(rays.begin(), rays.end(), best_rays.begin(),
                                                   best_rays.end(), lex_less)) {
            best = i;
            best_rays = std::move(rays);
        }
    }
    return best;
}

bool is_isomorphism(const Fan& source, const Fan& target, const FanIso& iso) {
    if (source.dim != target.dim || source.ray_count() != target.ray_count() ||
        source.max_cones.size() != target.max_cones.size() ||
        iso.ray_permutation.size() != source.rays.size())
        return false;
    std::vector<bool> hit(target.rays.size(), false);
    for (std::size_t i = 0; i < source.rays.size(); ++i) {
        const int j = iso.ray_permutation[i];
        if (j < 0 || j >= target.ray_count() || hit[static_cast<std::size_t>(j)])
            return false;
        hit[static_cast<std::size_t>(j)] = true;
        if (!equal(iso.matrix * source.rays[i], target.rays[static_cast<std::size_t>(j)]))
            return false;
    }
    std::vector<Cone> mapped;
    for (const Cone& c : source.max_cones) {
        std::vector<int> image;
        for (int r : c)
            image.push_back(iso.ray_permutation[static_cast<std::size_t>(r)]);
        mapped.emplace_back(std::move(image));
    }
    std::vector<Cone> expected = target.max_cones;
    std::sort(mapped.begin(), mapped.end());
    std::sort(expected.begin(), expected.end());
    return mapped == expected;
}

std::optional<FanIso> find_isomorphism(const Fan& source, const Fan& target) {
    if (source.dim != target.dim || source.ray_count() != target.ray_count() ||
        source.max_cones.size() != target.max_cones.size())
        return std::nullopt;
    if (!(invariants(source) == invariants(target)))
        return std::nullopt;

    const Cone& anchor = source.max_cones[anchor_cone(source)];
    const std::vector<int> anchor_order(anchor.begin(), anchor.end());
    const UniMatrix anchor_inv = UniMatrix(ordered_matrix(source, anchor_order)).inverse();
    const std::map<std::string, int> target_index = ray_index(target);

    std::optional<FanIso> found;
    for_each_ordered_cone(target, [&](const std::vector<int>& order) {
        if (found)
            return;
        const IntMatrix m = ordered_matrix(target, order) * anchor_inv.matrix();
        std::vector<int> perm;
        for (const LatticeVector& r : source.rays) {
            auto it = target_index.find(to_string(LatticeVector(m * r)));
            if (it == target_index.end())
                return;
            perm.push_back(it->second);
        }
        FanIso iso{UniMatrix(m), std::move(perm)};
        if (is_isomorphism(source, target, iso))
            found = std::move(iso);
    });
    return found;
}

std::string canonical_key(const Fan& fan) {
    std::string best;
    bool have = false;
    for_each_ordered_cone(fan, [&](const std::vector<int>& order) {
        const UniMatrix normalize = UniMatrix(ordered_matrix(fan, order)).inverse();
        std::vector<LatticeVector> images;
        for (const LatticeVector& r : fan.rays)
            images.push_back(normalize * r);
        std::vector<int> idx(images.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return lex_less(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
        });
        std::vector<int> rank(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k)
            rank[static_cast<std::size_t>(idx[k])] = static_cast<int>(k);
        std::vector<Cone> cones;
        for (const Cone& c : fan.max_cones) {
            std::vector<int> image;
            for (int r : c)
                image.push_back(rank[static_cast<std::size_t>(r)]);
            cones.emplace_back(std::move(image));
        }
        std::sort(cones.begin(), cones.end());

        std::string key = std::to_string(fan.dim) + "|";
        for (int i : idx)
            key += to_string(images[static_cast<std::size_t>(i)]);
        key += "|";
        for (const Cone& c : cones) {
            key += "[";
            for (std::size_t k = 0; k < c.size(); ++k)
                key += (k ? "," : "") + std::to_string(c[k]);
            key += "]";
        }
        if (!have || key < best) {
            best = std::move(key);
            have = true;
        }
    });
    return best;
}

} // namespace torifan
