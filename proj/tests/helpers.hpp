#pragma once

#include "oracles.hpp"

#include "torifan/catalog.hpp"
#include "torifan/fan.hpp"

#include <string>
#include <vector>

namespace testing {

inline torifan::Fan fan_of(int dim, std::vector<std::vector<long>> rays,
                           std::vector<std::vector<int>> cones) {
    torifan::Fan f;
    f.dim = dim;
    for (const auto& r : rays) {
        torifan::LatticeVector v(dim);
        for (int i = 0; i < dim; ++i)
            v(i) = r[static_cast<std::size_t>(i)];
        f.rays.push_back(v);
    }
    for (auto& c : cones)
        f.max_cones.emplace_back(std::move(c));
    return f;
}

inline torifan::Fan named(const std::string& name) {
    auto nf = torifan::find_named(name);
    if (!nf)
        throw std::logic_error("no catalog entry " + name);
    return nf->fan;
}

// P(O + O(3)) over P^2.
inline torifan::Fan projective_bundle_p2_3() {
    return fan_of(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 3}, {0, 0, 1}, {0, 0, -1}},
                  {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
}

inline torifan::Fan p1_cubed() {
    return fan_of(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                  {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                   {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

// P^2-bundle over P^1 with a flopping contraction.
inline torifan::Fan p2_bundle_small() {
    return fan_of(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {-1, 0, -1}},
                  {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}});
}

inline std::vector<torifan::NamedFan> all_named() {
    auto out = torifan::surfaces();
    for (auto& t : torifan::threefolds())
        out.push_back(std::move(t));
    return out;
}

inline torifan::Fan rebased(const torifan::Fan& f, std::mt19937& rng) {
    return torifan::transform(f, oracle::from_mat(oracle::random_unimodular(rng, f.dim)));
}

} // namespace testing
