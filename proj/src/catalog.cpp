#include "torifan/catalog.hpp"

#include "torifan/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace torifan {

namespace {

struct SurfaceRow {
    const char* name;
    std::vector<std::pair<long, long>> rays;
    bool fano;
};

const std::vector<SurfaceRow>& surface_rows() {
    static const std::vector<SurfaceRow> rows = {
        {"P2", {{1, 0}, {0, 1}, {-1, -1}}, true},
        {"P1xP1", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, true},
        {"F1", {{1, 0}, {-1, 0}, {0, 1}, {1, -1}}, true},
        {"F2", {{1, 0}, {-1, 0}, {1, 1}, {1, -1}}, false},
        {"S7", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}}, true},
        {"W3", {{1, 0}, {-1, 0}, {1, 1}, {1, -1}, {0, 1}}, false},
        {"S6", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}, true},
        {"W4_1", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}}, false},
        {"W4_2", {{1, 0}, {-1, 0}, {1, 1}, {1, -1}, {0, 1}, {-1, 1}}, false},
        {"W4_3", {{1, 0}, {-1, 0}, {1, 1}, {1, -1}, {0, 1}, {1, 2}}, false},
        {"W5_1", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}}, false},
        {"W5_2", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {1, -2}}, false},
        {"W6_1", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, false},
        {"W6_2", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {1, -2}, {-1, 1}}, false},
        {"W6_3", {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {1, 2}, {1, -2}}, false},
        {"W7",
         {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {1, -2}, {-1, 1}, {-2, 1}},
         false},
    };
    return rows;
}

LatticeVector v3(long a, long b, long c) { return lattice_vector({a, b, c}); }

NamedFan named_surface(const SurfaceRow& row) {
    std::vector<LatticeVector> rays;
    for (auto [a, b] : row.rays)
        rays.push_back(lattice_vector({a, b}));
    NamedFan nf;
    nf.name = row.name;
    nf.fan = complete_fan_2d(std::move(rays));
    const long n = static_cast<long>(row.rays.size());
    nf.expected = {{"rays", n}, {"picard", n - 2}, {"anticanonical_degree", 12 - n},
                   {"is_fano", row.fano ? 1 : 0}};
    return nf;
}

const Fan& surface_fan(const std::string& name) {
    static const std::vector<NamedFan> all = surfaces();
    for (const NamedFan& s : all)
        if (s.name == name)
            return s.fan;
    throw std::logic_error("unknown surface " + name);
}

Fan bundle_or_die(const Fan& fiber, LatticeVector wp, LatticeVector wm, const std::string& name) {
    auto fan = build_bundle({fiber, std::move(wp), std::move(wm)});
    if (!fan)
        throw std::logic_error("catalog construction failed for " + name);
    return *fan;
}

NamedFan named_threefold(std::string name, Fan fan, std::string fiber, LatticeVector base,
                         long degree) {
    NamedFan nf;
    nf.name = std::move(name);
    nf.fan = std::move(fan);
    nf.fiber = std::move(fiber);
    nf.base_projection = std::move(base);
    const long n = nf.fan.ray_count();
    nf.expected = {{"rays", n}, {"picard", n - 3}, {"anticanonical_degree", degree},
                   {"is_fano", 0}};
    return nf;
}

// Swaps the last two coordinates: bundles built in (x, z, base) come back
// to (x, base, z).
IntMatrix swap_yz() {
    IntMatrix m = IntMatrix::Zero(3, 3);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    return m;
}

// Normal-form generators with a = 0: x0, x+, x-, y+, y-, then z's.
Fan x_zero(bool with_z2) {
    std::vector<LatticeVector> fiber_rays = {lattice_vector({1, 0}), lattice_vector({0, 1}),
                                             lattice_vector({0, -1}), lattice_vector({-1, 1})};
    if (with_z2)
        fiber_rays.push_back(lattice_vector({-1, 0}));
    const Fan fiber = complete_fan_2d(fiber_rays);
    const std::string name = with_z2 ? "X4_0" : "X3_0";
    const Fan built = transform(
        bundle_or_die(fiber, lattice_vector({1, 0}), lattice_vector({1, 0}), name), swap_yz());
    std::vector<LatticeVector> order = {v3(1, 0, 0), v3(1, 1, 0),  v3(1, -1, 0),
                                        v3(0, 0, 1), v3(0, 0, -1), v3(-1, 0, 1)};
    if (with_z2)
        order.push_back(v3(-1, 0, 0));
    return reorder_rays(built, order);
}

// Normal-form generators with a = 1.
Fan x_one(bool with_z3) {
    std::vector<LatticeVector> fiber_rays = {lattice_vector({1, 0}), lattice_vector({1, 1}),
                                             lattice_vector({1, -1}), lattice_vector({0, 1}),
                                             lattice_vector({-1, 0})};
    if (with_z3)
        fiber_rays.push_back(lattice_vector({0, -1}));
    const Fan fiber = complete_fan_2d(fiber_rays);
    const std::string name = with_z3 ? "X5_1" : "X4_1";
    const Fan built =
        bundle_or_die(fiber, lattice_vector({0, 0}), lattice_vector({0, 1}), name);
    std::vector<LatticeVector> order = {v3(1, 0, 0), v3(1, 1, 0), v3(1, -1, 0), v3(0, 0, 1),
                                        v3(0, 1, -1), v3(0, 1, 0), v3(-1, 0, 0)};
    if (with_z3)
        order.push_back(v3(0, -1, 0));
    return reorder_rays(built, order);
}

} // namespace

std::vector<NamedFan> surfaces() {
    std::vector<NamedFan> out;
    for (const SurfaceRow& row : surface_rows())
        out.push_back(named_surface(row));
    return out;
}

std::vector<NamedFan> threefolds() {
    std::vector<NamedFan> out;
    for (const SurfaceRow& row : surface_rows()) {
        if (row.fano)
            continue;
        const std::string name = std::string("P1x") + row.name;
        const Fan& fiber = surface_fan(row.name);
        const long n = static_cast<long>(row.rays.size());
        out.push_back(named_threefold(
            name, bundle_or_die(fiber, lattice_vector({0, 0}), lattice_vector({0, 0}), name),
            row.name, v3(0, 0, 1), 6 * (12 - n)));
    }
    out.push_back(named_threefold("X3_0", x_zero(false), "F1", v3(0, 1, 0), 52));
    out.push_back(named_threefold("X4_0", x_zero(true), "S7", v3(0, 1, 0), 38));
    out.push_back(named_threefold("X4_1", x_one(false), "W3", v3(0, 0, 1), 46));
    out.push_back(named_threefold("X5_1", x_one(true), "W4_1", v3(0, 0, 1), 36));
    return out;
}

std::optional<NamedFan> find_named(const std::string& name) {
    for (auto& list : {surfaces(), threefolds()})
        for (const NamedFan& nf : list)
            if (nf.name == name)
                return nf;
    return std::nullopt;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto& list : {surfaces(), threefolds()})
        for (const NamedFan& nf : list)
            out.push_back(nf.name);
    return out;
}

bool projects_onto_p1(const Fan& fan, const LatticeVector& projection) {
    if (projection.size() != fan.dim || projection.isZero() || !is_primitive(projection))
        return false;
    bool hits_plus = false, hits_minus = false;
    for (const Cone& c : fan.max_cones) {
        bool pos = false, neg = false;
        for (int r : c) {
            const Integer t = projection.dot(fan.rays[static_cast<std::size_t>(r)]);
            pos = pos || t > 0;
            neg = neg || t < 0;
        }
        if (pos && neg)
            return false;
        hits_plus = hits_plus || pos;
        hits_minus = hits_minus || neg;
    }
    return hits_plus && hits_minus;
}

} // namespace torifan
