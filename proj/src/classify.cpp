#include "torifan/classify.hpp"

#include "torifan/contraction.hpp"
#include "torifan/isomorphism.hpp"
#include "torifan/polytope.hpp"
#include "torifan/primitive.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace torifan {

std::optional<Fan> build_bundle(const BundleSpec& spec) {
    const Fan& f = spec.fiber;
    if (f.dim != 2 || spec.twist_plus.size() != 2 || spec.twist_minus.size() != 2)
        return std::nullopt;
    Fan out;
    out.dim = 3;
    for (const LatticeVector& r : f.rays) {
        LatticeVector v(3);
        v << r(0), r(1), 0;
        out.rays.push_back(v);
    }
    LatticeVector xp(3), xm(3);
    xp << spec.twist_plus(0), spec.twist_plus(1), 1;
    xm << spec.twist_minus(0), spec.twist_minus(1), -1;
    const int ip = f.ray_count();
    const int im = ip + 1;
    out.rays.push_back(xp);
    out.rays.push_back(xm);
    for (int section : {ip, im})
        for (const Cone& c : f.max_cones)
            out.max_cones.push_back(c.with(section));
    if (!validate(out).ok())
        return std::nullopt;
    return out;
}

bool VerificationSummary::all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.passed; });
}

namespace {

std::map<std::string, std::string> keys_by_name(const std::vector<NamedFan>& catalog) {
    std::map<std::string, std::string> out;
    for (const NamedFan& nf : catalog)
        out.emplace(canonical_key(nf.fan), nf.name);
    return out;
}

ClassEntry make_entry(std::string key, Fan fan, std::string fiber) {
    ClassEntry e;
    e.key = std::move(key);
    e.rays = fan.ray_count();
    e.picard = fan.picard_number();
    const auto rels = primitive_collections(fan);
    e.is_fano = is_fano(rels);
    e.anticanonical_degree = anticanonical_degree(fan);
    e.fan = std::move(fan);
    e.fiber = std::move(fiber);
    return e;
}

ClassificationReport finish(std::map<std::string, ClassEntry> found,
                            const std::vector<NamedFan>& catalog, std::string scope) {
    const auto names = keys_by_name(catalog);
    ClassificationReport report;
    for (auto& [key, entry] : found) {
        if (auto it = names.find(key); it != names.end()) {
            entry.name = it->second;
            report.matched_names.push_back(it->second);
        }
        report.classes.push_back(std::move(entry));
    }
    report.count = static_cast<int>(report.classes.size());
    report.scope = std::move(scope);
    return report;
}

using Candidate = std::function<void(const std::string& fiber, const BundleSpec&)>;

ClassificationReport search_bundles(
    const std::vector<NamedFan>& fibers, const std::vector<NamedFan>& catalog,
    const std::string& scope,
    const std::function<void(const NamedFan&, const Candidate&)>& specs) {
    std::map<std::string, ClassEntry> found;
    const Candidate consider = [&](const std::string& fiber, const BundleSpec& spec) {
        auto fan = build_bundle(spec);
        if (!fan || !is_weakened_fano(*fan).is_weakened)
            return;
        std::string key = canonical_key(*fan);
        if (found.count(key))
            return;
        found.emplace(key, make_entry(key, std::move(*fan), fiber));
    };
    for (const NamedFan& fiber : fibers)
        specs(fiber, consider);
    return finish(std::move(found), catalog, scope);
}

std::string bundle_scope(int bound) {
    return "surface bundles over P1 (products as zero twist) with fibers among the given "
           "weak del Pezzo surfaces, twists in [-" +
           std::to_string(bound) + "," + std::to_string(bound) + "]^2";
}

} // namespace

ClassificationReport enumerate_weak_del_pezzo(const std::vector<NamedFan>& catalog) {
    std::map<std::string, ClassEntry> found;
    std::deque<Fan> queue;
    for (const NamedFan& s : surfaces())
        if (s.name == "P2" || s.name == "P1xP1" || s.name == "F2")
            queue.push_back(s.fan);

    while (!queue.empty()) {
        Fan fan = std::move(queue.front());
        queue.pop_front();
        std::string key = canonical_key(fan);
        if (found.count(key))
            continue;
        const std::vector<int> order = angular_order(fan.rays);
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<LatticeVector> rays = fan.rays;
            rays.push_back(fan.rays[static_cast<std::size_t>(order[i])] +
                           fan.rays[static_cast<std::size_t>(order[(i + 1) % order.size()])]);
            Fan blown = complete_fan_2d(std::move(rays));
            if (is_weak_fano(blown))
                queue.push_back(std::move(blown));
        }
        found.emplace(key, make_entry(key, std::move(fan), ""));
    }
    return finish(std::move(found), catalog,
                  "closure of P2, P1xP1, F2 under weak Fano toric blow-ups");
}

// bundle(w+, w-) and bundle(0, w+ + w-) differ by the shear (f, t) -> (f - t w+, t),
// so only the twist sum matters.
ClassificationReport enumerate_weakened_threefolds(int twist_bound,
                                                   const std::vector<NamedFan>& fibers,
                                                   const std::vector<NamedFan>& catalog) {
    if (twist_bound < 3)
        throw std::invalid_argument("twist bound must be at least 3");
    const long b = 2L * twist_bound;
    return search_bundles(fibers, catalog, bundle_scope(twist_bound),
                          [&](const NamedFan& fiber, const Candidate& consider) {
                              for (long s = -b; s <= b; ++s)
                                  for (long t = -b; t <= b; ++t)
                                      consider(fiber.name, {fiber.fan, lattice_vector({0, 0}),
                                                            lattice_vector({s, t})});
                          });
}

ClassificationReport enumerate_weakened_threefolds_exhaustive(int twist_bound,
                                                              const std::vector<NamedFan>& fibers,
                                                              const std::vector<NamedFan>& catalog) {
    if (twist_bound < 0)
        throw std::invalid_argument("twist bound must be nonnegative");
    const long b = twist_bound;
    return search_bundles(
        fibers, catalog, bundle_scope(twist_bound),
        [&](const NamedFan& fiber, const Candidate& consider) {
            for (long p = -b; p <= b; ++p)
                for (long q = -b; q <= b; ++q)
                    for (long s = -b; s <= b; ++s)
                        for (long t = -b; t <= b; ++t)
                            consider(fiber.name, {fiber.fan, lattice_vector({p, q}),
                                                  lattice_vector({s, t})});
        });
}

namespace {

struct Checker {
    VerificationSummary summary;

    void check(std::string name, bool passed, std::string detail) {
        summary.assertions.push_back({std::move(name), passed, std::move(detail)});
    }
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const std::string& s : items)
        out += (out.empty() ? "" : ",") + s;
    return out;
}

// Names matched on both sides exactly once.
bool is_bijection(const ClassificationReport& report, const std::vector<NamedFan>& catalog,
                  std::string& detail) {
    std::vector<std::string> unmatched;
    for (const ClassEntry& e : report.classes)
        if (e.name.empty())
            unmatched.push_back(e.key);
    std::multiset<std::string> matched(report.matched_names.begin(), report.matched_names.end());
    std::vector<std::string> missing;
    for (const NamedFan& nf : catalog)
        if (matched.count(nf.name) != 1)
            missing.push_back(nf.name);
    detail = "unmatched classes: " + std::to_string(unmatched.size()) +
             "; catalog entries not found once: [" + join(missing) + "]";
    return unmatched.empty() && missing.empty() &&
           report.classes.size() == catalog.size();
}

bool expected_hold(const NamedFan& nf, std::string& why) {
    const std::map<std::string, Integer> actual = {
        {"rays", nf.fan.ray_count()},
        {"picard", nf.fan.picard_number()},
        {"anticanonical_degree", anticanonical_degree(nf.fan)},
        {"is_fano", is_fano(nf.fan) ? 1 : 0}};
    for (const auto& [k, v] : nf.expected) {
        auto it = actual.find(k);
        if (it == actual.end() || it->second != v) {
            why = nf.name + "." + k;
            return false;
        }
    }
    return true;
}

struct ZeroTwoScan {
    bool has_a2 = false;
    bool homogeneous = true;
};

ZeroTwoScan scan_zero_two(const Fan& fan) {
    ZeroTwoScan scan;
    std::set<int> as;
    for (const CrepantContraction& c : is_weakened_fano(fan).crepant_contractions)
        if (auto z = std::get_if<ZeroTwo>(&c.kind)) {
            scan.has_a2 = scan.has_a2 || z->a == 2;
            as.insert(z->a);
        }
    scan.homogeneous = as.size() <= 1;
    return scan;
}

} // namespace

VerificationSummary verify_classification(int twist_bound,
                                          const std::vector<NamedFan>& surface_catalog,
                                          const std::vector<NamedFan>& threefold_catalog) {
    Checker c;
    std::string detail;

    const ClassificationReport surf = enumerate_weak_del_pezzo(surface_catalog);
    c.check("surfaces.count", surf.count == 16 && surf.count == int(surface_catalog.size()),
            "found " + std::to_string(surf.count) + ", catalog " +
                std::to_string(surface_catalog.size()) + ", expected 16");
    {
        const bool ok = is_bijection(surf, surface_catalog, detail);
        c.check("surfaces.bijection", ok, detail);
    }
    {
        std::vector<std::string> fano;
        for (const ClassEntry& e : surf.classes)
            if (e.is_fano)
                fano.push_back(e.name.empty() ? e.key : e.name);
        std::sort(fano.begin(), fano.end());
        const std::vector<std::string> want = {"F1", "P1xP1", "P2", "S6", "S7"};
        c.check("surfaces.fano", fano == want, "fano: [" + join(fano) + "]");
    }
    {
        std::vector<std::string> bad;
        for (const ClassEntry& e : surf.classes)
            if (e.anticanonical_degree != 12 - e.rays)
                bad.push_back(e.name.empty() ? e.key : e.name);
        c.check("surfaces.degree_12_minus_n", bad.empty(), "violations: [" + join(bad) + "]");
    }
    {
        std::vector<std::string> bad;
        for (const NamedFan& nf : surface_catalog)
            if (!validate(nf.fan).ok() || !is_weak_fano(nf.fan) || !expected_hold(nf, detail))
                bad.push_back(nf.name);
        c.check("surfaces.catalog", bad.empty(), "failing: [" + join(bad) + "]");
    }

    {
        std::vector<std::string> bad_valid, bad_weakened, bad_expected;
        for (const NamedFan& nf : threefold_catalog) {
            if (!validate(nf.fan).ok()) {
                bad_valid.push_back(nf.name);
                continue;
            }
            if (!is_weakened_fano(nf.fan).is_weakened)
                bad_weakened.push_back(nf.name);
            if (!expected_hold(nf, detail))
                bad_expected.push_back(detail);
        }
        c.check("threefolds.catalog_valid", bad_valid.empty(), "invalid: [" + join(bad_valid) + "]");
        c.check("threefolds.catalog_weakened", bad_weakened.empty(),
                "not weakened: [" + join(bad_weakened) + "]");
        c.check("threefolds.catalog_expected", bad_expected.empty(),
                "mismatched: [" + join(bad_expected) + "]");
    }
    {
        std::set<std::string> keys;
        for (const NamedFan& nf : threefold_catalog)
            keys.insert(canonical_key(nf.fan));
        c.check("threefolds.catalog_distinct", keys.size() == threefold_catalog.size(),
                std::to_string(keys.size()) + " distinct keys");
    }

    const ClassificationReport three =
        enumerate_weakened_threefolds(twist_bound, surface_catalog, threefold_catalog);
    c.check("threefolds.count",
            three.count == 15 && three.count == int(threefold_catalog.size()),
            "found " + std::to_string(three.count) + ", catalog " +
                std::to_string(threefold_catalog.size()) + ", expected 15");
    {
        const bool ok = is_bijection(three, threefold_catalog, detail);
        c.check("threefolds.bijection", ok, detail);
    }

    {
        const std::map<std::string, long> known_degrees = {
            {"X3_0", 52}, {"X4_0", 38}, {"X4_1", 46}, {"X5_1", 36}};
        std::vector<std::string> bad;
        for (const auto& [name, want] : known_degrees) {
            auto it = std::find_if(threefold_catalog.begin(), threefold_catalog.end(),
                                   [&](const NamedFan& nf) { return nf.name == name; });
            if (it == threefold_catalog.end()) {
                bad.push_back(name + " missing");
                continue;
            }
            const Integer got = anticanonical_degree(it->fan);
            if (got != want)
                bad.push_back(name + "=" + got.str());
        }
        c.check("threefolds.degrees", bad.empty(), "mismatches: [" + join(bad) + "]");
    }
    {
        std::vector<std::string> bad;
        for (const NamedFan& nf : threefold_catalog) {
            if (nf.name.rfind("P1x", 0) != 0)
                continue;
            const Integer want = 6 * (12 - (nf.fan.ray_count() - 2));
            if (anticanonical_degree(nf.fan) != want)
                bad.push_back(nf.name);
        }
        c.check("threefolds.product_degrees", bad.empty(), "violations: [" + join(bad) + "]");
    }
    {
        std::vector<std::string> with_a2, mixed;
        auto scan = [&](const std::string& label, const Fan& fan) {
            const ZeroTwoScan s = scan_zero_two(fan);
            if (s.has_a2)
                with_a2.push_back(label);
            if (!s.homogeneous)
                mixed.push_back(label);
        };
        for (const NamedFan& nf : threefold_catalog)
            scan(nf.name, nf.fan);
        for (const ClassEntry& e : three.classes)
            scan(e.name.empty() ? e.key : e.name, e.fan);
        c.check("threefolds.no_zero_two_a2", with_a2.empty(), "offenders: [" + join(with_a2) + "]");
        c.check("threefolds.homogeneous_a", mixed.empty(), "offenders: [" + join(mixed) + "]");
    }
    {
        std::vector<std::string> bad;
        for (const ClassEntry& e : three.classes)
            if (!projects_onto_p1(e.fan, lattice_vector({0, 0, 1})))
                bad.push_back(e.name.empty() ? e.key : e.name);
        for (const NamedFan& nf : threefold_catalog)
            if (!projects_onto_p1(nf.fan, nf.base_projection))
                bad.push_back(nf.name);
        c.check("threefolds.bundle_projection", bad.empty(), "offenders: [" + join(bad) + "]");
    }
    return c.summary;
}

} // namespace torifan
