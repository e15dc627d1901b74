// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "helpers.hpp"

#include "torifan/classify.hpp"
#include "torifan/contraction.hpp"
#include "torifan/fan_json.hpp"
#include "torifan/isomorphism.hpp"
#include "torifan/polytope.hpp"
#include "torifan/primitive.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace torifan;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void report(int n, const std::string& title, const Check& c, const std::string& extra = "") {
    std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title;
    if (!extra.empty())
        std::cout << " (" << extra << ")";
    for (const auto& note : c.notes)
        std::cout << "; " << note;
    std::cout << std::endl;
    failures += !c.ok;
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

std::set<std::string> keys_of(const ClassificationReport& r) {
    std::set<std::string> out;
    for (const ClassEntry& e : r.classes)
        out.insert(e.key);
    return out;
}

bool has_divisor_to_point(const WeakenedVerdict& v) {
    for (const CrepantContraction& c : v.crepant_contractions)
        if (std::holds_alternative<DivisorToPoint>(c.kind))
            return true;
    return false;
}

// Returns the set of a-values among ZeroTwo contractions; flags a == 2.
std::set<int> zero_two_values(const Fan& f) {
    std::set<int> as;
    for (const CrepantContraction& c : is_weakened_fano(f).crepant_contractions)
        if (const auto* z = std::get_if<ZeroTwo>(&c.kind))
            as.insert(z->a);
    return as;
}

void criterion_1() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    for (const NamedFan& nf : threefolds())
        c.expect(is_weakened_fano(nf.fan).is_weakened, nf.name + " not weakened");
    for (const auto& [label, fan] : std::vector<std::pair<std::string, std::optional<Fan>>>{
             {"P1xP1xP1", testing::p1_cubed()},
             {"P1xS6", build_bundle({testing::named("S6"), lattice_vector({0, 0}),
                                     lattice_vector({0, 0})})}}) {
        if (!fan) {
            c.expect(false, label + " could not be built");
            continue;
        }
        const WeakenedVerdict v = is_weakened_fano(*fan);
        c.expect(v.is_fano && !v.is_weakened, label + " should be Fano");
    }
    const WeakenedVerdict b = is_weakened_fano(testing::projective_bundle_p2_3());
    c.expect(b.is_weak_fano && !b.is_fano && !b.is_weakened && has_divisor_to_point(b),
             "P(O+O(3)) over P2 misclassified");
    const double s = seconds_since(t0);
    c.expect(s < 5.0, "too slow");
    report(1, "catalog 3-folds are weakened; Fano and divisor-to-point controls", c, fmt_seconds(s));
}

void criterion_2() {
    Check c;
    for (const auto& [name, want] : std::vector<std::pair<std::string, long>>{
             {"X3_0", 52}, {"X4_0", 38}, {"X4_1", 46}, {"X5_1", 36}}) {
        const Integer got = anticanonical_degree(testing::named(name));
        c.expect(got == want, name + " degree " + got.str());
    }
    int products = 0;
    for (const NamedFan& nf : threefolds()) {
        if (nf.name.rfind("P1x", 0) != 0)
            continue;
        ++products;
        const Integer deg = anticanonical_degree(nf.fan);
        c.expect(deg == 6 * (12 - (nf.fan.ray_count() - 2)), nf.name + " product formula");
        c.expect(deg == oracle::ehrhart_normalized_volume(nf.fan), nf.name + " volume oracle");
    }
    c.expect(products == 11, "expected 11 products");
    report(2, "anticanonical degrees 52, 38, 46, 36 and product formula", c);
}

void criterion_3() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const ClassificationReport r = enumerate_weak_del_pezzo();
    const double s = seconds_since(t0);
    c.expect(r.count == 16, "count " + std::to_string(r.count));
    c.expect(r.matched_names.size() == 16, "not in bijection with the table");
    int fano = 0;
    for (const ClassEntry& e : r.classes) {
        fano += e.is_fano;
        c.expect(e.anticanonical_degree == 12 - e.rays, e.name + " degree");
    }
    c.expect(fano == 5, "Fano count " + std::to_string(fano));
    c.expect(s < 10.0, "too slow");
    report(3, "16 weak del Pezzo classes, 5 Fano, degree 12 - n", c, fmt_seconds(s));
}

std::optional<ClassificationReport> threefold_report;

void criterion_4() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    threefold_report = enumerate_weakened_threefolds(3);
    const ClassificationReport again = enumerate_weakened_threefolds(4);
    const double s = seconds_since(t0);
    c.expect(threefold_report->count == 15, "count " + std::to_string(threefold_report->count));
    c.expect(threefold_report->matched_names.size() == 15, "not in bijection with the catalog");
    c.expect(keys_of(*threefold_report) == keys_of(again), "bound 4 differs from bound 3");
    c.expect(s < 300.0, "too slow");
    report(4, "15 weakened 3-fold classes, stable from twist bound 3 to 4", c, fmt_seconds(s));
}

void criterion_5() {
    Check c;
    std::vector<Fan> fans;
    for (const NamedFan& nf : testing::all_named())
        if (nf.fan.dim == 3)
            fans.push_back(nf.fan);
    if (threefold_report)
        for (const ClassEntry& e : threefold_report->classes)
            fans.push_back(e.fan);
    else
        c.expect(false, "no enumeration output");
    for (const Fan& f : fans) {
        const std::set<int> as = zero_two_values(f);
        c.expect(as.count(2) == 0, "ZeroTwo(a=2) found");
        if (is_weakened_fano(f).is_weakened)
            c.expect(as.size() <= 1, "mixed a on one fan");
    }
    report(5, "no (0,2) contraction with a = 2; a is uniform per 3-fold", c,
           std::to_string(fans.size()) + " fans");
}

void criterion_6() {
    Check c;
    std::mt19937 rng(31337);
    // (a) trichotomy on weak Fano instances: catalog plus random blow-ups.
    int two_element = 0;
    std::vector<Fan> instances;
    for (const NamedFan& nf : testing::all_named())
        instances.push_back(nf.fan);
    instances.push_back(testing::projective_bundle_p2_3());
    instances.push_back(testing::p2_bundle_small());
    for (const Fan& f : instances) {
        const auto rels = primitive_collections(f);
        if (!is_weak_fano(rels))
            continue;
        for (const PrimitiveRelation& r : rels) {
            if (r.collection.size() != 2)
                continue;
            ++two_element;
            try {
                (void)two_element_relation_kind(r);
            } catch (const std::exception& e) {
                c.expect(false, std::string("trichotomy: ") + e.what());
            }
        }
    }
    // (b) witness rays on the 15 weakened 3-folds.
    for (const NamedFan& nf : threefolds())
        for (const CrepantContraction& cc : is_weakened_fano(nf.fan).crepant_contractions) {
            const auto w = zero_two_witness(nf.fan, cc.relation);
            c.expect(w && matches_normal_form(nf.fan, *w), nf.name + " witness");
        }
    // (c), (d) relation identities and degrees.
    int relations = 0;
    for (const Fan& f : instances)
        for (const PrimitiveRelation& r : primitive_collections(f)) {
            ++relations;
            c.expect(relation_holds(f, r), "relation identity");
            c.expect(r.cls.sum() == r.degree, "degree is not the class sum");
        }
    // (e) canonical keys against isomorphism search.
    const auto catalog = testing::all_named();
    std::uniform_int_distribution<std::size_t> pick(0, catalog.size() - 1);
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const NamedFan& a = catalog[pick(rng)];
        const NamedFan& b = trial % 2 ? a : catalog[pick(rng)];
        const Fan moved = testing::rebased(b.fan, rng);
        const bool same = canonical_key(a.fan) == canonical_key(moved);
        const bool iso = find_isomorphism(a.fan, moved).has_value();
        c.expect(same == iso, a.name + " vs " + b.name);
        agree += same == iso;
    }
    report(6, "property suites (trichotomy, witnesses, relations, degrees, keys)", c,
           std::to_string(two_element) + " two-element relations, " + std::to_string(relations) +
               " relations, " + std::to_string(agree) + "/100 rebasings");
}

void criterion_7() {
    Check c;
    int n = 0;
    for (const NamedFan& nf : testing::all_named()) {
        ++n;
        const std::string text = serialize(nf.fan);
        const Fan back = parse_fan(text);
        c.expect(back == nf.fan, nf.name + " differs after parse");
        c.expect(serialize(back) == text, nf.name + " serialization not stable");
    }
    report(7, "catalog fans round-trip through JSON", c, std::to_string(n) + " fans");
}

} // namespace

int main() {
    const auto steps = {criterion_1, criterion_2, criterion_3, criterion_4,
                        criterion_5, criterion_6, criterion_7};
    int n = 0;
    for (auto step : steps) {
        ++n;
        try {
            step();
        } catch (const std::exception& e) {
            std::cout << "[FAIL] criterion " << n << ": exception: " << e.what() << std::endl;
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
