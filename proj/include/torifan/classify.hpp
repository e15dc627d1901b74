#pragma once

// Classification by search: blow-up closure for weak del Pezzo surfaces and
// surface bundles over P^1 for weakened Fano 3-folds.

#include "torifan/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torifan {

/// A surface bundle over P^1 in fiber (+) base coordinates: the fiber rays
/// at base 0 and the section rays x+ = (twist_plus, 1), x- = (twist_minus, -1).
struct BundleSpec {
    Fan fiber;
    LatticeVector twist_plus;
    LatticeVector twist_minus;
};

/// The bundle fan if it is smooth and complete.
std::optional<Fan> build_bundle(const BundleSpec& spec);

struct ClassEntry {
    std::string key;
    Fan fan;
    /// Catalog name, empty when unmatched.
    std::string name;
    int rays = 0;
    int picard = 0;
    Integer anticanonical_degree;
    bool is_fano = false;
    /// Fiber of the first bundle spec producing the class (3-folds only).
    std::string fiber;
};

struct ClassificationReport {
    int count = 0;
    /// Sorted by canonical key.
    std::vector<ClassEntry> classes;
    std::vector<std::string> matched_names;
    std::string scope;
};

/// Closure of {P2, P1xP1, F2} under toric blow-ups that stay weak Fano.
ClassificationReport enumerate_weak_del_pezzo(
    const std::vector<NamedFan>& catalog = surfaces());

/// Weakened Fano bundles over P^1 with fibers among `fibers` and twists in
/// [-twist_bound, twist_bound]^2. Throws std::invalid_argument if the bound
/// is below 3.
ClassificationReport enumerate_weakened_threefolds(
    int twist_bound, const std::vector<NamedFan>& fibers = surfaces(),
    const std::vector<NamedFan>& catalog = threefolds());

/// Same search without the twist-sum reduction: every (w+, w-) pair is
/// built and tested. Only practical for small bounds; any bound >= 0 works.
ClassificationReport enumerate_weakened_threefolds_exhaustive(
    int twist_bound, const std::vector<NamedFan>& fibers = surfaces(),
    const std::vector<NamedFan>& catalog = threefolds());

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationSummary {
    std::vector<Assertion> assertions;
    bool all_passed() const;
};

/// Both enumerations cross-checked against the given catalogs.
VerificationSummary verify_classification(int twist_bound = 3,
                                          const std::vector<NamedFan>& surface_catalog = surfaces(),
                                          const std::vector<NamedFan>& threefold_catalog = threefolds());

} // namespace torifan
