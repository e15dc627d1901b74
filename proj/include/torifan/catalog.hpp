#pragma once

// Named smooth toric weak del Pezzo surfaces and weakened Fano 3-folds.
//
// ASCII names: P2, P1xP1, F1, F2, S7, W3, S6, W4_1, W4_2, W4_3, W5_1, W5_2,
// W6_1, W6_2, W6_3, W7 for surfaces (W4_1 is W^1_4 and so on), and
// P1xF2, ..., P1xW7, X3_0, X4_0, X4_1, X5_1 for 3-folds (X3_0 is X^0_3).

#include "torifan/fan.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torifan {

struct NamedFan {
    std::string name;
    Fan fan;
    /// Expected invariants: "rays", "picard", "anticanonical_degree",
    /// "is_fano" (0 or 1).
    std::map<std::string, Integer> expected;
    /// Surface bundles over P^1: the fiber's name and the linear form
    /// projecting onto the base. Empty for surfaces.
    std::string fiber;
    LatticeVector base_projection;
};

std::vector<NamedFan> surfaces();
std::vector<NamedFan> threefolds();

/// Surface or 3-fold by name.
std::optional<NamedFan> find_named(const std::string& name);

/// Every catalog name, surfaces first.
std::vector<std::string> catalog_names();

/// Checks that each cone's rays lie on one side of `projection` and that
/// the form is primitive, i.e. the linear map is a map of fans onto the
/// complete fan of P^1.
bool projects_onto_p1(const Fan& fan, const LatticeVector& projection);

} // namespace torifan
