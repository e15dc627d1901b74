#pragma once

// JSON fan format:
//   {"dim": 3, "rays": [[1,0,0], ...], "max_cones": [[0,1,3], ...]}
// Ray order defines indices. Serialization is canonical: keys in that order,
// no whitespace, cones written with sorted indices.

#include "torifan/fan.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace torifan {

/// Malformed fan JSON (wrong shapes, non-integers, indices out of range).
class FanFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::ordered_json to_json(const Fan& fan);
Fan fan_from_json(const nlohmann::json& j);

std::string serialize(const Fan& fan);
Fan parse_fan(std::string_view text);

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::ordered_json json_integer(const Integer& value);
nlohmann::ordered_json json_vector(const LatticeVector& v);

} // namespace torifan
