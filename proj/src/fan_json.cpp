#include "torifan/fan_json.hpp"

#include <limits>

namespace torifan {

nlohmann::ordered_json json_integer(const Integer& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max())
        return value.convert_to<std::int64_t>();
    return value.str();
}

nlohmann::ordered_json json_vector(const LatticeVector& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(json_integer(v(i)));
    return out;
}

nlohmann::ordered_json to_json(const Fan& fan) {
    nlohmann::ordered_json j;
    j["dim"] = fan.dim;
    j["rays"] = nlohmann::ordered_json::array();
    for (const LatticeVector& r : fan.rays)
        j["rays"].push_back(json_vector(r));
    j["max_cones"] = nlohmann::ordered_json::array();
    for (const Cone& c : fan.max_cones)
        j["max_cones"].push_back(std::vector<int>(c.begin(), c.end()));
    return j;
}

namespace {

Integer parse_integer(const nlohmann::json& v) {
    if (v.is_number_integer())
        return Integer(v.get<std::int64_t>());
    if (v.is_number_unsigned())
        return Integer(v.get<std::uint64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            return Integer(s);
        } catch (const std::exception&) {
            throw FanFormatError("not an integer: \"" + s + "\"");
        }
    }
    throw FanFormatError("expected an integer, got " + v.dump());
}

} // namespace

Fan fan_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw FanFormatError("fan must be a JSON object");
    for (const char* key : {"dim", "rays", "max_cones"})
        if (!j.contains(key))
            throw FanFormatError(std::string("missing key \"") + key + "\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1 ||
        j["dim"].get<std::int64_t>() > 64)
        throw FanFormatError("\"dim\" must be a positive integer");
    Fan fan;
    fan.dim = j["dim"].get<int>();

    if (!j["rays"].is_array())
        throw FanFormatError("\"rays\" must be an array");
    for (const auto& ray : j["rays"]) {
        if (!ray.is_array() || ray.size() != static_cast<std::size_t>(fan.dim))
            throw FanFormatError("each ray must be an array of " + std::to_string(fan.dim) +
                                 " integers");
        LatticeVector v(fan.dim);
        for (int i = 0; i < fan.dim; ++i)
            v(i) = parse_integer(ray[static_cast<std::size_t>(i)]);
        fan.rays.push_back(std::move(v));
    }
    if (fan.rays.size() > 64)
        throw FanFormatError("at most 64 rays are supported");

    if (!j["max_cones"].is_array())
        throw FanFormatError("\"max_cones\" must be an array");
    for (const auto& cone : j["max_cones"]) {
        if (!cone.is_array())
            throw FanFormatError("each cone must be an array of ray indices");
        std::vector<int> idx;
        for (const auto& i : cone) {
            if (!i.is_number_integer())
                throw FanFormatError("cone entries must be integers");
            const auto k = i.get<std::int64_t>();
            if (k < 0 || k >= static_cast<std::int64_t>(fan.rays.size()))
                throw FanFormatError("cone index " + std::to_string(k) + " out of range");
            idx.push_back(static_cast<int>(k));
        }
        fan.max_cones.emplace_back(std::move(idx));
    }
    return fan;
}

std::string serialize(const Fan& fan) { return to_json(fan).dump(); }

Fan parse_fan(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FanFormatError(std::string("malformed JSON: ") + e.what());
    }
    return fan_from_json(j);
}

} // namespace torifan
