#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "euclid/algebra.hpp"
#include "euclid/haar.hpp"

namespace euclid {

/// Element wire format: {"n": <int>, "coeffs": [<float>, ...]}.
inline nlohmann::json element_to_json(const Element& u) {
    return nlohmann::json{{"n", u.dim()}, {"coeffs", u.coeffs()}};
}

inline Element element_from_json(const Algebra& ctx, const nlohmann::json& j) {
    if (j.is_array()) return Element(ctx, j.get<std::vector<double>>());
    if (j.is_object() && j.contains("n") && j.contains("coeffs")) {
        if (j.at("n").get<int>() != ctx.dim())
            throw DimensionMismatch("element_from_json: dimension field mismatch");
        return Element(ctx, j.at("coeffs").get<std::vector<double>>());
    }
    throw std::invalid_argument("element_from_json: expected an array or {n, coeffs}");
}

/// Parses either a bare coefficient array "[1,0,0,0]" or the object form.
inline Element parse_element(const Algebra& ctx, std::string_view text) {
    return element_from_json(ctx, nlohmann::json::parse(text));
}

/// Box wire format: {"lower": [...], "upper": [...]}.
inline nlohmann::json box_to_json(const RegionBox& box) {
    return nlohmann::json{{"lower", box.lower}, {"upper", box.upper}};
}

inline RegionBox box_from_json(const nlohmann::json& j) {
    RegionBox box;
    box.lower = j.at("lower").get<std::vector<double>>();
    box.upper = j.at("upper").get<std::vector<double>>();
    return box;
}

}  // namespace euclid
