#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "syzygy/arrangement.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/projective.hpp"
#include "syzygy/rational.hpp"

namespace syzygy {

using Json = nlohmann::json;  // std::map-backed: object keys serialize sorted

/// Parse with library errors converted to BadInput.
inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw BadInput(std::string("JSON parse error: ") + e.what());
    }
}

namespace detail {

/// Accepts a rational string or a JSON integer.
inline Rat rat_from_json(const Json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return rat_from_string(std::to_string(j.get<long long>()));
    throw BadInput("expected a rational as string or integer, got " + j.dump());
}

inline std::array<Rat, 3> triple_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw BadInput(std::string(what) + " must be an array of 3 rationals");
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

}  // namespace detail

inline Json point_to_json(const ProjPoint& p) {
    return Json::array({p.coords()[0].get_str(), p.coords()[1].get_str(),
                        p.coords()[2].get_str()});
}

inline ProjPoint point_from_json(const Json& j) {
    auto t = detail::triple_from_json(j, "point");
    return ProjPoint(t[0], t[1], t[2]);
}

inline Json line_to_json(const ProjLine& l) {
    return Json::array({l.coeffs()[0].get_str(), l.coeffs()[1].get_str(),
                        l.coeffs()[2].get_str()});
}

inline ProjLine line_from_json(const Json& j) {
    auto t = detail::triple_from_json(j, "line");
    return ProjLine(t[0], t[1], t[2]);
}

inline Json poly_to_json(const HomogPoly& f) {
    Json coeffs = Json::array();
    for (const Rat& c : f.coeffs()) coeffs.push_back(rat_to_string(c));
    return Json{{"degree", f.degree()}, {"order", "grlex_xyz"}, {"coeffs", coeffs}};
}

inline HomogPoly poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw BadInput("polynomial needs degree and coeffs fields");
    if (j.contains("order") && j["order"] != "grlex_xyz")
        throw BadInput("unsupported monomial order " + j["order"].dump());
    if (!j["degree"].is_number_integer())
        throw BadInput("polynomial degree must be an integer");
    int d = j["degree"].get<int>();
    if (d < 0) throw BadInput("polynomial degree must be nonnegative");
    if (!j["coeffs"].is_array()) throw BadInput("polynomial coeffs must be an array");
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(detail::rat_from_json(c));
    if (coeffs.size() != static_cast<std::size_t>((d + 2) * (d + 1) / 2))
        throw BadInput("coefficient count does not match degree " + std::to_string(d));
    return HomogPoly(d, std::move(coeffs));
}

inline Json arrangement_to_json(const ColoredArrangement& arr) {
    Json red = Json::array();
    for (const auto& l : arr.red) red.push_back(line_to_json(l));
    Json blue = Json::array();
    for (const auto& l : arr.blue) blue.push_back(line_to_json(l));
    return Json{{"k", arr.k},
                {"green", line_to_json(arr.green)},
                {"red", red},
                {"blue", blue}};
}

/// Rebuilds and revalidates; the k field must match the list lengths.
inline ColoredArrangement arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("green") || !j.contains("red") ||
        !j.contains("blue"))
        throw BadInput("arrangement needs k, green, red, blue fields");
    if (!j["k"].is_number_integer() || !j["red"].is_array() || !j["blue"].is_array())
        throw BadInput("arrangement field types: k integer, red/blue arrays");
    long long k_signed = j["k"].get<long long>();
    if (k_signed < 0) throw BadInput("arrangement k must be nonnegative");
    std::size_t k = static_cast<std::size_t>(k_signed);
    std::vector<ProjLine> red, blue;
    for (const auto& l : j["red"]) red.push_back(line_from_json(l));
    for (const auto& l : j["blue"]) blue.push_back(line_from_json(l));
    if (red.size() != k || blue.size() != k)
        throw BadInput("arrangement k does not match red/blue list lengths");
    return arrangement_from_lines(std::move(red), std::move(blue), line_from_json(j["green"]));
}

}  // namespace syzygy
