#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "circle_action.hpp"
#include "error.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace gwidth {

using nlohmann::json;

/// Integers serialize as numbers, other rationals as "p/q" strings.
inline json rational_to_json(const Rational& r)
{
    if (is_integral(r))
        return r.numerator();
    return to_string(r);
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<Integer>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::InvalidInput, "expected an integer or a \"p/q\" string, got " + j.dump());
}

inline json point_to_json(const RationalPoint& p)
{
    json out = json::array();
    for (const auto& c : p)
        out.push_back(rational_to_json(c));
    return out;
}

inline json vector_to_json(const LatticeVector& v) { return json(std::vector<Integer>(v.coords().begin(), v.coords().end())); }

namespace detail {

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::InvalidInput, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline Integer require_integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer, got " + j.dump());
    return j.get<Integer>();
}

inline LatticeVector lattice_from_json(const json& j, const char* what)
{
    if (!j.is_array())
        throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an array of integers");
    std::vector<Integer> coords;
    for (const auto& c : j)
        coords.push_back(require_integer(c, what));
    return LatticeVector(std::move(coords));
}

} // namespace detail

/// {"dim": n, "facets": [{"normal": [ints], "offset": int or "p/q"}, ...]}
inline DelzantPolytope polytope_from_json(const json& j)
{
    Integer dim = detail::require_integer(detail::require(j, "dim"), "dim");
    if (dim < 1)
        throw Error(ErrorCode::InvalidInput, "dim must be positive");
    const json& facets = detail::require(j, "facets");
    if (!facets.is_array())
        throw Error(ErrorCode::InvalidInput, "facets must be an array");
    std::vector<HalfSpace> hs;
    for (const auto& f : facets)
        hs.push_back({detail::lattice_from_json(detail::require(f, "normal"), "normal"),
                      rational_from_json(detail::require(f, "offset"))});
    return DelzantPolytope(static_cast<std::size_t>(dim), std::move(hs));
}

inline json polytope_to_json(const DelzantPolytope& p)
{
    json facets = json::array();
    for (const auto& f : p.facets())
        facets.push_back({{"normal", vector_to_json(f.normal)}, {"offset", rational_to_json(f.offset)}});
    return {{"dim", p.dim()}, {"facets", facets}};
}

/// {"n": int, "components": [{"label", "complex_dim", "weights"}, ...]}; any "H" field is ignored.
inline ActionData action_from_json(const json& j)
{
    Integer n = detail::require_integer(detail::require(j, "n"), "n");
    const json& comps = detail::require(j, "components");
    if (!comps.is_array())
        throw Error(ErrorCode::InvalidInput, "components must be an array");
    std::vector<FixedComponent> components;
    for (const auto& c : comps) {
        FixedComponent fc;
        const json& label = detail::require(c, "label");
        if (!label.is_string())
            throw Error(ErrorCode::InvalidInput, "label must be a string");
        fc.label = label.get<std::string>();
        fc.complex_dim = static_cast<int>(detail::require_integer(detail::require(c, "complex_dim"), "complex_dim"));
        const json& weights = detail::require(c, "weights");
        if (!weights.is_array())
            throw Error(ErrorCode::InvalidInput, "weights must be an array");
        for (const auto& w : weights)
            fc.weights.push_back(detail::require_integer(w, "weight"));
        components.push_back(std::move(fc));
    }
    return make_action(static_cast<int>(n), std::move(components), Provenance{AbstractInput{}});
}

inline json component_to_json(const FixedComponent& c)
{
    return {{"label", c.label}, {"complex_dim", c.complex_dim}, {"weights", c.weights}, {"H", rational_to_json(c.H)}};
}

/// Components listed by descending H; re-readable by action_from_json.
inline json action_to_json(const ActionData& a)
{
    json comps = json::array();
    for (auto i : order_by_level(a))
        comps.push_back(component_to_json(a.components[i]));
    return {{"n", a.n}, {"components", comps}};
}

inline json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

inline DelzantPolytope load_polytope(const std::string& path) { return polytope_from_json(load_json_file(path)); }
inline ActionData load_action(const std::string& path) { return action_from_json(load_json_file(path)); }

} // namespace gwidth
