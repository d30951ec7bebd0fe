#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace gwidth {

/**
 * One connected component of the fixed point set. Zero weights are not
 * stored: they are the tangent directions along the component and are
 * counted by complex_dim, so weights.size() + complex_dim == n.
 */
struct FixedComponent {
    std::string label;
    int complex_dim = 0;
    std::vector<Integer> weights; // nonzero, sorted ascending
    Rational H = 0;               // normalized moment value, always -sum(weights)

    Integer weight_sum() const
    {
        Integer m = 0;
        for (auto w : weights)
            m += w;
        return m;
    }

    friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

struct AbstractInput {
    friend bool operator==(const AbstractInput&, const AbstractInput&) = default;
};

struct ToricOrigin {
    LatticeVector xi;
    std::vector<HalfSpace> facets;
    friend bool operator==(const ToricOrigin&, const ToricOrigin&) = default;
};

struct GrassmannianOrigin {
    int k = 0;
    int m = 0;
    friend bool operator==(const GrassmannianOrigin&, const GrassmannianOrigin&) = default;
};

struct Provenance;

struct ProductOrigin {
    std::vector<Provenance> children;
    friend bool operator==(const ProductOrigin&, const ProductOrigin&);
};

struct Provenance {
    std::variant<AbstractInput, ToricOrigin, GrassmannianOrigin, ProductOrigin> origin;

    friend bool operator==(const Provenance&, const Provenance&) = default;

    std::string describe() const
    {
        struct Visitor {
            std::string operator()(const AbstractInput&) const { return "abstract input"; }
            std::string operator()(const ToricOrigin& t) const { return "toric subcircle xi=" + to_string(t.xi); }
            std::string operator()(const GrassmannianOrigin& g) const
            {
                return "Gr(" + std::to_string(g.k) + "," + std::to_string(g.m) + ")";
            }
            std::string operator()(const ProductOrigin& p) const
            {
                std::string out = "product of [";
                for (std::size_t i = 0; i < p.children.size(); ++i)
                    out += (i ? "; " : "") + p.children[i].describe();
                return out + "]";
            }
        };
        return std::visit(Visitor{}, origin);
    }
};

inline bool operator==(const ProductOrigin& a, const ProductOrigin& b) { return a.children == b.children; }

/// A Hamiltonian circle action on a closed 2n-manifold, given by its fixed point data.
struct ActionData {
    int n = 0;
    std::vector<FixedComponent> components;
    Provenance provenance;

    friend bool operator==(const ActionData&, const ActionData&) = default;
};

/// Sets H(F) = -(sum of weights at F) on every component.
inline ActionData normalize_moment(ActionData raw)
{
    for (auto& c : raw.components)
        c.H = Rational(-c.weight_sum());
    return raw;
}

/// Rejects structurally impossible data: zero weights, wrong tangent dimension count, duplicate labels.
inline void validate_structure(const ActionData& a)
{
    if (a.n < 1)
        throw Error(ErrorCode::InvalidInput, "n must be positive");
    if (a.components.empty())
        throw Error(ErrorCode::InvalidInput, "no fixed components");
    std::set<std::string> labels;
    for (const auto& c : a.components) {
        if (!labels.insert(c.label).second)
            throw Error(ErrorCode::InvalidInput, "duplicate component label '" + c.label + "'");
        if (c.complex_dim < 0)
            throw Error(ErrorCode::InvalidInput, "component " + c.label + " has negative dimension");
        for (auto w : c.weights)
            if (w == 0)
                throw Error(ErrorCode::InvalidInput,
                            "component " + c.label + " lists a zero weight; encode it in complex_dim");
        if (static_cast<int>(c.weights.size()) + c.complex_dim != a.n)
            throw Error(ErrorCode::InvalidInput, "component " + c.label + ": " + std::to_string(c.weights.size()) +
                                                     " weights + complex_dim " + std::to_string(c.complex_dim) +
                                                     " != n = " + std::to_string(a.n));
    }
}

/// Builds validated, normalized ActionData. Weights are sorted.
inline ActionData make_action(int n, std::vector<FixedComponent> components, Provenance provenance = {})
{
    for (auto& c : components)
        std::sort(c.weights.begin(), c.weights.end());
    ActionData a{n, std::move(components), std::move(provenance)};
    validate_structure(a);
    return normalize_moment(std::move(a));
}

/// Distinct H values, largest first.
inline std::vector<Rational> distinct_levels(const ActionData& a)
{
    std::vector<Rational> levels;
    for (const auto& c : a.components)
        levels.push_back(c.H);
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

/// Labels of the components at the given level, sorted.
inline std::vector<std::string> components_at(const ActionData& a, const Rational& level)
{
    std::vector<std::string> out;
    for (const auto& c : a.components)
        if (c.H == level)
            out.push_back(c.label);
    std::sort(out.begin(), out.end());
    return out;
}

/// Component indices ordered by descending H, ties kept in input order.
inline std::vector<std::size_t> order_by_level(const ActionData& a)
{
    std::vector<std::size_t> idx(a.components.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return a.components[x].H > a.components[y].H; });
    return idx;
}

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;
    std::string component;
    std::optional<Integer> weight;
};

inline constexpr const char* kSemifree = "semifree";
inline constexpr const char* kIsolatedMax = "isolated maximum";
inline constexpr const char* kMonotone = "monotone consistency";

/// Every stored weight must be +-1. Components are scanned from the top level down.
inline CheckResult check_semifree(const ActionData& a)
{
    for (auto i : order_by_level(a)) {
        const auto& c = a.components[i];
        for (auto w : c.weights)
            if (std::abs(w) != 1)
                return {kSemifree, false, "component " + c.label + " has weight " + std::to_string(w), c.label, w};
    }
    return {kSemifree, true, {}, {}, {}};
}

/**
 * The top level must be a single point with all weights -1. Two components
 * at the top (or bottom) level contradict connectivity of the extremal
 * level sets and are rejected as malformed input.
 */
inline CheckResult check_isolated_max(const ActionData& a)
{
    auto levels = distinct_levels(a);
    auto top = components_at(a, levels.front());
    if (top.size() > 1)
        throw Error(ErrorCode::AmbiguousMax, "components " + top[0] + " and " + top[1] + " share the maximal H");
    auto bottom = components_at(a, levels.back());
    if (bottom.size() > 1)
        throw Error(ErrorCode::AmbiguousMin,
                    "components " + bottom[0] + " and " + bottom[1] + " share the minimal H");
    const auto& max = a.components[order_by_level(a).front()];
    if (max.complex_dim != 0)
        return {kIsolatedMax, false,
                "maximum component " + max.label + " has complex dimension " + std::to_string(max.complex_dim),
                max.label, {}};
    for (auto w : max.weights)
        if (w != -1)
            return {kIsolatedMax, false, "maximum component " + max.label + " has weight " + std::to_string(w),
                    max.label, w};
    return {kIsolatedMax, true, {}, {}, {}};
}

/// H(F_max) must equal n and every H must be an integer.
inline CheckResult check_monotone_consistency(const ActionData& a)
{
    const auto& max = a.components[order_by_level(a).front()];
    if (max.H != Rational(a.n))
        return {kMonotone, false, "H(F_max) = " + to_string(max.H) + " but n = " + std::to_string(a.n), max.label,
                {}};
    for (const auto& c : a.components)
        if (!is_integral(c.H))
            return {kMonotone, false, "H(" + c.label + ") = " + to_string(c.H) + " is not an integer", c.label, {}};
    return {kMonotone, true, {}, {}, {}};
}

/**
 * A failed hypothesis. raw_difference carries H_max - s for diagnostics
 * only; it is not a width.
 */
class HypothesisFailed : public Error {
public:
    HypothesisFailed(CheckResult check, std::optional<Rational> raw_difference)
        : Error(ErrorCode::HypothesisFailed, check.name + " check failed: " + check.witness),
          check_(std::move(check)), raw_difference_(raw_difference)
    {
    }

    const CheckResult& check() const noexcept { return check_; }
    const std::optional<Rational>& raw_difference() const noexcept { return raw_difference_; }

private:
    CheckResult check_;
    std::optional<Rational> raw_difference_;
};

struct WidthReport {
    Rational width;
    Rational h_max;
    Rational s;
    std::string max_component;
    std::vector<std::string> second_level_components;
    std::vector<std::string> hypothesis_log;
};

/// H_max - s, or nullopt with fewer than two levels.
inline std::optional<Rational> raw_gap(const ActionData& a)
{
    auto levels = distinct_levels(a);
    if (levels.size() < 2)
        return std::nullopt;
    return levels[0] - levels[1];
}

/**
 * Gromov width H(F_max) - s where s is the second largest critical value,
 * valid once the action is semifree with an isolated maximum and the
 * normalization is monotone. Every hypothesis is checked first.
 */
inline WidthReport gromov_width(const ActionData& a)
{
    auto levels = distinct_levels(a);
    if (levels.size() < 2)
        throw Error(ErrorCode::NotEnoughComponents, "the moment map takes a single critical value");
    WidthReport report;
    for (auto check : {check_semifree, check_isolated_max, check_monotone_consistency}) {
        auto result = check(a);
        if (!result.passed)
            throw HypothesisFailed(std::move(result), levels[0] - levels[1]);
        report.hypothesis_log.push_back(result.name);
    }
    report.h_max = levels[0];
    report.s = levels[1];
    report.width = levels[0] - levels[1];
    report.max_component = a.components[order_by_level(a).front()].label;
    report.second_level_components = components_at(a, levels[1]);
    return report;
}

struct GradientSphere {
    Integer c1;
    Rational area;
};

/// First Chern number m(x) - m(y) and area H(y) - H(x) of a gradient sphere from x up to y.
inline GradientSphere gradient_sphere_invariants(const FixedComponent& x, const FixedComponent& y)
{
    if (!(x.H < y.H))
        throw Error(ErrorCode::NotOrdered, "gradient sphere needs H(" + x.label + ") < H(" + y.label + ")");
    GradientSphere out{x.weight_sum() - y.weight_sum(), y.H - x.H};
    if (Rational(out.c1) != out.area)
        throw Error(ErrorCode::CrossCheckFailed, "c1 = " + std::to_string(out.c1) + " but area = " +
                                                     to_string(out.area) + " between " + x.label + " and " + y.label);
    return out;
}

/// Diagonal action on a product: components multiply, weights concatenate, H and n add.
inline ActionData product_action(std::span<const ActionData> parts)
{
    if (parts.empty())
        throw Error(ErrorCode::EmptyProduct, "product of no factors");
    if (parts.size() == 1)
        return parts.front();

    ActionData out;
    ProductOrigin origin;
    for (const auto& p : parts) {
        out.n += p.n;
        origin.children.push_back(p.provenance);
        if (p.components.empty())
            throw Error(ErrorCode::InvalidInput, "product factor without components");
    }
    out.provenance.origin = std::move(origin);

    std::vector<std::size_t> digit(parts.size(), 0);
    while (true) {
        FixedComponent c;
        c.label = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& f = parts[i].components[digit[i]];
            c.label += (i ? ", " : "") + f.label;
            c.complex_dim += f.complex_dim;
            c.weights.insert(c.weights.end(), f.weights.begin(), f.weights.end());
            c.H += f.H;
        }
        c.label += ")";
        std::sort(c.weights.begin(), c.weights.end());
        out.components.push_back(std::move(c));

        std::size_t i = parts.size();
        while (i > 0 && ++digit[i - 1] == parts[i - 1].components.size())
            digit[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

inline ActionData product_action(std::initializer_list<ActionData> parts)
{
    return product_action(std::span<const ActionData>(parts.begin(), parts.size()));
}

} // namespace gwidth
