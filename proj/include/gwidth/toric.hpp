#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "circle_action.hpp"
#include "error.hpp"
#include "lattice.hpp"
#include "polytope.hpp"

namespace gwidth {

/// The subcircle t -> exp(t xi) of the torus acting on a monotone toric manifold.
struct SubcircleSpec {
    LatticeVector xi;
    DelzantPolytope polytope; // reflexive position: every offset is -1
};

/// Checks xi (nonzero, primitive, right length) and that the polytope is in reflexive position.
inline SubcircleSpec make_subcircle(LatticeVector xi, DelzantPolytope reflexive)
{
    if (xi.dim() != reflexive.dim())
        throw Error(ErrorCode::DimensionMismatch, "direction " + to_string(xi) + " does not match polytope dimension " +
                                                      std::to_string(reflexive.dim()));
    if (xi.is_zero())
        throw Error(ErrorCode::ZeroVector, "subcircle direction is zero");
    if (!xi.is_primitive())
        throw Error(ErrorCode::NotPrimitive, "direction " + to_string(xi) + " is not primitive");
    for (std::size_t i = 0; i < reflexive.size(); ++i)
        if (reflexive.facet(i).offset != -1)
            throw Error(ErrorCode::NotMonotone, "facet " + facet_name(i) + " is not at offset -1");
    return {std::move(xi), std::move(reflexive)};
}

struct ToricSetup {
    MonotoneNormalization normalization;
    SubcircleSpec spec;
};

/// Moves an arbitrary monotone Delzant polytope to reflexive position and attaches xi.
inline ToricSetup prepare_subcircle(const DelzantPolytope& polytope, LatticeVector xi)
{
    auto norm = monotone_normalize(polytope);
    auto spec = make_subcircle(std::move(xi), norm.reflexive);
    return {std::move(norm), std::move(spec)};
}

/// "p23" for the vertex D2 ∩ D3 (1-based facet numbers).
inline std::string vertex_label(const std::vector<std::size_t>& facets)
{
    bool wide = std::any_of(facets.begin(), facets.end(), [](std::size_t i) { return i >= 9; });
    std::string out = "p";
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (wide && i)
            out += "_";
        out += std::to_string(facets[i] + 1);
    }
    return out;
}

/// "D1" for a facet, "D1∩D2" for a deeper face.
inline std::string face_name(const std::vector<std::size_t>& facets)
{
    std::string out;
    for (std::size_t i = 0; i < facets.size(); ++i)
        out += (i ? "∩" : "") + facet_name(facets[i]);
    return out;
}

namespace detail {

inline std::vector<Integer> raw_weights(const LatticeVector& xi, const VertexFigure& v)
{
    std::vector<Integer> out;
    for (const auto& e : v.edge_directions)
        out.push_back(pairing(xi, e));
    return out;
}

inline std::vector<Integer> nonzero_sorted(std::vector<Integer> w)
{
    w.erase(std::remove(w.begin(), w.end(), 0), w.end());
    std::sort(w.begin(), w.end());
    return w;
}

} // namespace detail

/// Circle weights <xi, e> over the primitive edge directions at v, zeros included.
inline std::vector<Integer> vertex_weights(const SubcircleSpec& spec, const VertexFigure& v)
{
    auto vertices = enumerate_vertices(spec.polytope);
    auto idx = find_vertex_index(vertices, v.position);
    return detail::raw_weights(spec.xi, vertices[idx]);
}

struct FaceIsotropy {
    std::vector<std::size_t> facets; // facets containing the face; empty = whole polytope
    Integer order;                   // 0 = fixed pointwise
};

struct IsotropyReport {
    std::vector<FaceIsotropy> faces;

    bool semifree() const
    {
        return std::all_of(faces.begin(), faces.end(), [](const FaceIsotropy& f) { return f.order <= 1; });
    }

    /// First face (in report order) whose stratum has a finite stabilizer of order >= 2.
    const FaceIsotropy* first_non_free() const
    {
        for (const auto& f : faces)
            if (f.order > 1)
                return &f;
        return nullptr;
    }
};

inline std::string describe_face(const std::vector<std::size_t>& facets)
{
    if (facets.empty())
        return "open orbit";
    return (facets.size() == 1 ? "facet " : "face ") + face_name(facets);
}

/**
 * Isotropy order of the subcircle on the stratum over every face of the
 * polytope, ordered by codimension and then lexicographically. In a simple
 * polytope every subset of a vertex's facets cuts out a face.
 */
inline IsotropyReport isotropy_report(const SubcircleSpec& spec)
{
    std::set<std::vector<std::size_t>> faces;
    for (const auto& v : enumerate_vertices(spec.polytope)) {
        const auto& inc = v.incident_facets;
        for (std::size_t mask = 0; mask < (std::size_t{1} << inc.size()); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t j = 0; j < inc.size(); ++j)
                if (mask & (std::size_t{1} << j))
                    face.push_back(inc[j]);
            faces.insert(std::move(face));
        }
    }
    std::vector<std::vector<std::size_t>> ordered(faces.begin(), faces.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    IsotropyReport report;
    for (auto& face : ordered) {
        std::vector<LatticeVector> normals;
        for (auto i : face)
            normals.push_back(spec.polytope.facet(i).normal);
        Integer order = quotient_order(spec.xi, normals);
        report.faces.push_back({std::move(face), order});
    }
    return report;
}

/// Semifree verdict from the isotropy report, with a face witness on failure.
inline CheckResult check_toric_semifree(const IsotropyReport& report)
{
    if (const auto* bad = report.first_non_free())
        return {kSemifree, false, describe_face(bad->facets) + " isotropy order " + std::to_string(bad->order),
                face_name(bad->facets), bad->order};
    return {kSemifree, true, {}, {}, {}};
}

/**
 * Fixed point data of the subcircle. Fixed components are the connected
 * pieces of the graph of vertices joined by zero-weight edges; each spans a
 * face whose dimension is the component's complex dimension.
 */
inline ActionData toric_action(const SubcircleSpec& spec)
{
    const auto& p = spec.polytope;
    const std::size_t n = p.dim();
    auto vertices = enumerate_vertices(p);

    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (const auto& e : vertices[a].edge_directions) {
            if (pairing(spec.xi, e) != 0)
                continue;
            auto b = find_vertex_index(vertices, detail::walk_edge(p, vertices[a].position, e).endpoint);
            parent[find(a)] = find(b);
        }
    }

    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> group_of_root(vertices.size(), SIZE_MAX);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        auto r = find(v);
        if (group_of_root[r] == SIZE_MAX) {
            group_of_root[r] = groups.size();
            groups.emplace_back();
        }
        groups[group_of_root[r]].push_back(v);
    }

    std::vector<FixedComponent> components;
    for (const auto& group : groups) {
        std::vector<std::size_t> common = vertices[group.front()].incident_facets;
        for (auto v : group) {
            std::vector<std::size_t> next;
            const auto& inc = vertices[v].incident_facets;
            std::set_intersection(common.begin(), common.end(), inc.begin(), inc.end(), std::back_inserter(next));
            common = std::move(next);
        }
        const int face_dim = static_cast<int>(n - common.size());

        FixedComponent c;
        c.label = group.size() == 1 ? vertex_label(common) : face_name(common);
        c.complex_dim = face_dim;
        bool first = true;
        for (auto v : group) {
            auto raw = detail::raw_weights(spec.xi, vertices[v]);
            int zeros = static_cast<int>(std::count(raw.begin(), raw.end(), 0));
            auto w = detail::nonzero_sorted(std::move(raw));
            if (zeros != face_dim)
                throw Error(ErrorCode::InconsistentComponent,
                            "vertex " + to_string(vertices[v].position) + " has " + std::to_string(zeros) +
                                " zero weights but spans a face of dimension " + std::to_string(face_dim));
            if (first)
                c.weights = std::move(w);
            else if (w != c.weights)
                throw Error(ErrorCode::InconsistentComponent,
                            "weights differ across component " + c.label + " at " + to_string(vertices[v].position));
            first = false;
        }
        components.push_back(std::move(c));
    }

    auto action = make_action(static_cast<int>(n), std::move(components), Provenance{ToricOrigin{spec.xi, p.facets()}});
    std::stable_sort(action.components.begin(), action.components.end(),
                     [](const FixedComponent& a, const FixedComponent& b) {
                         return a.H != b.H ? a.H > b.H : a.label < b.label;
                     });
    return action;
}

struct EdgeCheck {
    EdgeSegment edge;
    RationalPoint from_position; // reflexive coordinates
    RationalPoint to_position;
    Integer c1;                  // m(lower) - m(upper), from the vertex weights
    Rational area;               // <xi, upper - lower>, from the vertex positions
    Rational lattice_length;     // from the edge geometry
};

/**
 * For every edge not fixed by the circle, compares the three independent
 * readings of the gradient sphere it carries: Chern number from weights,
 * area from moment values, and lattice length. Requires a semifree action.
 */
inline std::vector<EdgeCheck> edge_cross_check(const SubcircleSpec& spec)
{
    auto semifree = check_toric_semifree(isotropy_report(spec));
    if (!semifree.passed)
        throw HypothesisFailed(std::move(semifree), raw_gap(toric_action(spec)));

    auto vertices = enumerate_vertices(spec.polytope);
    auto edges = enumerate_edges(spec.polytope, vertices);

    auto as_component = [&](std::size_t v) {
        auto raw = detail::raw_weights(spec.xi, vertices[v]);
        FixedComponent c;
        c.label = vertex_label(vertices[v].incident_facets);
        c.complex_dim = static_cast<int>(std::count(raw.begin(), raw.end(), 0));
        c.weights = detail::nonzero_sorted(std::move(raw));
        c.H = Rational(-c.weight_sum());
        return c;
    };

    std::vector<EdgeCheck> out;
    for (const auto& e : edges) {
        if (pairing(spec.xi, e.direction) == 0)
            continue;
        auto a = as_component(e.from), b = as_component(e.to);
        bool up = a.H < b.H;
        const auto& lower = up ? a : b;
        const auto& upper = up ? b : a;
        const auto& lower_pos = vertices[up ? e.from : e.to].position;
        const auto& upper_pos = vertices[up ? e.to : e.from].position;

        auto sphere = gradient_sphere_invariants(lower, upper);
        Rational area = pairing(spec.xi, upper_pos) - pairing(spec.xi, lower_pos);
        EdgeCheck check{e, vertices[e.from].position, vertices[e.to].position, sphere.c1, area, e.lattice_length};
        if (Rational(check.c1) != check.area || check.area != check.lattice_length)
            throw Error(ErrorCode::CrossCheckFailed, "edge " + to_string(check.from_position) + "-" +
                                                         to_string(check.to_position) + ": c1 = " +
                                                         std::to_string(check.c1) + ", area = " +
                                                         to_string(check.area) + ", lattice length = " +
                                                         to_string(check.lattice_length));
        out.push_back(std::move(check));
    }
    return out;
}

} // namespace gwidth
