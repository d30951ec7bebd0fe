#pragma once

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace gwidth {

/// The constraint <x, normal> >= offset, normal primitive and inward-pointing.
struct HalfSpace {
    LatticeVector normal;
    Rational offset;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Name of facet i in reports: facets are D1, D2, ... in input order.
inline std::string facet_name(std::size_t index) { return "D" + std::to_string(index + 1); }

/**
 * A moment polytope in half-space form. Construction only checks that the
 * half-spaces are well formed; boundedness and the Delzant condition are
 * verified by enumerate_vertices.
 */
class DelzantPolytope {
public:
    DelzantPolytope(std::size_t dim, std::vector<HalfSpace> facets) : dim_(dim), facets_(std::move(facets))
    {
        if (dim_ == 0)
            throw Error(ErrorCode::InvalidInput, "polytope dimension must be positive");
        if (facets_.empty())
            throw Error(ErrorCode::InvalidInput, "polytope has no facets");
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            const auto& n = facets_[i].normal;
            if (n.dim() != dim_)
                throw Error(ErrorCode::DimensionMismatch,
                            "normal of " + facet_name(i) + " has length " + std::to_string(n.dim()));
            if (n.is_zero())
                throw Error(ErrorCode::ZeroVector, "normal of " + facet_name(i) + " is zero");
            if (!n.is_primitive())
                throw Error(ErrorCode::NotPrimitive, "normal of " + facet_name(i) + " is not primitive");
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return facets_.size(); }
    const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
    const HalfSpace& facet(std::size_t i) const { return facets_[i]; }

    /// <x, n_i> - offset_i; zero on the facet, positive inside.
    Rational slack(std::size_t i, const RationalPoint& x) const
    {
        return pairing(facets_[i].normal, x) - facets_[i].offset;
    }

    bool contains(const RationalPoint& x) const
    {
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (slack(i, x) < 0)
                return false;
        return true;
    }

    /// The polytope P + t.
    DelzantPolytope translated(const RationalPoint& t) const
    {
        auto facets = facets_;
        for (auto& f : facets)
            f.offset += pairing(f.normal, t);
        return DelzantPolytope(dim_, std::move(facets));
    }

    friend bool operator==(const DelzantPolytope&, const DelzantPolytope&) = default;

private:
    std::size_t dim_;
    std::vector<HalfSpace> facets_;
};

/**
 * A vertex together with its tangent cone. edge_directions[j] is the
 * primitive vector pointing from the vertex along the edge that leaves
 * facet incident_facets[j], so <edge_directions[j], normal_i> = delta_ij.
 */
struct VertexFigure {
    RationalPoint position;
    std::vector<std::size_t> incident_facets;
    std::vector<LatticeVector> edge_directions;
};

/// A 1-face between vertices `from` < `to` (indices into the vertex list).
struct EdgeSegment {
    std::size_t from;
    std::size_t to;
    LatticeVector direction; // primitive, pointing from `from` to `to`
    Rational lattice_length;
};

namespace detail {

inline RationalPoint add_scaled(const RationalPoint& p, const Rational& t, const LatticeVector& e)
{
    RationalPoint out = p;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += t * Rational(e[i]);
    return out;
}

inline VertexFigure make_vertex_figure(const DelzantPolytope& p, RationalPoint position,
                                       std::vector<std::size_t> incident)
{
    const std::size_t n = p.dim();
    if (incident.size() != n)
        throw Error(ErrorCode::NotDelzant, "vertex " + to_string(position) + " lies on " +
                                               std::to_string(incident.size()) + " facets, expected " +
                                               std::to_string(n));
    std::vector<LatticeVector> normals;
    for (auto i : incident)
        normals.push_back(p.facet(i).normal);
    if (std::abs(determinant(normals)) != 1)
        throw Error(ErrorCode::NotDelzant, "normals at vertex " + to_string(position) + " are not a Z-basis");
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = normals[r][c];
    auto inv = inverse(m);
    std::vector<LatticeVector> edges;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Integer> e(n);
        for (std::size_t r = 0; r < n; ++r)
            e[r] = (*inv)[r][j].numerator(); // unimodular, so integral
        edges.emplace_back(std::move(e));
    }
    return {std::move(position), std::move(incident), std::move(edges)};
}

struct EdgeWalk {
    Rational length;
    RationalPoint endpoint;
};

/// Follows the ray position + t*e until it leaves the polytope.
inline EdgeWalk walk_edge(const DelzantPolytope& p, const RationalPoint& position, const LatticeVector& e)
{
    std::optional<Rational> best;
    for (std::size_t k = 0; k < p.size(); ++k) {
        Integer rate = pairing(e, p.facet(k).normal);
        if (rate >= 0)
            continue;
        Rational t = p.slack(k, position) / Rational(-rate);
        if (!best || t < *best)
            best = t;
    }
    if (!best)
        throw Error(ErrorCode::Unbounded, "unbounded edge from " + to_string(position) + " along " + to_string(e));
    return {*best, add_scaled(position, *best, e)};
}

inline std::vector<std::size_t> tight_facets(const DelzantPolytope& p, const RationalPoint& x)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.slack(i, x) == 0)
            out.push_back(i);
    return out;
}

/// Calls f(subset) for each k-subset of {0..n-1} in lexicographic order until f returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    if (k > n)
        return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        if (f(idx))
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Some basic feasible point of { A x >= b } when A has full column rank.
inline std::optional<std::vector<Rational>> find_vertex(const RationalMatrix& a, const std::vector<Rational>& b,
                                                         std::size_t cols)
{
    std::optional<std::vector<Rational>> found;
    for_each_subset(a.size(), cols, [&](const std::vector<std::size_t>& subset) {
        RationalMatrix sub;
        std::vector<Rational> rhs;
        for (auto i : subset) {
            sub.push_back(a[i]);
            rhs.push_back(b[i]);
        }
        auto sol = solve(sub, rhs, cols);
        if (sol.status != SolveStatus::Unique)
            return false;
        for (std::size_t r = 0; r < a.size(); ++r) {
            Rational lhs = 0;
            for (std::size_t c = 0; c < cols; ++c)
                lhs += a[r][c] * sol.x[c];
            if (lhs < b[r])
                return false;
        }
        found = std::move(sol.x);
        return true;
    });
    return found;
}

inline RationalMatrix normal_matrix(const DelzantPolytope& p)
{
    RationalMatrix a;
    for (const auto& f : p.facets()) {
        std::vector<Rational> row;
        for (auto c : f.normal.coords())
            row.emplace_back(c);
        a.push_back(std::move(row));
    }
    return a;
}

} // namespace detail

/**
 * All vertices of P in lexicographic order of position. The vertex set is
 * found by walking the edge graph from one starting vertex; every visited
 * vertex is checked to be simple and unimodular.
 */
inline std::vector<VertexFigure> enumerate_vertices(const DelzantPolytope& p)
{
    const std::size_t n = p.dim();
    auto a = detail::normal_matrix(p);
    std::vector<Rational> b;
    for (const auto& f : p.facets())
        b.push_back(f.offset);

    auto ech = detail::reduce_rows(a, n);
    if (ech.pivots.size() < n) {
        // Lower rank: feasibility is decided on a column basis of the normal matrix.
        detail::RationalMatrix reduced;
        for (const auto& row : a) {
            std::vector<Rational> r;
            for (auto c : ech.pivots)
                r.push_back(row[c]);
            reduced.push_back(std::move(r));
        }
        if (ech.pivots.empty() || detail::find_vertex(reduced, b, ech.pivots.size()))
            throw Error(ErrorCode::Unbounded, "facet normals do not span; the polyhedron is unbounded");
        throw Error(ErrorCode::Empty, "the half-spaces have empty intersection");
    }

    auto start = detail::find_vertex(a, b, n);
    if (!start)
        throw Error(ErrorCode::Empty, "the half-spaces have empty intersection");

    std::set<RationalPoint> seen;
    std::vector<VertexFigure> vertices;
    std::deque<RationalPoint> queue{*start};
    seen.insert(*start);
    while (!queue.empty()) {
        RationalPoint v = std::move(queue.front());
        queue.pop_front();
        auto fig = detail::make_vertex_figure(p, v, detail::tight_facets(p, v));
        for (const auto& e : fig.edge_directions) {
            auto walk = detail::walk_edge(p, fig.position, e);
            if (seen.insert(walk.endpoint).second)
                queue.push_back(walk.endpoint);
        }
        vertices.push_back(std::move(fig));
    }

    std::vector<bool> active(p.size(), false);
    for (const auto& v : vertices)
        for (auto i : v.incident_facets)
            active[i] = true;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!active[i])
            throw Error(ErrorCode::NotDelzant, "facet " + facet_name(i) + " is redundant (touches no vertex)");

    std::sort(vertices.begin(), vertices.end(),
              [](const VertexFigure& x, const VertexFigure& y) { return x.position < y.position; });
    return vertices;
}

inline std::size_t find_vertex_index(const std::vector<VertexFigure>& vertices, const RationalPoint& x)
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x,
                               [](const VertexFigure& v, const RationalPoint& q) { return v.position < q; });
    if (it == vertices.end() || it->position != x)
        throw Error(ErrorCode::NotAVertex, to_string(x) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices.begin());
}

/// Edges of P given its vertex list (as returned by enumerate_vertices).
inline std::vector<EdgeSegment> enumerate_edges(const DelzantPolytope& p, const std::vector<VertexFigure>& vertices)
{
    std::vector<EdgeSegment> edges;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (const auto& e : vertices[a].edge_directions) {
            auto walk = detail::walk_edge(p, vertices[a].position, e);
            std::size_t b = find_vertex_index(vertices, walk.endpoint);
            if (a < b)
                edges.push_back({a, b, e, walk.length});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const EdgeSegment& x, const EdgeSegment& y) {
        return std::pair(x.from, x.to) < std::pair(y.from, y.to);
    });
    return edges;
}

inline std::vector<EdgeSegment> enumerate_edges(const DelzantPolytope& p)
{
    return enumerate_edges(p, enumerate_vertices(p));
}

struct MonotoneNormalization {
    RationalPoint translation;
    DelzantPolytope reflexive;
};

/**
 * Finds the translation t with <t, n_i> + offset_i = -1 for every facet,
 * i.e. the position in which the polytope is reflexive. Fails with
 * NotMonotone if no such t exists or the translated vertices are not
 * lattice points.
 */
inline MonotoneNormalization monotone_normalize(const DelzantPolytope& p)
{
    enumerate_vertices(p);
    auto a = detail::normal_matrix(p);
    std::vector<Rational> rhs;
    for (const auto& f : p.facets())
        rhs.push_back(Rational(-1) - f.offset);
    auto sol = detail::solve(a, rhs, p.dim());
    if (sol.status != detail::SolveStatus::Unique)
        throw Error(ErrorCode::NotMonotone, "no translation moves every facet to offset -1");
    auto reflexive = p.translated(sol.x);
    for (const auto& v : enumerate_vertices(reflexive))
        for (const auto& c : v.position)
            if (!is_integral(c))
                throw Error(ErrorCode::NotMonotone, "reflexive-position vertex " + to_string(v.position) +
                                                        " is not a lattice point");
    return {std::move(sol.x), std::move(reflexive)};
}

} // namespace gwidth
