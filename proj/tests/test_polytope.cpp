#include <map>
#include <random>

#include <gtest/gtest.h>

#include <gwidth/io.hpp>
#include <gwidth/polytope.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace gwidth;
using gwidth::test::code_of;

namespace {

DelzantPolytope fig1() { return load_polytope(GWIDTH_DATA_DIR "/fig1.json"); }

RationalPoint pt(std::initializer_list<Integer> xs)
{
    RationalPoint out;
    for (auto x : xs)
        out.emplace_back(x);
    return out;
}

DelzantPolytope cube(std::size_t n, Integer side)
{
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < n; ++i) {
        auto e = LatticeVector::zero(n);
        e[i] = 1;
        hs.push_back({e, 0});
        hs.push_back({-e, Rational(-side)});
    }
    return DelzantPolytope(n, hs);
}

} // namespace

TEST(Polytope, Fig1Vertices)
{
    auto v = enumerate_vertices(fig1());
    ASSERT_EQ(v.size(), 4u);
    std::map<RationalPoint, std::vector<std::size_t>> got;
    for (const auto& x : v)
        got[x.position] = x.incident_facets;
    EXPECT_EQ(got.at(pt({1, 0})), (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(got.at(pt({3, 0})), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(got.at(pt({0, 3})), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(got.at(pt({0, 1})), (std::vector<std::size_t>{2, 3}));
}

TEST(Polytope, Fig1Edges)
{
    auto p = fig1();
    auto v = enumerate_vertices(p);
    auto e = enumerate_edges(p, v);
    ASSERT_EQ(e.size(), 4u);
    Rational total = 0;
    for (const auto& s : e) {
        EXPECT_LT(s.from, s.to);
        EXPECT_TRUE(s.direction.is_primitive());
        total += s.lattice_length;
    }
    // Lengths 2 (bottom), 3 (diagonal), 2 (left), 1 (cut corner).
    EXPECT_EQ(total, 8);
}

TEST(Polytope, Fig1MonotoneNormalization)
{
    auto m = monotone_normalize(fig1());
    EXPECT_EQ(m.translation, pt({-1, -1}));
    for (const auto& f : m.reflexive.facets())
        EXPECT_EQ(f.offset, -1);
    std::vector<RationalPoint> pos;
    for (const auto& v : enumerate_vertices(m.reflexive))
        pos.push_back(v.position);
    EXPECT_EQ(pos, (std::vector<RationalPoint>{pt({-1, 0}), pt({-1, 2}), pt({0, -1}), pt({2, -1})}));
}

TEST(Polytope, RectangleIsNotMonotone)
{
    auto p = load_polytope(GWIDTH_DATA_DIR "/rectangle.json");
    EXPECT_EQ(code_of([&] { monotone_normalize(p); }), ErrorCode::NotMonotone);
}

TEST(Polytope, HalfIntegralTranslationIsNotMonotone)
{
    // The square [0,1]^2 would need t = (-1/2, -1/2): offsets line up but vertices are not integral.
    auto p = cube(2, 1);
    EXPECT_EQ(code_of([&] { monotone_normalize(p); }), ErrorCode::NotMonotone);
}

TEST(Polytope, ConstructorValidation)
{
    EXPECT_EQ(code_of([] { DelzantPolytope(2, {{{0, 0}, 0}}); }), ErrorCode::ZeroVector);
    EXPECT_EQ(code_of([] { DelzantPolytope(2, {{{2, 0}, 0}}); }), ErrorCode::NotPrimitive);
    EXPECT_EQ(code_of([] { DelzantPolytope(2, {{{1, 0, 0}, 0}}); }), ErrorCode::DimensionMismatch);
}

TEST(Polytope, EnumerationErrors)
{
    DelzantPolytope half(2, {{{1, 0}, 0}, {{0, 1}, 0}});
    EXPECT_EQ(code_of([&] { enumerate_vertices(half); }), ErrorCode::Unbounded);
    DelzantPolytope strip(2, {{{1, 0}, 0}, {{-1, 0}, -1}});
    EXPECT_EQ(code_of([&] { enumerate_vertices(strip); }), ErrorCode::Unbounded);
    DelzantPolytope empty(2, {{{1, 0}, 0}, {{-1, 0}, 1}, {{0, 1}, 0}, {{0, -1}, -1}});
    EXPECT_EQ(code_of([&] { enumerate_vertices(empty); }), ErrorCode::Empty);
    // Triangle with a non-smooth corner: normals (1,0),(1,2) have determinant 2.
    DelzantPolytope cone(2, {{{1, 0}, 0}, {{-1, 2}, 0}, {{0, -1}, -4}});
    EXPECT_EQ(code_of([&] { enumerate_vertices(cone); }), ErrorCode::NotDelzant);
    // A facet that never touches the square.
    DelzantPolytope redundant(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, -2}, {{0, -1}, -2}, {{-1, -1}, -6}});
    EXPECT_EQ(code_of([&] { enumerate_vertices(redundant); }), ErrorCode::NotDelzant);
}

TEST(Polytope, FindVertexIndex)
{
    auto v = enumerate_vertices(fig1());
    EXPECT_EQ(v[find_vertex_index(v, pt({0, 3}))].position, pt({0, 3}));
    EXPECT_EQ(code_of([&] { find_vertex_index(v, pt({1, 1})); }), ErrorCode::NotAVertex);
}

TEST(Polytope, VerticesMatchBruteForce)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 2 + trial % 2;
        auto p = oracle::random_delzant(n, n == 2 ? 8 : 7, rng);
        auto fast = enumerate_vertices(p);
        auto slow = oracle::brute_vertices(p);
        ASSERT_EQ(fast.size(), slow.size()) << polytope_to_json(p).dump();
        std::sort(slow.begin(), slow.end());
        for (std::size_t i = 0; i < fast.size(); ++i) {
            EXPECT_EQ(fast[i].position, slow[i].position);
            EXPECT_EQ(fast[i].incident_facets, slow[i].tight);
        }
    }
}

TEST(Polytope, PolygonsHaveAsManyEdgesAsVertices)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = oracle::random_delzant(2, 9, rng);
        auto v = enumerate_vertices(p);
        EXPECT_EQ(enumerate_edges(p, v).size(), v.size());
        EXPECT_EQ(v.size(), p.size());
    }
}

TEST(Polytope, EdgeDirectionsAreDualToNormals)
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = oracle::random_delzant(2 + trial % 2, 7, rng);
        for (const auto& v : enumerate_vertices(p)) {
            const auto n = v.incident_facets.size();
            ASSERT_EQ(v.edge_directions.size(), n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    EXPECT_EQ(pairing(p.facet(v.incident_facets[i]).normal, v.edge_directions[j]), i == j ? 1 : 0);
        }
    }
}

TEST(Polytope, EdgesJoinVerticesAlongTheirDirections)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = oracle::random_delzant(3, 7, rng);
        auto v = enumerate_vertices(p);
        auto edges = enumerate_edges(p, v);
        // Simple polytope: every vertex has degree n.
        EXPECT_EQ(2 * edges.size(), 3 * v.size());
        for (const auto& e : edges) {
            auto q = detail::add_scaled(v[e.from].position, e.lattice_length, e.direction);
            EXPECT_EQ(q, v[e.to].position);
        }
    }
}

TEST(Polytope, MonotoneNormalizationIsIdempotentAndReflexive)
{
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = oracle::random_monotone_polygon(rng);
        auto m = monotone_normalize(p);
        auto again = monotone_normalize(m.reflexive);
        EXPECT_EQ(again.translation, pt({0, 0}));
        EXPECT_EQ(again.reflexive, m.reflexive);
        for (const auto& v : enumerate_vertices(m.reflexive))
            for (const auto& c : v.position)
                EXPECT_TRUE(is_integral(c));
    }
}

TEST(Polytope, ThreeDimensionalCubeAndSimplex)
{
    auto c = cube(3, 2);
    auto v = enumerate_vertices(c);
    EXPECT_EQ(v.size(), 8u);
    EXPECT_EQ(enumerate_edges(c, v).size(), 12u);
    auto m = monotone_normalize(c);
    EXPECT_EQ(m.translation, pt({-1, -1, -1}));

    auto p3 = load_polytope(GWIDTH_DATA_DIR "/p3.json");
    EXPECT_EQ(enumerate_vertices(p3).size(), 4u);
    EXPECT_EQ(enumerate_edges(p3).size(), 6u);
    EXPECT_NO_THROW(monotone_normalize(p3));
}
