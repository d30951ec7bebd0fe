#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <gwidth/circle_action.hpp>
#include <gwidth/grassmannian.hpp>
#include <gwidth/io.hpp>

#include "test_util.hpp"

using namespace gwidth;
using gwidth::test::code_of;

namespace {

FixedComponent comp(std::string label, int dim, std::vector<Integer> weights)
{
    return {std::move(label), dim, std::move(weights), 0};
}

/// Rotation of the monotone 2-sphere.
ActionData sphere()
{
    return make_action(1, {comp("N", 0, {-1}), comp("S", 0, {1})});
}

ActionData gr24() { return load_action(GWIDTH_DATA_DIR "/gr24.json"); }

} // namespace

TEST(CircleAction, MakeActionNormalizesMoment)
{
    auto a = gr24();
    ASSERT_EQ(a.components.size(), 3u);
    EXPECT_EQ(a.components[0].H, 4);
    EXPECT_EQ(a.components[1].H, 0);
    EXPECT_EQ(a.components[2].H, -4);
    for (const auto& c : a.components)
        EXPECT_EQ(c.H, Rational(-c.weight_sum()));
}

TEST(CircleAction, WeightsAreSorted)
{
    auto a = make_action(2, {comp("x", 0, {1, -1}), comp("y", 0, {1, 1}), comp("z", 0, {-1, -1})});
    EXPECT_EQ(a.components[0].weights, (std::vector<Integer>{-1, 1}));
}

TEST(CircleAction, StructuralValidation)
{
    EXPECT_EQ(code_of([] { make_action(1, {comp("a", 0, {0}), comp("b", 0, {1})}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { make_action(2, {comp("a", 0, {-1}), comp("b", 0, {1, 1})}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { make_action(1, {comp("a", 0, {-1}), comp("a", 0, {1})}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { make_action(1, {}); }), ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { make_action(0, {comp("a", 0, {})}); }), ErrorCode::InvalidInput);
}

TEST(CircleAction, LevelsAndOrdering)
{
    auto a = gr24();
    EXPECT_EQ(distinct_levels(a), (std::vector<Rational>{4, 0, -4}));
    EXPECT_EQ(components_at(a, 0), (std::vector<std::string>{"middle"}));
    EXPECT_TRUE(components_at(a, 1).empty());
}

TEST(CircleAction, SphereWidth)
{
    auto r = gromov_width(sphere());
    EXPECT_EQ(r.width, 2);
    EXPECT_EQ(r.h_max, 1);
    EXPECT_EQ(r.s, -1);
    EXPECT_EQ(r.max_component, "N");
    EXPECT_EQ(r.second_level_components, (std::vector<std::string>{"S"}));
    EXPECT_EQ(r.hypothesis_log, (std::vector<std::string>{kSemifree, kIsolatedMax, kMonotone}));
}

TEST(CircleAction, Gr24Width)
{
    auto r = gromov_width(gr24());
    EXPECT_EQ(r.width, 4);
    EXPECT_EQ(r.h_max, 4);
    EXPECT_EQ(r.s, 0);
    EXPECT_EQ(r.second_level_components, (std::vector<std::string>{"middle"}));
}

TEST(CircleAction, NonSemifreeWitness)
{
    auto a = make_action(2, {comp("top", 0, {-1, -1}), comp("mid", 0, {-2, 1}), comp("low", 0, {1, 2})});
    auto res = check_semifree(a);
    EXPECT_FALSE(res.passed);
    EXPECT_EQ(res.component, "mid");
    EXPECT_EQ(res.weight, -2);
    EXPECT_EQ(res.witness, "component mid has weight -2");
    try {
        gromov_width(a);
        FAIL();
    } catch (const HypothesisFailed& e) {
        EXPECT_EQ(e.code(), ErrorCode::HypothesisFailed);
        EXPECT_EQ(e.check().name, kSemifree);
        EXPECT_EQ(e.raw_difference(), Rational(1));
    }
}

TEST(CircleAction, NonIsolatedMaximum)
{
    auto a = make_action(1, {comp("circle", 1, {}), comp("pole", 0, {1})});
    EXPECT_TRUE(check_semifree(a).passed);
    auto res = check_isolated_max(a);
    EXPECT_FALSE(res.passed);
    EXPECT_EQ(res.component, "circle");
    EXPECT_THROW(gromov_width(a), HypothesisFailed);
}

TEST(CircleAction, MaximumWithPositiveWeight)
{
    // H(top) = 0 exceeds H(bottom) = -2, but top is not a local maximum.
    auto a = make_action(2, {comp("top", 0, {-1, 1}), comp("bottom", 0, {1, 1})});
    auto res = check_isolated_max(a);
    EXPECT_FALSE(res.passed);
    EXPECT_EQ(res.weight, 1);
}

TEST(CircleAction, AmbiguousExtremes)
{
    auto two_max = make_action(1, {comp("a", 0, {-1}), comp("b", 0, {-1}), comp("c", 0, {1})});
    EXPECT_EQ(code_of([&] { gromov_width(two_max); }), ErrorCode::AmbiguousMax);
    auto two_min = make_action(1, {comp("a", 0, {-1}), comp("b", 0, {1}), comp("c", 0, {1})});
    EXPECT_EQ(code_of([&] { gromov_width(two_min); }), ErrorCode::AmbiguousMin);
}

TEST(CircleAction, SingleLevel)
{
    auto a = make_action(1, {comp("all", 1, {})});
    EXPECT_EQ(code_of([&] { gromov_width(a); }), ErrorCode::NotEnoughComponents);
    EXPECT_FALSE(raw_gap(a).has_value());
}

TEST(CircleAction, MonotoneConsistency)
{
    auto a = sphere();
    EXPECT_TRUE(check_monotone_consistency(a).passed);
    a.components[0].H = 2;
    auto res = check_monotone_consistency(a);
    EXPECT_FALSE(res.passed);
    EXPECT_EQ(res.witness, "H(F_max) = 2 but n = 1");
    a = sphere();
    a.components[1].H = Rational(-1, 2);
    EXPECT_FALSE(check_monotone_consistency(a).passed);
}

TEST(CircleAction, GradientSphere)
{
    auto a = gr24();
    auto g = gradient_sphere_invariants(a.components[1], a.components[0]);
    EXPECT_EQ(g.c1, 4);
    EXPECT_EQ(g.area, 4);
    EXPECT_EQ(code_of([&] { gradient_sphere_invariants(a.components[0], a.components[1]); }), ErrorCode::NotOrdered);
    auto bad = a.components[0];
    bad.H = 5;
    EXPECT_EQ(code_of([&] { gradient_sphere_invariants(a.components[1], bad); }), ErrorCode::CrossCheckFailed);
}

TEST(CircleAction, ProductOfSpheres)
{
    auto p = product_action({sphere(), sphere()});
    EXPECT_EQ(p.n, 2);
    ASSERT_EQ(p.components.size(), 4u);
    EXPECT_EQ(p.components[0].label, "(N, N)");
    EXPECT_EQ(p.components[0].H, 2);
    EXPECT_EQ(p.components[3].label, "(S, S)");
    EXPECT_EQ(p.components[3].H, -2);
    EXPECT_EQ(p.provenance.describe(), "product of [abstract input; abstract input]");
    auto r = gromov_width(p);
    EXPECT_EQ(r.width, 2);
    EXPECT_EQ(r.second_level_components, (std::vector<std::string>{"(N, S)", "(S, N)"}));
}

TEST(CircleAction, ProductEdgeCases)
{
    EXPECT_EQ(code_of([] { product_action(std::span<const ActionData>{}); }), ErrorCode::EmptyProduct);
    auto s = sphere();
    EXPECT_EQ(product_action({s}), s);
}

TEST(CircleAction, ProductWidthIsMinimum)
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<ActionData> parts;
        Rational expected = 0;
        std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i) {
            int m = 2 + static_cast<int>(rng() % 4);
            int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(m / 2));
            parts.push_back(grassmannian_action({k, m}));
            Rational w = gromov_width(parts.back()).width;
            expected = i == 0 ? w : std::min(expected, w);
        }
        auto p = product_action(std::span<const ActionData>(parts));
        auto r = gromov_width(p);
        EXPECT_EQ(r.width, expected);
        Integer n = 0;
        for (const auto& part : parts)
            n += part.n;
        EXPECT_EQ(r.h_max, n);
    }
}

TEST(CircleAction, WidthIgnoresComponentOrder)
{
    std::mt19937 rng(43);
    auto base = product_action({grassmannian_action({2, 5}), sphere()});
    auto ref = gromov_width(base);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = base;
        std::shuffle(a.components.begin(), a.components.end(), rng);
        auto r = gromov_width(a);
        EXPECT_EQ(r.width, ref.width);
        EXPECT_EQ(r.h_max, ref.h_max);
        EXPECT_EQ(r.s, ref.s);
        EXPECT_EQ(r.max_component, ref.max_component);
        EXPECT_EQ(r.second_level_components, ref.second_level_components);
    }
}
