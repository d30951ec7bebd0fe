#include <gtest/gtest.h>

#include <gwidth/grassmannian.hpp>
#include <gwidth/io.hpp>
#include <gwidth/seidel.hpp>
#include <gwidth/toric.hpp>

#include "test_util.hpp"

using namespace gwidth;
using gwidth::test::code_of;

TEST(Seidel, Gr24IsFullyDetermined)
{
    auto st = seidel_structure(grassmannian_action({2, 4}));
    EXPECT_EQ(st.n, 4);
    EXPECT_EQ(st.s, 0);
    EXPECT_TRUE(st.fully_determined());
    EXPECT_EQ(st.entry(4).status, CoefficientStatus::PointClass);
    for (int i = 0; i < 4; ++i)
        EXPECT_EQ(st.entry(i).status, CoefficientStatus::ForcedZero);
    EXPECT_EQ(seidel_formula(st), "S(φ) = [pt] ⊗ q^{−4}");
    EXPECT_NO_THROW(degree_check(st));
}

TEST(Seidel, Fig1)
{
    auto setup = prepare_subcircle(load_polytope(GWIDTH_DATA_DIR "/fig1.json"), {0, 1});
    auto st = seidel_structure(toric_action(setup.spec));
    EXPECT_EQ(seidel_formula(st), "S(φ) = [pt] ⊗ q^{−2}");
}

TEST(Seidel, UnconstrainedTail)
{
    // Gr(2,8) x S^2: n = 13, width 2, s = 11.
    FixedComponent north{"N", 0, {-1}, 0}, south{"S", 0, {1}, 0};
    auto a = product_action({grassmannian_action({2, 8}), make_action(1, {north, south})});
    auto st = seidel_structure(a);
    EXPECT_EQ(st.n, 13);
    EXPECT_EQ(st.s, 11);
    EXPECT_FALSE(st.fully_determined());
    EXPECT_EQ(to_string(st.entry(10).status), "unconstrained");
    EXPECT_EQ(to_string(st.entry(11).status), "zero");
    EXPECT_EQ(to_string(st.entry(13).status), "point class");
    const std::string head = "S(φ) = [pt] ⊗ q^{−13} + a_10 ⊗ q^{−10} + a_9";
    EXPECT_EQ(seidel_formula(st).substr(0, head.size()), head);
    EXPECT_NE(seidel_formula(st).find("a_1 ⊗ q^{−1} + a_0"), std::string::npos);
}

TEST(Seidel, HypothesisFailurePropagates)
{
    auto setup = prepare_subcircle(load_polytope(GWIDTH_DATA_DIR "/fig1.json"), {-1, -2});
    EXPECT_THROW(seidel_structure(toric_action(setup.spec)), HypothesisFailed);
}

TEST(Seidel, DegreeCheckRejectsBadTables)
{
    auto st = seidel_structure(grassmannian_action({1, 3}));
    auto shifted = st;
    shifted.entries[1].q_exponent = -2;
    EXPECT_EQ(code_of([&] { degree_check(shifted); }), ErrorCode::DegreeMismatch);
    auto repeated = st;
    repeated.entries[1] = repeated.entries[2];
    EXPECT_EQ(code_of([&] { degree_check(repeated); }), ErrorCode::DegreeMismatch);
    auto missing = st;
    missing.entries.pop_back();
    EXPECT_EQ(code_of([&] { degree_check(missing); }), ErrorCode::DegreeMismatch);
}

TEST(Seidel, WindowAgreesWithWidth)
{
    // Zero coefficients occupy exactly the indices s..n-1, and s = n - width.
    for (int m = 2; m <= 8; ++m)
        for (int k = 1; k <= m - k; ++k) {
            auto a = grassmannian_action({k, m});
            auto report = gromov_width(a);
            auto st = seidel_structure(a);
            degree_check(st);
            EXPECT_EQ(Rational(st.s), report.s);
            EXPECT_EQ(st.n - st.s, report.width);
            for (int i = 0; i < st.n; ++i)
                EXPECT_EQ(st.entry(i).status == CoefficientStatus::ForcedZero, i >= st.s);
        }
}
