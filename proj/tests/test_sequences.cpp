#include "bsets/sequences.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bsets;

TEST(Arrays, BuiltInPrefixesAreArrays)
{
    for (auto gen : {CompletedArrayGen::geometric(), CompletedArrayGen::power()}) {
        auto a = gen.prefix(60);
        EXPECT_EQ(a.size(), 60u);
        EXPECT_TRUE(array_violation(a).empty());
        for (std::size_t n = gen.first_index(); n + 1 < gen.first_index() + 60; ++n)
            EXPECT_GE(gen.norm(n), gen.norm(n + 1));
    }
}

TEST(Arrays, GeometricPointsAreDyadic)
{
    auto g = CompletedArrayGen::geometric();
    EXPECT_EQ(g.exact_point(1), (Point2{make_rat(1, 2), 1}));
    EXPECT_EQ(g.exact_point(2), (Point2{make_rat(1, 2), make_rat(1, 2)}));
    EXPECT_EQ(g.exact_point(3), (Point2{make_rat(1, 4), make_rat(1, 2)}));
    EXPECT_THROW(g.point(0), std::out_of_range);
    EXPECT_THROW(CompletedArrayGen::power().point(1), std::out_of_range);
}

TEST(Arrays, CustomMustAlternate)
{
    EXPECT_THROW(CompletedArrayGen::custom({}), std::invalid_argument);
    EXPECT_THROW(CompletedArrayGen::custom({pt(0, 0), pt(1, 1)}), std::invalid_argument);
    auto c = CompletedArrayGen::custom({pt(0, 0), pt(1, 0), pt(1, 1)});
    EXPECT_EQ(c.available(), 3u);
    EXPECT_THROW(c.point(4), std::out_of_range);
}

TEST(Series, PowerFamilyHarmonicSumsDiverge)
{
    auto r = alternating_sums(CompletedArrayGen::power(), rules::alternating_harmonic(), 1000);
    EXPECT_GT(r.max_abs_partial, 3.0);
    EXPECT_EQ(r.verdict, SeriesVerdict::Diverges);
    EXPECT_EQ(r.terms, 1000u);
    EXPECT_EQ(r.partial_sums.size(), 1000u);
}

TEST(Series, GeometricDecayConverges)
{
    auto r = alternating_sums(CompletedArrayGen::geometric(), rules::geometric_decay(), 200);
    EXPECT_EQ(r.verdict, SeriesVerdict::Converges);
    EXPECT_TRUE(r.cauchy_tail);
    EXPECT_LT(r.max_abs_partial, 1.0);
}

TEST(Series, ConstantStaysBounded)
{
    for (double c : {0.5, -2.0, 7.0}) {
        auto r = alternating_sums(CompletedArrayGen::geometric(), rules::constant(c), 501);
        EXPECT_LE(r.max_abs_partial, std::abs(c) + 1e-12);
    }
}

TEST(Series, MaxIsMaxOfPartials)
{
    auto r = alternating_sums(CompletedArrayGen::power(), rules::alternating_harmonic(), 300);
    double m = 0;
    for (double s : r.partial_sums)
        m = std::max(m, std::abs(s));
    EXPECT_EQ(m, r.max_abs_partial);
}

TEST(Series, Preconditions)
{
    EXPECT_THROW(alternating_sums(CompletedArrayGen::geometric(), rules::constant(1), 1), std::invalid_argument);
    auto c = CompletedArrayGen::custom({pt(0, 0), pt(1, 0), pt(1, 1)});
    EXPECT_THROW(alternating_sums(c, rules::constant(1), 4), std::invalid_argument);
}

TEST(TailRatio, GeometricIsBoundedByFour)
{
    auto r = tail_ratio(CompletedArrayGen::geometric(), 50, 2000);
    ASSERT_EQ(r.ratios.size(), 50u);
    for (auto [k, v] : r.ratios)
        EXPECT_LE(v, 4.0) << k;
    EXPECT_TRUE(r.appears_bounded);
    EXPECT_LT(r.remainder_bound, 1e-100);
}

TEST(TailRatio, PowerGrows)
{
    auto r = tail_ratio(CompletedArrayGen::power(), 100, 10000);
    double best = 0;
    for (auto [k, v] : r.ratios)
        best = std::max(best, v);
    EXPECT_GT(best, 10.0);
    EXPECT_TRUE(std::isinf(r.remainder_bound));
}

TEST(TailRatio, LastTermOfCustomIsOne)
{
    auto c = CompletedArrayGen::custom({pt(3, 3), pt(2, 3), pt(2, 2), pt(1, 2)});
    auto r = tail_ratio(c, 4, 4);
    EXPECT_DOUBLE_EQ(r.ratios.back().second, 1.0);
    EXPECT_THROW(tail_ratio(c, 5, 4), std::invalid_argument);
    EXPECT_THROW(tail_ratio(c, 3, 5), std::invalid_argument);
}

TEST(GeometricSplit, SumRule)
{
    auto s = geometric_decompose([](double x, double y) { return x + y; }, 40, 1e-9);
    EXPECT_TRUE(s.ok);
    EXPECT_LT(s.residual, 1e-9);
    for (auto [k, q] : s.g_quotient)
        if (k <= 20)
            EXPECT_NEAR(q, 1.0, 1e-6) << k;
    for (auto [k, q] : s.h_quotient)
        if (k <= 20)
            EXPECT_NEAR(q, 1.0, 1e-6) << k;
}

TEST(GeometricSplit, ProductRule)
{
    auto s = geometric_decompose([](double x, double y) { return x * y; }, 40, 1e-9);
    EXPECT_TRUE(s.ok);
    EXPECT_NEAR(s.g_quotient[19].second, 0.0, 1e-5);
    EXPECT_NEAR(s.h_quotient[20].second, 0.0, 1e-5);
}

TEST(GeometricSplit, ZeroRule)
{
    auto s = geometric_decompose([](double, double) { return 0.0; }, 40, 1e-9);
    EXPECT_TRUE(s.ok);
    EXPECT_EQ(s.residual, 0.0);
    for (auto [k, v] : s.g)
        EXPECT_EQ(v, 0.0);
    for (auto [k, v] : s.h)
        EXPECT_EQ(v, 0.0);
}

TEST(GeometricSplit, ShiftCarriedByG)
{
    auto s = geometric_decompose([](double x, double y) { return 5 + x - y; }, 30, 1e-9);
    EXPECT_TRUE(s.ok);
}

TEST(GeometricSplit, ResidualWeaklyDecreasesWithDepth)
{
    std::vector<PlaneRule> rules{[](double x, double y) { return x + y; },
                                 [](double x, double y) { return x * y; },
                                 [](double, double) { return 0.0; }};
    for (const auto& f : rules) {
        double prev = INFINITY;
        for (std::size_t d = 2; d <= 40; d += 2) {
            double r = geometric_decompose(f, d, 1e-9).residual;
            EXPECT_LE(r, prev + 1e-15) << d;
            prev = r;
        }
    }
}

TEST(GeometricSplit, Preconditions)
{
    EXPECT_THROW(geometric_decompose([](double, double) { return 0.0; }, 0, 1e-9), std::invalid_argument);
}

TEST(WArea, KnownValues)
{
    EXPECT_EQ(w_area(1), make_rat(1, 14));
    EXPECT_EQ(w_area(make_rat(1, 4)), make_rat(1, 112));
    EXPECT_EQ(w_area(0), Rat(0));
    // spike 1 runs over [1/4, 1/4 + 1/64] with its apex a quarter of the way
    // in, so a quarter of its area 1/16 lies left of the apex
    EXPECT_EQ(w_area(make_rat(1, 4) + make_rat(1, 256)), make_rat(1, 112) + make_rat(1, 64));
    EXPECT_EQ(w_area(make_rat(1, 4) + make_rat(1, 64)), make_rat(1, 14));
    EXPECT_THROW(w_area(-1), std::domain_error);
    EXPECT_THROW(w_area(make_rat(3, 2)), std::domain_error);
}

TEST(WArea, Nondecreasing)
{
    Rat prev = 0;
    for (long i = 0; i <= 2048; ++i) {
        Rat x = make_rat(i, 2048);
        Rat w = w_area(x);
        EXPECT_GE(w, prev) << to_string(x);
        prev = w;
    }
    // finely around the first two spikes
    prev = w_area(make_rat(1, 16));
    for (long i = 0; i <= 600; ++i) {
        Rat x = make_rat(1, 16) + make_rat(i, 600 * 64);
        Rat w = w_area(x);
        EXPECT_GE(w, prev);
        prev = w;
    }
}

TEST(CrossIncrement, SmallerStepsMeetTheBound)
{
    for (long e : {3, 4}) {
        Rat d = pow2(-2 * e);
        auto r = cross_g_increment(d, 30);
        EXPECT_TRUE(r.holds) << e << " value " << to_double(r.value) << " bound " << r.bound;
    }
    EXPECT_DOUBLE_EQ(cross_g_increment(pow2(-6), 30).bound, 1.0 / 16);
}

TEST(CrossIncrement, ValueAtOneSixteenth)
{
    // every term captures exactly one whole spike, so the sum is a partial
    // geometric series short of 1/14
    auto r = cross_g_increment(pow2(-4), 30);
    EXPECT_EQ(r.value, spike_tail(1) - spike_tail(32));
    EXPECT_NEAR(to_double(r.value), 1.0 / 14, 1e-9);
}

TEST(CrossIncrement, MonotoneInD)
{
    Rat prev = 0;
    for (long i = 1; i < 64; ++i) {
        Rat v = cross_g_increment(make_rat(i, 256), 12).value;
        EXPECT_GE(v, prev) << i;
        prev = v;
    }
    EXPECT_THROW(cross_g_increment(0, 5), std::domain_error);
    EXPECT_THROW(cross_g_increment(make_rat(1, 4), 5), std::domain_error);
}
