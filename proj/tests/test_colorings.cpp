#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "chromalab/colorings.hpp"
#include "oracles.hpp"

using namespace chromalab;

TEST(Strip, Parity)
{
    const auto c = strip_coloring();
    EXPECT_EQ(c({0.5, 7}), ColorLabel{0});
    EXPECT_EQ(c({1.5, -3}), ColorLabel{1});
    EXPECT_EQ(c({1.0, 0}), ColorLabel{1});
    EXPECT_EQ(c({-0.5, 0}), ColorLabel{1});
    EXPECT_EQ(c.color_count(), 2);
}

TEST(Grid, LabelsAndCount)
{
    const auto c = grid_mod_coloring(1 / std::sqrt(2.0), 4);
    EXPECT_EQ(c({0, 0}), (ColorLabel{0, 0}));
    EXPECT_EQ(c.color_count(), 16);
    EXPECT_EQ(c({-0.1, 0}), (ColorLabel{3, 0}));
    EXPECT_THROW(grid_mod_coloring(0.5, 1), std::invalid_argument);
    EXPECT_THROW(grid_mod_coloring(0.0, 3), std::invalid_argument);
}

TEST(Grid, SameLabelSquaresAreFarApartInSomeAxis)
{
    const double eps = 0.3;
    const std::int64_t n = 5;
    const auto c = grid_mod_coloring(eps, n);
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int i = 0; i < 50000; ++i) {
        const Point2 p{u(rng), u(rng)}, q{u(rng), u(rng)};
        if (c(p) != c(q))
            continue;
        const auto ax = std::llround(std::floor(p.x1 / eps)) - std::llround(std::floor(q.x1 / eps));
        const auto ay = std::llround(std::floor(p.x2 / eps)) - std::llround(std::floor(q.x2 / eps));
        ASSERT_EQ(ax % n, 0);
        ASSERT_EQ(ay % n, 0);
    }
}

TEST(Interval1d, Examples)
{
    const auto c = interval_1d_coloring(3);
    EXPECT_EQ(c(2.5), ColorLabel{2});
    EXPECT_EQ(c(-0.5), ColorLabel{2});
    const auto c2 = interval_1d_coloring(2);
    EXPECT_NE(c2(0.5), c2(1.5));
    EXPECT_THROW(interval_1d_coloring(1), std::invalid_argument);
}

TEST(Product, CountsAndIdentityFactor)
{
    const auto p = product_coloring(interval_1d_coloring(2), interval_1d_coloring(3));
    EXPECT_EQ(p.color_count(), 6);
    std::set<ColorLabel> seen;
    for (double x = 0.5; x < 6; x += 1)
        for (double y = 0.5; y < 6; y += 1)
            seen.insert(p({x, y}));
    EXPECT_EQ(seen.size(), 6u);

    const auto id = product_coloring(constant_line_coloring(), interval_1d_coloring(3));
    EXPECT_EQ(id.color_count(), 3);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-20, 20);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng), b = u(rng);
        EXPECT_EQ(id({u(rng), a}) == id({u(rng), b}), interval_1d_coloring(3)(a) == interval_1d_coloring(3)(b));
    }
}

TEST(Squares, LabelsAndPrecondition)
{
    const auto c = countable_square_coloring(0.7);
    EXPECT_EQ(c({0, 0}), c({0.1, 0.1}));
    EXPECT_FALSE(c.is_finite());
    EXPECT_THROW(countable_square_coloring(0.8), std::invalid_argument);
}

TEST(Squares, DistanceOnePairsNeverShareASquare)
{
    const auto c = countable_square_coloring(0.7);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-50, 50), th(0, 6.283185307179586);
    for (int i = 0; i < 100000; ++i) {
        const Point2 p{u(rng), u(rng)};
        const double t = th(rng);
        ASSERT_NE(c(p), c(p + Point2{std::cos(t), std::sin(t)}));
    }
}

TEST(ParseColoring, Names)
{
    EXPECT_EQ(parse_coloring("strip").color_count(), 2);
    EXPECT_EQ(parse_coloring("constant").color_count(), 1);
    EXPECT_EQ(parse_coloring("grid:eps=0.7071,n=4").color_count(), 16);
    EXPECT_FALSE(parse_coloring("squares:side=0.5").is_finite());
    EXPECT_EQ(parse_coloring("interval-product:d1=1,d2=2").color_count(), 6);
    EXPECT_EQ(parse_coloring("high-curvature:d=4").color_count(), 20);
    EXPECT_EQ(parse_coloring("low-curvature:d=0.6").color_count(), 12);
    EXPECT_THROW(parse_coloring("zebra"), std::invalid_argument);
    EXPECT_THROW(parse_coloring("grid:eps=0.5"), std::invalid_argument);
    EXPECT_THROW(parse_coloring("high-curvature:d=1"), std::invalid_argument);
}

TEST(GridClique, ExactUnitDistances)
{
    const auto w = grid_clique(1, 2);
    ASSERT_EQ(w.points.size(), 6u);
    int pairs = 0;
    for (std::size_t i = 0; i < w.points.size(); ++i)
        for (std::size_t j = i + 1; j < w.points.size(); ++j) {
            EXPECT_EQ(w.metric(w.points[i], w.points[j]), 1.0);
            ++pairs;
        }
    EXPECT_EQ(pairs, 15);
    EXPECT_EQ(w.max_residual, 0.0);
    EXPECT_EQ(grid_clique(1, 1).points.size(), 4u);
    EXPECT_THROW(grid_clique(0, 0), std::invalid_argument);
}

TEST(PackingClique, HexagonAtTwo)
{
    const auto w = euclid_packing_clique(2.0);
    ASSERT_EQ(w.points.size(), 7u);
    std::set<long> seen;
    for (std::size_t i = 0; i < w.points.size(); ++i)
        for (std::size_t j = i + 1; j < w.points.size(); ++j) {
            const double r = (w.points[i] - w.points[j]).norm();
            const bool known = std::abs(r - 1) < 1e-12 || std::abs(r - std::sqrt(3.0)) < 1e-12 ||
                               std::abs(r - 2) < 1e-12;
            EXPECT_TRUE(known) << r;
        }
    EXPECT_LE(w.max_residual, 1e-12);
}

TEST(PackingClique, SmallAndCountsMatchDirectScan)
{
    EXPECT_EQ(euclid_packing_clique(1.01).points.size(), 2u);
    EXPECT_THROW(euclid_packing_clique(1.0), std::invalid_argument);
    for (double d : {2.0, 3.7, 8.0, 20.0}) {
        const auto w = euclid_packing_clique(d);
        const double r = d / 2 + 1e-12 * std::max(1.0, d / 2);
        const int best = std::max({oracle::hex_points_in_disc(0, 0, r), oracle::hex_points_in_disc(0.5, 0, r),
                                   oracle::hex_points_in_disc(0.5, std::sqrt(3.0) / 6, r)});
        EXPECT_EQ(static_cast<int>(w.points.size()), best) << d;
        EXPECT_LE(w.max_residual, 1e-9) << d;
    }
}
