#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "chromalab/colorings.hpp"
#include "chromalab/rng.hpp"
#include "chromalab/verification.hpp"

using namespace chromalab;

TEST(Rng, ReferenceSequence)
{
    // Reference values published in docs/rng.md.
    EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(splitmix64(1), 0x910a2dec89025cc1ULL);
    EXPECT_EQ(stream_seed(42, 0), 0x7eb3b394ac9efc29ULL);
    EXPECT_EQ(stream_seed(42, 1), 0x1db2233eb3bcaeb3ULL);
    EXPECT_EQ(stream_seed(42, 2), 0x43aa8652ad94b3a2ULL);
    {
        RandomStream ref(42, 0);
        EXPECT_EQ(ref.next_u64(), 0x047a038333a309a1ULL);
        EXPECT_EQ(ref.next_u64(), 0xe4a8336a8c0f79b3ULL);
        EXPECT_EQ(ref.next_u64(), 0x3c31980a50b50886ULL);
        EXPECT_EQ(ref.uniform01(), 0.052139780306312056);
    }
    RandomStream s(42, 0);
    const std::uint64_t first = s.next_u64();
    RandomStream again(42, 0);
    EXPECT_EQ(again.next_u64(), first);
    RandomStream other(42, 1);
    EXPECT_NE(other.next_u64(), first);
    for (int i = 0; i < 1000; ++i) {
        const double u = s.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(SampleSpecTest, Validation)
{
    auto spec = SampleSpec::hyperbolic(DistanceSet::singleton(1.0), 10, 1);
    EXPECT_NO_THROW(spec.validate());
    spec.window.y_min = -1;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    auto plane = SampleSpec::plane(MetricExpr::euclid(), DistanceSet::singleton(1.0), 0, 1);
    EXPECT_THROW(plane.validate(), std::invalid_argument);
    plane.samples = 5;
    plane.window.x_max = plane.window.x_min;
    EXPECT_THROW(plane.validate(), std::invalid_argument);
    plane = SampleSpec::plane(MetricExpr::euclid(), DistanceSet::singleton(1.0), 5, 1);
    plane.metric.reset();
    EXPECT_THROW(plane.validate(), std::invalid_argument);
}

TEST(SamplePair, HyperbolicRemeasures)
{
    const auto spec = SampleSpec::hyperbolic(DistanceSet::singleton(2.0), 1, 3);
    RandomStream rng(3, 0);
    for (int i = 0; i < 5000; ++i) {
        const auto pair = sample_pair(spec, rng);
        ASSERT_TRUE(pair);
        ASSERT_NEAR(pair->distance, 2.0, 1e-9);
        ASSERT_GT(pair->p.x2, 0.0);
        ASSERT_GT(pair->q.x2, 0.0);
    }
}

TEST(SamplePair, EuclidIntervalRemeasures)
{
    const auto D = DistanceSet::interval(1.0, 2.0);
    const auto spec = SampleSpec::plane(MetricExpr::euclid(), D, 1, 3);
    RandomStream rng(3, 0);
    double lo = 3, hi = 0;
    for (int i = 0; i < 5000; ++i) {
        const auto pair = sample_pair(spec, rng);
        ASSERT_TRUE(pair);
        ASSERT_TRUE(D.contains((pair->p - pair->q).norm()));
        lo = std::min(lo, pair->distance);
        hi = std::max(hi, pair->distance);
    }
    // positions along the admissible segment cover the whole interval
    EXPECT_LT(lo, 1.05);
    EXPECT_GT(hi, 1.95);
}

TEST(Statistical, Rho1RealizesNothing)
{
    const auto spec = SampleSpec::plane(builtin({BuiltinKind::Rho1}).expr, DistanceSet::singleton(1.0), 20000, 9);
    const auto r = verify_statistical(constant_coloring(), spec);
    EXPECT_EQ(r.samples_attempted, 20000u);
    EXPECT_EQ(r.samples_realized, 0u);
    EXPECT_TRUE(r.clean());
}

TEST(Statistical, ConstantColoringIsCaught)
{
    auto spec = SampleSpec::plane(MetricExpr::euclid(), DistanceSet::singleton(1.0), 5000, 1);
    spec.max_recorded = 100;
    const auto r = verify_statistical(constant_coloring(), spec);
    EXPECT_EQ(r.samples_realized, 5000u);
    EXPECT_EQ(r.violation_count, r.samples_realized);
    EXPECT_EQ(r.violations.size(), 100u);
    for (const auto& v : r.violations)
        EXPECT_TRUE(spec.distances.contains(v.distance));
}

TEST(Statistical, StripVersusRho2)
{
    const auto spec = SampleSpec::plane(builtin({BuiltinKind::Rho2}).expr, DistanceSet::singleton(1.0), 50000, 2);
    const auto r = verify_statistical(strip_coloring(), spec);
    EXPECT_GT(r.samples_realized, 40000u);
    EXPECT_TRUE(r.clean());
}

TEST(Statistical, GridVersusEuclidInterval)
{
    const auto spec = SampleSpec::plane(MetricExpr::euclid(), DistanceSet::interval(1.0, 2.0), 50000, 4);
    const auto r = verify_statistical(grid_mod_coloring(1 / std::sqrt(2.0), 4), spec);
    EXPECT_EQ(r.samples_realized, 50000u);
    EXPECT_TRUE(r.clean());
}

TEST(Statistical, BadColoringIsCaughtOnHyperbolicPlane)
{
    // Checkerboard for d = 4 used against d = 1 pairs: many neighbours share a tile.
    const auto spec = SampleSpec::hyperbolic(DistanceSet::singleton(1.0), 20000, 5);
    const auto r = verify_statistical(parse_coloring("high-curvature:d=4"), spec);
    EXPECT_GT(r.violation_count, 0u);
}

TEST(Statistical, DeterministicAcrossThreadCounts)
{
    const auto spec = SampleSpec::hyperbolic(DistanceSet::singleton(1.0), 30000, 77);
    const auto c = parse_coloring("high-curvature:d=4");
    const auto a = verify_statistical(c, spec, 1);
    const auto b = verify_statistical(c, spec, 4);
    const auto again = verify_statistical(c, spec, 3);
    EXPECT_EQ(a.violation_count, b.violation_count);
    EXPECT_EQ(a.violations, b.violations);
    EXPECT_EQ(a.violations, again.violations);
    std::ostringstream sa, sb;
    write_report_csv(sa, a);
    write_report_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(a.rng_streams_used, 64u);
}

TEST(Statistical, FewSamplesUseFewerStreams)
{
    const auto spec = SampleSpec::hyperbolic(DistanceSet::singleton(1.0), 10, 77);
    const auto r = verify_statistical(constant_coloring(), spec);
    EXPECT_EQ(r.rng_streams_used, 10u);
    EXPECT_EQ(r.samples_attempted, 10u);
}

TEST(Csv, Layout)
{
    auto spec = SampleSpec::plane(MetricExpr::euclid(), DistanceSet::singleton(1.0), 3, 1);
    const auto r = verify_statistical(constant_coloring(), spec);
    std::ostringstream os;
    write_report_csv(os, r);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line, "p_x,p_y,q_x,q_y,distance,label");
    int rows = 0;
    while (std::getline(is, line) && line[0] != '#')
        ++rows;
    EXPECT_EQ(rows, 3);
    EXPECT_EQ(line, "# summary: attempted=3 realized=3 violations=3 streams=3");
}

TEST(TileDiameter, Examples)
{
    const auto high = verify_tile_diameter(hyperbolic::Checkerboard(std::log(3.0), 4.0), 100000, 1);
    EXPECT_TRUE(high.clean());
    EXPECT_LT(high.max_distance, 4.0);
    EXPECT_GT(high.max_distance, 3.5);

    const auto low = verify_tile_diameter(hyperbolic::Checkerboard(0.4, 0.4), 100000, 2);
    EXPECT_TRUE(low.clean());
    EXPECT_LT(low.max_distance, 0.8);
    EXPECT_NEAR(low.bound, 0.66813, 1e-5);

    const auto tiny = verify_tile_diameter(hyperbolic::Checkerboard(1e-6, 1e-6), 20000, 3);
    EXPECT_TRUE(tiny.clean());
    EXPECT_LT(tiny.max_distance, 2.1e-6);
}
