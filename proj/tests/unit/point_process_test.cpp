//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "jmcell/error.hpp"
#include "jmcell/rng.hpp"

namespace jmcell {
namespace {

using std::numbers::pi;

constexpr double kLambda = 4e-6;

SimulationWindow window_of(double factor, double density = kLambda)
{
    return {factor / std::sqrt(density)};
}

TEST(SimulationWindow, SizeRule)
{
    EXPECT_THROW(window_of(9.9).check_for(kLambda), WindowTooSmall);
    EXPECT_NO_THROW(window_of(10).check_for(kLambda));
    EXPECT_THROW(sample_ppp(kLambda, window_of(5), 1), WindowTooSmall);
    EXPECT_TRUE(window_of(10).contains({0, 0}));
    EXPECT_FALSE(window_of(10).contains({6000, 0}));
}

TEST(SamplePpp, OriginFirstAndInsideWindow)
{
    const SimulationWindow w = window_of(10);
    const BsProcess p = sample_ppp(kLambda, w, 11, 3);
    ASSERT_GT(p.size(), 1u);
    EXPECT_EQ(p.points()[0], (Point2{0, 0}));
    EXPECT_EQ(p.ids()[0], BsProcess::kOriginId);
    EXPECT_DOUBLE_EQ(p.density(), kLambda);
    for (const Point2& q : p.points()) {
        EXPECT_TRUE(w.contains(q));
    }
    std::vector<std::uint64_t> ids(p.ids().begin(), p.ids().end());
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(SamplePpp, MeanCountMatchesDensity)
{
    const SimulationWindow w = window_of(10);
    const double expected = kLambda * w.area();  // 400
    constexpr int n = 400;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        sum += static_cast<double>(sample_ppp(kLambda, w, 5, i).size() - 1);
    }
    EXPECT_NEAR(sum / n, expected, 5 * std::sqrt(expected / n));
}

TEST(SamplePpp, NestedWindowsShareStations)
{
    const BsProcess small = sample_ppp(kLambda, window_of(10), 9, 2);
    const BsProcess large = sample_ppp(kLambda, window_of(20), 9, 2);
    std::size_t found = 0;
    for (const Point2& q : small.points()) {
        found += std::count(large.points().begin(), large.points().end(), q) > 0;
    }
    EXPECT_EQ(found, small.size());
}

TEST(SamplePpp, DensityRescaling)
{
    const BsProcess a = sample_ppp(kLambda, window_of(10), 13, 1);
    const BsProcess b = sample_ppp(4 * kLambda, window_of(10, 4 * kLambda), 13, 1);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(b.points()[i].x, 0.5 * a.points()[i].x, 1e-9);
        EXPECT_NEAR(b.points()[i].y, 0.5 * a.points()[i].y, 1e-9);
    }
}

TEST(SamplePpp, PatchAgreesWithWindow)
{
    const double h = 3 / std::sqrt(kLambda);
    const BsProcess patch = sample_ppp_patch(kLambda, h, 21, 4);
    const BsProcess full = sample_ppp(kLambda, window_of(10), 21, 4);
    for (const Point2& q : patch.points()) {
        EXPECT_GT(std::count(full.points().begin(), full.points().end(), q), 0);
    }
}

BsProcess line_process(std::vector<Point2> pts)
{
    std::vector<std::uint64_t> ids{BsProcess::kOriginId};
    pts.insert(pts.begin(), Point2{0, 0});
    for (std::size_t i = 1; i < pts.size(); ++i) {
        ids.push_back(i);
    }
    return BsProcess(std::move(pts), std::move(ids), kLambda);
}

TEST(JmCell, MembershipRules)
{
    const BsProcess p = line_process({{100, 0}});
    EXPECT_TRUE(is_in_jm_cell({49, 0}, {0, 0}, p, 80));
    EXPECT_FALSE(is_in_jm_cell({51, 0}, {0, 0}, p, 80));   // nearer to the neighbour
    EXPECT_FALSE(is_in_jm_cell({0, 81}, {0, 0}, p, 80));   // outside the disk
    EXPECT_TRUE(is_in_jm_cell({-79, 0}, {0, 0}, p, 80));
}

TEST(JmCell, IsolatedStationHasFullDisk)
{
    const BsProcess p = line_process({{1000, 0}});
    RngStream rng(1, 0, StreamTag::Test);
    EXPECT_DOUBLE_EQ(estimate_cell_area({0, 0}, p, 100, 512, rng), pi * 100 * 100);
}

TEST(JmCell, HalfPlaneCutArea)
{
    // A neighbour at distance 2a cuts the disk with a chord at distance a.
    const double r = 100;
    const double a = 30;
    const BsProcess p = line_process({{2 * a, 0}});
    const double segment = r * r * std::acos(a / r) - a * std::sqrt(r * r - a * a);
    const double expected = pi * r * r - segment;
    RngStream rng(2, 0, StreamTag::Test);
    constexpr std::size_t n = 200'000;
    const double est = estimate_cell_area({0, 0}, p, r, n, rng);
    const double frac = expected / (pi * r * r);
    EXPECT_NEAR(est, expected, 5 * pi * r * r * std::sqrt(frac * (1 - frac) / n));
}

TEST(JmTessellation, MatchesBruteForce)
{
    const BsProcess p = sample_ppp(kLambda, window_of(10), 17, 0);
    const double r_c = 300;
    const JmTessellation tess(p, r_c);
    RngStream rng(3, 0, StreamTag::Test);
    for (std::size_t bs : {std::size_t{0}, std::size_t{1}, std::size_t{5}}) {
        const Point2 c = p.points()[bs];
        for (int i = 0; i < 2000; ++i) {
            const Point2 q = uniform_in_disk(c, 1.2 * r_c, rng);
            ASSERT_EQ(tess.contains(bs, q), is_in_jm_cell(q, c, p, r_c));
        }
        for (const Point2& cand : tess.candidates(bs)) {
            EXPECT_LE(distance(cand, c), 2 * r_c + 1e-9);
        }
    }
    RngStream r1(4, 0, StreamTag::Test);
    RngStream r2(4, 0, StreamTag::Test);
    EXPECT_EQ(tess.estimate_area(0, 1024, r1), estimate_cell_area({0, 0}, p, r_c, 1024, r2));
    for (int i = 0; i < 200; ++i) {
        const Point2 u = tess.sample_uniform(0, r1);
        EXPECT_TRUE(is_in_jm_cell(u, {0, 0}, p, r_c));
    }
}

TEST(UniformInDisk, RadialLaw)
{
    RngStream rng(5, 0, StreamTag::Test);
    constexpr int n = 100'000;
    int inner = 0;
    for (int i = 0; i < n; ++i) {
        const Point2 q = uniform_in_disk({10, -5}, 2, rng);
        const double d = distance(q, {10, -5});
        ASSERT_LE(d, 2.0);
        inner += d <= 1;
    }
    EXPECT_NEAR(double(inner) / n, 0.25, 5 * std::sqrt(0.25 * 0.75 / n));
}

}  // namespace
}  // namespace jmcell
