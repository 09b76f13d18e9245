//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/numerics.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "jmcell/error.hpp"

namespace jmcell::numerics {
namespace {

using std::numbers::pi;

TEST(Quadrature, SmoothIntegrands)
{
    EXPECT_NEAR(integrate_1d([](double x) { return std::sin(x); }, 0, pi), 2.0, 1e-12);
    EXPECT_NEAR(integrate_1d([](double x) { return x * x * x; }, -1, 2), 15.0 / 4, 1e-12);
    EXPECT_NEAR(integrate_1d([](double x) { return std::exp(-x * x); }, 0, 1.5),
                std::sqrt(pi) / 2 * boost::math::erf(1.5), 1e-12);
}

TEST(Quadrature, EndpointSingularity)
{
    EXPECT_NEAR(integrate_1d([](double x) { return 1 / std::sqrt(x); }, 0, 1), 2.0, 1e-8);
    EXPECT_NEAR(integrate_1d([](double x) { return std::log(x); }, 0, 1), -1.0, 1e-8);
}

TEST(Quadrature, RejectsBadBounds)
{
    auto f = [](double x) { return std::cos(x); };
    EXPECT_THROW(integrate_1d(f, 1, 0), InvalidArgument);
    EXPECT_THROW(integrate_1d(f, 0, std::numeric_limits<double>::infinity()), InvalidArgument);
    EXPECT_EQ(integrate_1d(f, 2, 2), 0);
}

TEST(Quadrature, SemiInfinite)
{
    EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0), 1.0, 1e-10);
    EXPECT_NEAR(integrate_semi_infinite([](double x) { return 1 / (1 + x * x); }, 0), pi / 2,
                1e-9);
    // Gamma(2.5) = integral of x^1.5 e^-x
    EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::pow(x, 1.5) * std::exp(-x); }, 0),
                boost::math::tgamma(2.5), 1e-9);
}

TEST(Quadrature, Box3d)
{
    const std::array<Interval, 3> box = {Interval{0, 1}, Interval{0, 2}, Interval{-1, 1}};
    EXPECT_NEAR(integrate_3d([](double x, double y, double z) { return x * y * z * z; }, box),
                0.5 * 2 * (2.0 / 3), 1e-9);
    EXPECT_NEAR(integrate_3d([](double x, double y, double z) { return std::exp(x + y + z); }, box),
                (std::exp(1) - 1) * (std::exp(2) - 1) * (std::exp(1) - std::exp(-1)), 1e-7);
}

TEST(Quadrature, BudgetExhaustionThrows)
{
    QuadratureSpec spec;
    spec.max_subdivisions = 2;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 1e-300;
    EXPECT_THROW(integrate_1d([](double x) { return std::sin(1 / x); }, 1e-4, 1, spec),
                 NonConvergence);
}

TEST(Quadrature, SpecValidation)
{
    QuadratureSpec spec;
    spec.rel_tol = -1;
    EXPECT_THROW(spec.validate(), InvalidArgument);
    RootFindSpec root;
    root.max_iter = 0;
    EXPECT_THROW(root.validate(), InvalidArgument);
}

TEST(Solve2d, Intersection)
{
    auto F = [](const Pair& x) -> Pair { return {x[0] * x[0] + x[1] * x[1] - 4, x[0] - x[1]}; };
    const Pair root = solve_2d(F, {1, 0.5});
    EXPECT_NEAR(root[0], std::sqrt(2.0), 1e-8);
    EXPECT_NEAR(root[1], std::sqrt(2.0), 1e-8);
}

TEST(Solve2d, NoRootThrows)
{
    auto F = [](const Pair& x) -> Pair { return {x[0] * x[0] + 1, x[1] * x[1] + 1}; };
    EXPECT_THROW(solve_2d(F, {0.3, 0.3}), NoRoot);
}

TEST(MonotoneCubic, InterpolatesNodesAndLines)
{
    const MonotoneCubic line({0, 1, 3, 4}, {1, 3, 7, 9});
    for (double x : {0.0, 0.5, 1.0, 2.2, 3.9, 4.0}) {
        EXPECT_NEAR(line(x), 1 + 2 * x, 1e-12);
    }
    EXPECT_THROW(MonotoneCubic({0, 0}, {1, 2}), InvalidArgument);
    EXPECT_THROW(MonotoneCubic({0}, {1}), InvalidArgument);
}

TEST(MonotoneCubic, PreservesMonotonicity)
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> step(0.01, 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x{0};
        std::vector<double> y{0};
        for (int i = 0; i < 12; ++i) {
            x.push_back(x.back() + step(gen));
            // flat runs and jumps stress the slope limiter
            y.push_back(y.back() + (i % 3 == 0 ? 0 : step(gen) * step(gen) * 10));
        }
        const MonotoneCubic f(x, y);
        double prev = f(x.front());
        for (int k = 1; k <= 2000; ++k) {
            const double xv = x.front() + (x.back() - x.front()) * k / 2000;
            const double v = f(xv);
            ASSERT_GE(v, prev - 1e-12);
            prev = v;
        }
    }
}

}  // namespace
}  // namespace jmcell::numerics
