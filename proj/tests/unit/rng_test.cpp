//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/rng.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace jmcell {
namespace {

// Known-answer vectors of the Random123 distribution for Philox4x32-10.
TEST(Philox, KnownAnswers)
{
    using A4 = std::array<std::uint32_t, 4>;
    EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
              (A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                            {0xffffffff, 0xffffffff}),
              (A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                            {0xa4093822, 0x299f31d0}),
              (A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Mix64, SplitMixReference)
{
    // First output of SplitMix64 seeded with 0.
    EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
}

TEST(RngStream, ReproducibleAndAddressed)
{
    RngStream a(42, 7, StreamTag::Test, 3);
    RngStream b(42, 7, StreamTag::Test, 3);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(a(), b());
    }
    std::set<std::uint64_t> firsts;
    for (std::uint64_t seed : {1, 2}) {
        for (std::uint64_t index : {0, 1}) {
            for (auto tag : {StreamTag::Fading, StreamTag::Load}) {
                for (std::uint64_t sub : {0, 1}) {
                    firsts.insert(RngStream(seed, index, tag, sub)());
                }
            }
        }
    }
    EXPECT_EQ(firsts.size(), 16u);
}

TEST(RngStream, UniformMoments)
{
    RngStream rng(1, 0, StreamTag::Test);
    constexpr int n = 200'000;
    double sum = 0;
    double sum_sq = 0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
        sum_sq += u * u;
    }
    EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
    EXPECT_NEAR(sum_sq / n, 1.0 / 3, 5 * std::sqrt(4.0 / 45 / n));
}

TEST(RngStream, ExponentialMean)
{
    RngStream rng(2, 0, StreamTag::Test);
    constexpr int n = 200'000;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        const double e = rng.exponential();
        ASSERT_GT(e, 0.0);
        sum += e;
    }
    EXPECT_NEAR(sum / n, 1.0, 5 / std::sqrt(double(n)));
}

class PoissonMean : public ::testing::TestWithParam<double> {};

TEST_P(PoissonMean, MatchesMeanAndVariance)
{
    const double mu = GetParam();
    RngStream rng(3, 0, StreamTag::Test);
    constexpr int n = 100'000;
    double sum = 0;
    double sum_sq = 0;
    for (int i = 0; i < n; ++i) {
        const double k = static_cast<double>(rng.poisson(mu));
        sum += k;
        sum_sq += k * k;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, mu, 5 * std::sqrt(mu / n));
    EXPECT_NEAR(sum_sq / n - mean * mean, mu, 0.03 * mu + 0.01);
}

TEST_P(PoissonMean, ZeroTruncated)
{
    const double mu = GetParam();
    RngStream rng(4, 0, StreamTag::Test);
    constexpr int n = 100'000;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        const auto k = rng.zero_truncated_poisson(mu);
        ASSERT_GE(k, 1u);
        sum += static_cast<double>(k);
    }
    const double expected = mu / -std::expm1(-mu);
    EXPECT_NEAR(sum / n, expected, 6 * std::sqrt(expected / n) + 1e-3);
}

INSTANTIATE_TEST_SUITE_P(Means, PoissonMean, ::testing::Values(0.05, 0.7, 4.0, 35.0, 400.0));

}  // namespace
}  // namespace jmcell
