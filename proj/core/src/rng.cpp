//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/rng.hpp"

#include <cmath>

#include "jmcell/error.hpp"

namespace jmcell {

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept
{
    constexpr std::uint32_t m0 = 0xD2511F53u;
    constexpr std::uint32_t m1 = 0xCD9E8D57u;
    constexpr std::uint32_t w0 = 0x9E3779B9u;
    constexpr std::uint32_t w1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += w0;
        key[1] += w1;
    }
    return ctr;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t index, StreamTag tag,
                     std::uint64_t sub) noexcept
{
    const std::uint64_t k = mix64(mix64(seed) ^ mix64(sub ^ 0x5bd1e9955bd1e995ULL)
                                  ^ mix64(index >> 32));
    key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    counter_ = {0u, 0u, static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(index)};
}

RngStream::result_type RngStream::operator()() noexcept
{
    if (used_ >= 4) {
        block_ = philox4x32_10(counter_, key_);
        if (++counter_[0] == 0) {
            ++counter_[1];
        }
        used_ = 0;
    }
    const std::uint64_t lo = block_[used_];
    const std::uint64_t hi = block_[used_ + 1];
    used_ += 2;
    return (hi << 32) | lo;
}

double RngStream::exponential() noexcept
{
    return -std::log(uniform_pos());
}

std::uint64_t RngStream::poisson(double mean)
{
    if (!(mean >= 0) || !std::isfinite(mean)) {
        throw InvalidArgument("poisson mean must be finite and non-negative");
    }
    if (mean == 0) {
        return 0;
    }
    if (mean < 10) {
        // Sequential inversion.
        double p = std::exp(-mean);
        double cdf = p;
        const double u = uniform();
        std::uint64_t k = 0;
        while (u >= cdf && p > 0) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }

    // Transformed rejection with squeeze (Hoermann 1993, PTRS).
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2);
    const double log_mean = std::log(mean);
    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr) {
            return static_cast<std::uint64_t>(k);
        }
        if (k < 0 || (us < 0.013 && v > us)) {
            continue;
        }
        if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b)
            <= -mean + k * log_mean - std::lgamma(k + 1)) {
            return static_cast<std::uint64_t>(k);
        }
    }
}

std::uint64_t RngStream::zero_truncated_poisson(double mean)
{
    if (!(mean > 0) || !std::isfinite(mean)) {
        throw InvalidArgument("zero-truncated poisson mean must be positive and finite");
    }
    if (mean < 10) {
        // Inversion on the truncated law; P(N=1) = mean e^-mean / (1 - e^-mean).
        double p = mean * std::exp(-mean) / -std::expm1(-mean);
        double cdf = p;
        const double u = uniform();
        std::uint64_t k = 1;
        while (u >= cdf && p > 0) {
            ++k;
            p *= mean / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }
    for (;;) {
        const std::uint64_t k = poisson(mean);
        if (k > 0) {
            return k;
        }
    }
}

}  // namespace jmcell
