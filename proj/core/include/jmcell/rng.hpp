//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/rng.hpp
//! Counter-based random streams. A stream is addressed by
//! (seed, realization index, purpose tag, sub-stream id); any two distinct
//! addresses give statistically independent sequences, so Monte Carlo trials
//! can run in any order or on any thread and still reproduce bit-for-bit.
//------------------------------------------------------------------------------
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace jmcell {

//! Philox-4x32 with 10 rounds.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) noexcept;

//! SplitMix64 finaliser; used to fold stream addresses into Philox keys.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

enum class StreamTag : std::uint32_t {
    BsTiles = 1,
    UserPlacement = 2,
    Fading = 3,
    AreaProbes = 4,
    Load = 5,
    Test = 99,
};

class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t index, StreamTag tag,
              std::uint64_t sub = 0) noexcept;

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    //! Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    //! Uniform on (0, 1].
    double uniform_pos() noexcept { return 1.0 - uniform(); }
    double exponential() noexcept;
    std::uint64_t poisson(double mean);
    //! Poisson conditioned on being >= 1.
    std::uint64_t zero_truncated_poisson(double mean);

private:
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> block_{};
    int used_ = 4;
};

}  // namespace jmcell
