//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace jmcell {
namespace {

TEST(ParallelFor, VisitsEveryIndexOnce)
{
    for (std::size_t threads : {1u, 2u, 5u}) {
        for (std::size_t n : {0u, 1u, 7u, 1000u}) {
            std::vector<std::atomic<int>> hits(n);
            parallel_for(n, [&](std::size_t i) { hits[i].fetch_add(1); }, threads);
            for (std::size_t i = 0; i < n; ++i) {
                ASSERT_EQ(hits[i].load(), 1);
            }
        }
    }
}

TEST(ParallelFor, RethrowsBodyException)
{
    EXPECT_THROW(parallel_for(
                     100,
                     [](std::size_t i) {
                         if (i == 37) {
                             throw std::runtime_error("boom");
                         }
                     },
                     3),
                 std::runtime_error);
}

TEST(WorkerCount, HonoursEnvironment)
{
    ::setenv("JM_UPLINK_THREADS", "3", 1);
    EXPECT_EQ(worker_count(), 3u);
    ::setenv("JM_UPLINK_THREADS", "junk", 1);
    EXPECT_GE(worker_count(), 1u);
    ::unsetenv("JM_UPLINK_THREADS");
    EXPECT_GE(worker_count(), 1u);
}

}  // namespace
}  // namespace jmcell
