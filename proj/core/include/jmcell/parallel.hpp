//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/parallel.hpp
//! Index-parallel loop whose results do not depend on the thread count.
//------------------------------------------------------------------------------
#pragma once

#include <cstddef>
#include <functional>

namespace jmcell {

//! JM_UPLINK_THREADS if set to a positive integer, else the hardware
//! concurrency (at least 1).
std::size_t worker_count();

//! Calls body(i) for every i in [0, n) on up to `threads` workers (0 means
//! worker_count()). Indices are handed out in contiguous chunks; the first
//! exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 0);

}  // namespace jmcell
