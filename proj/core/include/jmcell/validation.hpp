//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/validation.hpp
//! Acceptance checks comparing the analytical chain with the simulator.
//!
//! Criteria are numbered 1 to 11. Each one runs at fixed network parameters
//! (lambda0 = 4e-6 BS/m^2, lambda_u = 200 lambda0, alpha = 3.7, B = 1 Hz)
//! and fixed tolerances; only the seed, the thread count and a scale factor
//! on realization counts can be changed.
//------------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace jmcell::validation {

inline constexpr int kCriterionCount = 11;

enum class Relation { LessEqual, Less, GreaterEqual, Equal };

struct Check {
    std::string label;
    double measured = 0;
    double limit = 0;
    Relation relation = Relation::LessEqual;
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0;
    std::string error;  // non-empty when the run threw

    bool pass() const;
};

struct Options {
    std::uint64_t seed = 20240611;
    //! Multiplies every realization count; 1 reproduces the full criteria.
    double scale = 1;
    std::size_t threads = 0;

    std::size_t realizations(std::size_t nominal) const;
};

std::string_view criterion_title(int id);

//! Never throws for a valid id; failures inside the run are reported in
//! CriterionResult::error.
CriterionResult run_criterion(int id, const Options& opts);

std::vector<CriterionResult> run_all(
    const Options& opts, const std::function<void(const CriterionResult&)>& on_done = {});

//! One line: "[PASS] 3 <title>: <check> ... (12.3 s)".
std::string format_line(const CriterionResult& result);

std::string report_json(const std::vector<CriterionResult>& results, const Options& opts);

}  // namespace jmcell::validation
