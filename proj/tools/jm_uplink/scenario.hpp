//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file scenario.hpp
//! Scenario files for the jm-uplink tool.
//!
//! A scenario is a JSON object. Network keys: lambda0, kappa or r_c, c2,
//! lambda_u (default 200 lambda0), alpha_pl, bandwidth. Run keys:
//! n_realizations, seed, window_halfwidth_factor, output_path, thresholds_db,
//! kappas, validation_scale. Unknown keys are rejected.
//------------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jmcell/uplink.hpp"

namespace jmuplink {

struct Scenario {
    jmcell::NetworkConfig cfg;
    std::size_t n_realizations = 10'000;
    std::uint64_t seed = 1;
    double window_halfwidth_factor = 10;
    std::string output_path = ".";
    std::vector<double> thresholds_db = {-10, -5, 0, 5, 10, 15, 20};
    std::vector<double> kappas = {0.2, 0.4, 1, 2, 5};
    double validation_scale = 1;
};

//! Throws jmcell::InvalidArgument on malformed or inconsistent documents.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& file);

}  // namespace jmuplink
