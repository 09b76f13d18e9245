//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file commands.hpp
//! Subcommands of jm-uplink. Each writes its files under out_dir.
//!
//! | command  | files                                         |
//! |----------|-----------------------------------------------|
//! | area     | area_model.json, area_cdf.csv, area_gof.json  |
//! | coverage | coverage.csv                                  |
//! | se       | se.csv                                        |
//! | pcf      | pcf.csv                                       |
//! | validate | validation_report.json                        |
//!
//! CSV files start with "# schema_version=1" followed by the column header.
//! On failure, error.json is written instead.
//------------------------------------------------------------------------------
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace jmuplink {

inline constexpr int kCsvSchemaVersion = 1;

enum ExitCode : int {
    kExitOk = 0,
    kExitCriteriaFailed = 1,
    kExitError = 2,
    kExitUsage = 64,
};

void cmd_area(const Scenario& sc, const std::filesystem::path& out_dir, std::ostream& log);
void cmd_coverage(const Scenario& sc, const std::filesystem::path& out_dir, std::ostream& log);
void cmd_se(const Scenario& sc, const std::filesystem::path& out_dir, std::ostream& log);
void cmd_pcf(const Scenario& sc, const std::filesystem::path& out_dir, std::ostream& log);
//! Returns true when every criterion passes.
bool cmd_validate(const Scenario& sc, const std::filesystem::path& out_dir, std::ostream& log);

//! Full command line, e.g. {"jm-uplink", "area", "--scenario", "s.json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jmuplink
