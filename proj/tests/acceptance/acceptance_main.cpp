//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails.
//
//   jmcell_acceptance [--criterion N ...] [--seed S] [--scale F] [--report FILE]
//------------------------------------------------------------------------------
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "jmcell/validation.hpp"

namespace {

int usage()
{
    std::cerr << "usage: jmcell_acceptance [--criterion N ...] [--seed S] [--scale F] "
                 "[--report FILE]\n";
    return 64;
}

}  // namespace

int main(int argc, char** argv)
{
    namespace v = jmcell::validation;
    v::Options opts;
    std::vector<int> ids;
    std::string report;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (i + 1 >= argc) {
            return usage();
        }
        const std::string value = argv[++i];
        if (arg == "--criterion") {
            ids.push_back(std::stoi(value));
            if (ids.back() < 1 || ids.back() > v::kCriterionCount) {
                return usage();
            }
        } else if (arg == "--seed") {
            opts.seed = std::stoull(value);
        } else if (arg == "--scale") {
            opts.scale = std::stod(value);
        } else if (arg == "--report") {
            report = value;
        } else {
            return usage();
        }
    }
    if (ids.empty()) {
        for (int id = 1; id <= v::kCriterionCount; ++id) {
            ids.push_back(id);
        }
    }

    std::vector<v::CriterionResult> results;
    bool all = true;
    for (int id : ids) {
        results.push_back(v::run_criterion(id, opts));
        std::cout << v::format_line(results.back()) << std::endl;
        for (const auto& c : results.back().checks) {
            std::cout << "       " << (c.pass ? "ok   " : "MISS ") << c.label << " = "
                      << c.measured << " (limit " << c.limit << ")\n";
        }
        all = all && results.back().pass();
    }
    if (!report.empty()) {
        std::ofstream(report) << v::report_json(results, opts) << '\n';
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
