//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jmcell/area_model.hpp"
#include "jmcell/error.hpp"
#include "jmcell/monte_carlo.hpp"
#include "jmcell/serialization.hpp"
#include "jmcell/validation.hpp"

namespace jmuplink {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10);
}

std::ofstream open_output(const fs::path& file)
{
    std::ofstream os(file);
    if (!os) {
        throw jmcell::InvalidArgument("cannot write " + file.string());
    }
    os << std::setprecision(12);
    return os;
}

std::ofstream open_csv(const fs::path& file, std::string_view header)
{
    std::ofstream os = open_output(file);
    os << "# schema_version=" << kCsvSchemaVersion << '\n' << header << '\n';
    return os;
}

void write_json(const fs::path& file, const json& doc)
{
    std::ofstream os = open_output(file);
    os << doc.dump(2) << '\n';
}

jmcell::McOptions mc_options(const Scenario& sc)
{
    jmcell::McOptions opts;
    opts.window_halfwidth_factor = sc.window_halfwidth_factor;
    return opts;
}

void write_error(const fs::path& out_dir, std::string_view command, std::string_view code,
                 std::string_view message, std::ostream& err)
{
    const json doc = {{"schema_version", 1},
                      {"command", command},
                      {"error", code},
                      {"message", message}};
    err << doc.dump() << '\n';
    try {
        fs::create_directories(out_dir);
        write_json(out_dir / "error.json", doc);
    } catch (const std::exception&) {
        // stderr already carries the report
    }
}

}  // namespace

void cmd_area(const Scenario& sc, const fs::path& out_dir, std::ostream& log)
{
    const auto& cfg = sc.cfg;
    const double r_c = cfg.r_c();
    const jmcell::BetaMixtureAreaModel model = jmcell::fit_area_model(cfg.lambda0, r_c);
    write_json(out_dir / "area_model.json", json::parse(jmcell::area_model_to_json(model, cfg.c2)));

    const jmcell::AreaCdfEstimate est
        = jmcell::estimate_area_cdf(cfg, sc.n_realizations, 4096, sc.seed);
    {
        std::ofstream os = open_csv(out_dir / "area_cdf.csv", "x_m2,cdf_model,cdf_empirical");
        for (std::size_t i = 0; i < est.grid.size(); ++i) {
            os << est.grid[i] << ',' << jmcell::area_cdf(model, est.grid[i]) << ','
               << est.values[i] << '\n';
        }
    }
    const jmcell::GoodnessOfFit gof = jmcell::goodness_of_fit(est.cdf, model);
    write_json(out_dir / "area_gof.json",
               {{"schema_version", 1},
                {"r_c", r_c},
                {"n_realizations", sc.n_realizations},
                {"seed", sc.seed},
                {"ksd", gof.ksd},
                {"kld", gof.kld},
                {"p_e1_model", model.dirac_weight},
                {"p_e1_empirical", est.full_disk_fraction}});
    log << "area: r_c=" << r_c << " m, KSD=" << gof.ksd << ", KLD=" << gof.kld << '\n';
}

void cmd_coverage(const Scenario& sc, const fs::path& out_dir, std::ostream& log)
{
    if (sc.thresholds_db.empty()) {
        throw jmcell::InvalidArgument("thresholds_db must be nonempty");
    }
    std::vector<double> ts;
    for (double db : sc.thresholds_db) {
        ts.push_back(db_to_linear(db));
    }
    const jmcell::UplinkAnalysis analysis = jmcell::UplinkAnalysis::build(sc.cfg);
    const auto samples = jmcell::simulate_samples(sc.cfg, sc.n_realizations, sc.seed,
                                                  mc_options(sc));
    const jmcell::EmpiricalCoverage sim = jmcell::coverage_from_samples(samples, ts);
    const jmcell::EmpiricalCoverage mcp = jmcell::estimate_coverage_mcp(
        sc.cfg, ts, sc.n_realizations, sc.seed, mc_options(sc));

    std::ofstream os
        = open_csv(out_dir / "coverage.csv", "T_db,pc_theory,pc_sim,pc_sim_stderr,pc_mcp_sim");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        os << sc.thresholds_db[i] << ',' << analysis.coverage(ts[i]) << ',' << sim.points[i].p_c
           << ',' << sim.points[i].stderr_pc << ',' << mcp.points[i].p_c << '\n';
    }
    log << "coverage: kappa=" << sc.cfg.kappa << ", " << ts.size() << " thresholds, "
        << sc.n_realizations << " realizations (" << sim.resampled << " resampled)\n";
}

void cmd_se(const Scenario& sc, const fs::path& out_dir, std::ostream& log)
{
    if (sc.kappas.empty()) {
        throw jmcell::InvalidArgument("kappas must be nonempty");
    }
    std::ofstream os = open_csv(out_dir / "se.csv", "kappa,se_theory,se_sim,se_sim_stderr");
    for (double kappa : sc.kappas) {
        jmcell::NetworkConfig cfg = sc.cfg;
        cfg.kappa = kappa;
        const double theory = jmcell::UplinkAnalysis::build(cfg).average_se();
        const jmcell::SeEstimate sim
            = jmcell::estimate_se(cfg, sc.n_realizations, sc.seed, mc_options(sc));
        os << kappa << ',' << theory << ',' << sim.mean << ',' << sim.stderr_mean << '\n';
        log << "se: kappa=" << kappa << " theory=" << theory << " sim=" << sim.mean << '\n';
    }
}

void cmd_pcf(const Scenario& sc, const fs::path& out_dir, std::ostream& log)
{
    const auto bins = jmcell::estimate_pcf(sc.cfg, sc.n_realizations, sc.seed, mc_options(sc));
    const auto model = jmcell::InterfererDensityModel::build(sc.cfg.lambda0, sc.cfg.kappa,
                                                             sc.cfg.c2);
    std::ofstream os = open_csv(out_dir / "pcf.csv", "r_norm,g_theory,g_empirical");
    for (const jmcell::PcfBin& b : bins) {
        os << b.r_norm_center(sc.cfg.lambda0) << ',' << jmcell::pcf_annulus_mean(b.r_lo, b.r_hi, model)
           << ',' << b.g << '\n';
    }
    log << "pcf: kappa=" << sc.cfg.kappa << ", " << bins.size() << " bins\n";
}

bool cmd_validate(const Scenario& sc, const fs::path& out_dir, std::ostream& log)
{
    jmcell::validation::Options opts;
    opts.seed = sc.seed;
    opts.scale = sc.validation_scale;
    const auto results = jmcell::validation::run_all(
        opts, [&](const auto& r) { log << jmcell::validation::format_line(r) << std::endl; });
    std::ofstream os = open_output(out_dir / "validation_report.json");
    os << jmcell::validation::report_json(results, opts) << '\n';
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass();
    }
    return all;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Uplink analysis of Johnson-Mehl cells in Poisson networks", "jm-uplink"};
    std::string command;
    std::string scenario_file;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_opt;
    app.add_option("command", command, "area | coverage | se | pcf | validate")
        ->required()
        ->check(CLI::IsMember({"area", "coverage", "se", "pcf", "validate"}));
    app.add_option("--scenario", scenario_file, "Scenario JSON file")->required();
    app.add_option("--seed", seed, "Override the scenario seed");
    app.add_option("--out", out_opt, "Output directory (default: scenario output_path)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) {
        rev.pop_back();  // program name
    }
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    fs::path out_dir = out_opt.value_or(".");
    try {
        Scenario sc = load_scenario(scenario_file);
        if (seed) {
            sc.seed = *seed;
        }
        out_dir = out_opt.value_or(sc.output_path);
        fs::create_directories(out_dir);
        if (command == "area") {
            cmd_area(sc, out_dir, out);
        } else if (command == "coverage") {
            cmd_coverage(sc, out_dir, out);
        } else if (command == "se") {
            cmd_se(sc, out_dir, out);
        } else if (command == "pcf") {
            cmd_pcf(sc, out_dir, out);
        } else {
            return cmd_validate(sc, out_dir, out) ? kExitOk : kExitCriteriaFailed;
        }
    } catch (const jmcell::Error& e) {
        write_error(out_dir, command, jmcell::to_string(e.code()), e.what(), err);
        return kExitError;
    } catch (const std::exception& e) {
        write_error(out_dir, command, "Internal", e.what(), err);
        return kExitError;
    }
    return kExitOk;
}

}  // namespace jmuplink
