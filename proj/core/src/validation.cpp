//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/validation.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "jmcell/area_model.hpp"
#include "jmcell/error.hpp"
#include "jmcell/monte_carlo.hpp"
#include "jmcell/uplink.hpp"

namespace jmcell::validation {
namespace {

constexpr double kLambda0 = 4e-6;
constexpr double kUserFactor = 200;
constexpr double kAlpha = 3.7;
constexpr std::array<double, 7> kThresholdsDb = {-10, -5, 0, 5, 10, 15, 20};

constexpr std::array<std::string_view, kCriterionCount> kTitles = {
    "mean cell area vs closed form",
    "second area moment vs simulation",
    "area law goodness of fit (KSD, KLD)",
    "probability that the disk fits in the cell",
    "interferer pair correlation vs simulation",
    "uplink coverage vs simulation",
    "cluster-process baseline underestimates coverage",
    "average user spectral efficiency",
    "density scale invariance of coverage",
    "window size and inverse-moment cutoff robustness",
    "exact invariants",
};

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10);
}

NetworkConfig config_for_kappa(double kappa, double lambda0 = kLambda0)
{
    NetworkConfig cfg;
    cfg.lambda0 = lambda0;
    cfg.kappa = kappa;
    cfg.lambda_u = kUserFactor * lambda0;
    cfg.alpha_pl = kAlpha;
    cfg.bandwidth = 1;
    return cfg;
}

NetworkConfig config_for_radius(double r_c)
{
    return config_for_kappa(kappa_for_radius(kLambda0, r_c));
}

std::string fmt_num(double v)
{
    std::ostringstream os;
    os << std::setprecision(4) << v;
    return os.str();
}

std::string_view relation_symbol(Relation r)
{
    switch (r) {
    case Relation::LessEqual:
        return "<=";
    case Relation::Less:
        return "<";
    case Relation::GreaterEqual:
        return ">=";
    case Relation::Equal:
        return "==";
    }
    return "?";
}

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : result_(r) {}

    void check(std::string label, double measured, Relation rel, double limit)
    {
        bool ok = false;
        switch (rel) {
        case Relation::LessEqual:
            ok = measured <= limit;
            break;
        case Relation::Less:
            ok = measured < limit;
            break;
        case Relation::GreaterEqual:
            ok = measured >= limit;
            break;
        case Relation::Equal:
            ok = measured == limit;
            break;
        }
        result_.checks.push_back({std::move(label), measured, limit, rel, ok && std::isfinite(measured)});
    }

private:
    CriterionResult& result_;
};

std::string kappa_label(double kappa)
{
    return "kappa=" + fmt_num(kappa);
}

// Largest step up along a sequence that should not increase.
double max_increase(const std::vector<double>& v)
{
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < v.size(); ++i) {
        worst = std::max(worst, v[i] - v[i - 1]);
    }
    return v.size() < 2 ? 0 : worst;
}

std::vector<double> linear_thresholds()
{
    std::vector<double> t;
    for (double db : kThresholdsDb) {
        t.push_back(db_to_linear(db));
    }
    return t;
}

McOptions mc_options(const Options& opts)
{
    McOptions mc;
    mc.threads = opts.threads;
    return mc;
}

//---------------------------------------------------------------------------//
// Criteria
//---------------------------------------------------------------------------//
void area_moments(Recorder& rec, const Options& opts, int order)
{
    for (double r_c : {100.0, 250.0, 500.0}) {
        const NetworkConfig cfg = config_for_radius(r_c);
        const AreaCdfEstimate est
            = estimate_area_cdf(cfg, opts.realizations(10'000), 4096, opts.seed, 2, opts.threads);
        const double exact = order == 1 ? area_mean(kLambda0, r_c)
                                        : area_second_moment(kLambda0, r_c);
        const double simulated = est.cdf.moment(order);
        rec.check("R_c=" + fmt_num(r_c) + " m relative error", std::abs(simulated / exact - 1),
                  Relation::LessEqual, order == 1 ? 0.01 : 0.02);
    }
}

void table_one(Recorder& rec, const Options& opts)
{
    constexpr std::array<double, 5> radii = {100, 200, 250, 300, 500};
    constexpr std::array<double, 5> ksd_max = {0.035, 0.035, 0.03, 0.02, 0.01};
    constexpr std::array<double, 5> kld_max = {0.02, 0.02, 0.01, 0.01, 0.005};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const NetworkConfig cfg = config_for_radius(radii[i]);
        const AreaCdfEstimate est
            = estimate_area_cdf(cfg, opts.realizations(100'000), 4096, opts.seed, 2, opts.threads);
        const BetaMixtureAreaModel model = fit_area_model(kLambda0, radii[i]);
        const GoodnessOfFit gof = goodness_of_fit(est.cdf, model);
        const std::string tag = "R_c=" + fmt_num(radii[i]) + " m ";
        rec.check(tag + "KSD", gof.ksd, Relation::LessEqual, ksd_max[i]);
        rec.check(tag + "KLD", gof.kld, Relation::LessEqual, kld_max[i]);
    }
}

void disk_in_cell(Recorder& rec, const Options& opts)
{
    constexpr double r_c = 100;
    const AreaCdfEstimate est = estimate_area_cdf(config_for_radius(r_c),
                                                  opts.realizations(100'000), 4096, opts.seed, 2,
                                                  opts.threads);
    rec.check("|P_emp - exp(-4 pi lambda0 R_c^2)|",
              std::abs(est.full_disk_fraction - prob_disk_inside_cell(kLambda0, r_c)),
              Relation::LessEqual, 0.01);
}

void pair_correlation(Recorder& rec, const Options& opts)
{
    for (double kappa : {0.4, 1.0, 2.0}) {
        const NetworkConfig cfg = config_for_kappa(kappa);
        const auto bins = estimate_pcf(cfg, opts.realizations(10'000), opts.seed,
                                       mc_options(opts));
        const InterfererDensityModel model = InterfererDensityModel::build(kLambda0, kappa);
        const double scale = std::sqrt(kLambda0);
        double worst = 0;
        for (const PcfBin& b : bins) {
            if (b.r_lo * scale < 0.05 - 1e-9 || b.r_hi * scale > 2 + 1e-9) {
                continue;
            }
            worst = std::max(worst, std::abs(pcf_annulus_mean(b.r_lo, b.r_hi, model) - b.g));
        }
        rec.check(kappa_label(kappa) + " max |g_theory - g_emp| on [0.05, 2]", worst,
                  Relation::LessEqual, 0.05);
    }
}

void coverage(Recorder& rec, const Options& opts)
{
    const std::vector<double> ts = linear_thresholds();
    std::vector<std::vector<double>> theory;
    std::vector<std::vector<double>> sim;
    const std::array<double, 3> kappas = {0.4, 1.0, 2.0};
    for (double kappa : kappas) {
        const NetworkConfig cfg = config_for_kappa(kappa);
        const UplinkAnalysis analysis = UplinkAnalysis::build(cfg);
        const auto samples
            = simulate_samples(cfg, opts.realizations(20'000), opts.seed, mc_options(opts));
        const EmpiricalCoverage mc = coverage_from_samples(samples, ts);
        std::vector<double> th_row;
        std::vector<double> mc_row;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            th_row.push_back(analysis.coverage(ts[i]));
            mc_row.push_back(mc.points[i].p_c);
            rec.check(kappa_label(kappa) + " T=" + fmt_num(kThresholdsDb[i]) + " dB |theory - sim|",
                      std::abs(th_row.back() - mc_row.back()), Relation::LessEqual, 0.03);
        }
        rec.check(kappa_label(kappa) + " theory max step up in T", max_increase(th_row),
                  Relation::LessEqual, 0);
        rec.check(kappa_label(kappa) + " sim max step up in T", max_increase(mc_row),
                  Relation::LessEqual, 0);
        theory.push_back(std::move(th_row));
        sim.push_back(std::move(mc_row));
    }
    double th_up = -1;
    double mc_up = -1;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<double> th_col;
        std::vector<double> mc_col;
        for (std::size_t k = 0; k < kappas.size(); ++k) {
            th_col.push_back(theory[k][i]);
            mc_col.push_back(sim[k][i]);
        }
        th_up = std::max(th_up, max_increase(th_col));
        mc_up = std::max(mc_up, max_increase(mc_col));
    }
    rec.check("theory max step up in kappa", th_up, Relation::LessEqual, 0);
    rec.check("sim max step up in kappa", mc_up, Relation::LessEqual, 0);
}

void cluster_baseline(Recorder& rec, const Options& opts)
{
    const std::array<double, 1> t = {1.0};
    for (double kappa : {1.0, 2.0}) {
        const NetworkConfig cfg = config_for_kappa(kappa);
        const std::size_t n = opts.realizations(20'000);
        const EmpiricalCoverage jm = estimate_coverage(cfg, t, n, opts.seed, mc_options(opts));
        const EmpiricalCoverage mcp = estimate_coverage_mcp(cfg, t, n, opts.seed, mc_options(opts));
        rec.check(kappa_label(kappa) + " p_c(MCP) - p_c(JM) at 0 dB",
                  mcp.points[0].p_c - jm.points[0].p_c, Relation::LessEqual, 0);
    }
}

void spectral_efficiency(Recorder& rec, const Options& opts)
{
    std::vector<double> theory;
    std::vector<double> sim;
    for (double kappa : {0.2, 0.4, 1.0, 2.0}) {
        const NetworkConfig cfg = config_for_kappa(kappa);
        theory.push_back(UplinkAnalysis::build(cfg).average_se());
        if (kappa == 0.4 || kappa == 1.0) {
            const SeEstimate se
                = estimate_se(cfg, opts.realizations(20'000), opts.seed, mc_options(opts));
            sim.push_back(se.mean);
            rec.check(kappa_label(kappa) + " |theory - sim| / sim",
                      std::abs(theory.back() - se.mean) / se.mean, Relation::LessEqual, 0.05);
        }
    }
    rec.check("kappa=0.2 theory SE (bits/s/Hz)", theory.front(), Relation::Less, 2);
    rec.check("theory max step up in kappa", max_increase(theory), Relation::LessEqual, 0);
    rec.check("sim max step up in kappa", max_increase(sim), Relation::LessEqual, 0);
}

void scale_invariance(Recorder& rec, const Options& opts)
{
    const std::array<double, 1> t = {1.0};
    const NetworkConfig a = config_for_kappa(1.0, 4e-6);
    const NetworkConfig b = config_for_kappa(1.0, 1e-5);
    rec.check("theory |p_c(4e-6) - p_c(1e-5)| at 0 dB",
              std::abs(UplinkAnalysis::build(a).coverage(1) - UplinkAnalysis::build(b).coverage(1)),
              Relation::LessEqual, 0.01);
    const std::size_t n = opts.realizations(20'000);
    const double pa = estimate_coverage(a, t, n, opts.seed, mc_options(opts)).points[0].p_c;
    const double pb = estimate_coverage(b, t, n, opts.seed, mc_options(opts)).points[0].p_c;
    rec.check("sim |p_c(4e-6) - p_c(1e-5)| at 0 dB", std::abs(pa - pb), Relation::LessEqual, 0.01);
}

void robustness(Recorder& rec, const Options& opts)
{
    const std::array<double, 1> t = {1.0};
    const NetworkConfig cfg = config_for_kappa(1.0);
    const std::size_t n = opts.realizations(20'000);
    McOptions base = mc_options(opts);
    McOptions wide = base;
    wide.window_halfwidth_factor = 2 * base.window_halfwidth_factor;
    const double p_base = estimate_coverage(cfg, t, n, opts.seed, base).points[0].p_c;
    const double p_wide = estimate_coverage(cfg, t, n, opts.seed, wide).points[0].p_c;
    rec.check("|p_c(2 x window) - p_c(window)| at 0 dB", std::abs(p_wide - p_base),
              Relation::Less, 0.01);

    for (double kappa : {0.2, 0.4, 1.0, 2.0}) {
        const BetaMixtureAreaModel model
            = fit_area_model_nearest(1.0, radius_for_kappa(1.0, kappa));
        const double full = inverse_area_moment_with_cutoff(model, 1e-6);
        const double halved = inverse_area_moment_with_cutoff(model, 5e-7);
        rec.check(kappa_label(kappa) + " inverse moment change on halving the cutoff",
                  std::abs(halved / full - 1), Relation::Less, 0.01);
    }
}

void invariants(Recorder& rec)
{
    const NetworkConfig cfg = config_for_kappa(1.0);
    const InterfererDensityModel model = InterfererDensityModel::build(kLambda0, 1.0);
    rec.check("Laplace transform at s=0", interference_laplace(0, model, kAlpha),
              Relation::Equal, 1);
    rec.check("pcf(0)", pcf(0, model), Relation::Equal, 0);
    rec.check("serving distance CDF(0)", serving_distance_cdf(0, cfg), Relation::Equal, 0);
    rec.check("|serving distance CDF(r_c) - 1|",
              std::abs(serving_distance_cdf(cfg.r_c(), cfg) - 1), Relation::LessEqual, 1e-8);
    const BetaMixtureAreaModel area = fit_area_model(kLambda0, 250);
    rec.check("area CDF(0)", area_cdf(area, 0), Relation::Equal, 0);
    rec.check("area CDF(pi R_c^2)", area_cdf(area, area.dirac_location), Relation::Equal, 1);
    for (double mu : {0.1, 1.0, 10.0, 100.0}) {
        double total = 0;
        for (std::uint64_t n = 1; n < 100'000; ++n) {
            const double p = load_pmf({mu}, n);
            total += p;
            if (static_cast<double>(n) > mu && p < 1e-12 * total) {
                break;
            }
        }
        rec.check("|load pmf sum - 1| at mean " + fmt_num(mu), std::abs(total - 1),
                  Relation::LessEqual, 1e-8);
    }
}

}  // namespace

bool CriterionResult::pass() const
{
    return error.empty() && !checks.empty()
           && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t Options::realizations(std::size_t nominal) const
{
    const double n = std::round(static_cast<double>(nominal) * scale);
    return static_cast<std::size_t>(std::max(100.0, n));
}

std::string_view criterion_title(int id)
{
    if (id < 1 || id > kCriterionCount) {
        throw InvalidArgument("criterion id out of range");
    }
    return kTitles[static_cast<std::size_t>(id - 1)];
}

CriterionResult run_criterion(int id, const Options& opts)
{
    CriterionResult result;
    result.id = id;
    result.title = std::string(criterion_title(id));
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1:
            area_moments(rec, opts, 1);
            break;
        case 2:
            area_moments(rec, opts, 2);
            break;
        case 3:
            table_one(rec, opts);
            break;
        case 4:
            disk_in_cell(rec, opts);
            break;
        case 5:
            pair_correlation(rec, opts);
            break;
        case 6:
            coverage(rec, opts);
            break;
        case 7:
            cluster_baseline(rec, opts);
            break;
        case 8:
            spectral_efficiency(rec, opts);
            break;
        case 9:
            scale_invariance(rec, opts);
            break;
        case 10:
            robustness(rec, opts);
            break;
        case 11:
            invariants(rec);
            break;
        default:
            break;
        }
    } catch (const std::exception& e) {
        result.error = e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Wall-clock budgets for the simulation-heavy criteria.
    if (id == 1) {
        rec.check("runtime (s)", result.seconds, Relation::Less, 120);
    } else if (id == 3) {
        rec.check("runtime (s)", result.seconds, Relation::Less, 900);
    }
    return result;
}

std::vector<CriterionResult> run_all(const Options& opts,
                                     const std::function<void(const CriterionResult&)>& on_done)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id, opts));
        if (on_done) {
            on_done(out.back());
        }
    }
    return out;
}

std::string format_line(const CriterionResult& result)
{
    std::ostringstream os;
    os << (result.pass() ? "[PASS] " : "[FAIL] ") << std::setw(2) << result.id << ' '
       << result.title << ": ";
    if (!result.error.empty()) {
        os << "error: " << result.error;
    } else {
        const auto passed = std::count_if(result.checks.begin(), result.checks.end(),
                                          [](const Check& c) { return c.pass; });
        os << passed << '/' << result.checks.size() << " checks";
        for (const Check& c : result.checks) {
            if (!c.pass) {
                os << "; " << c.label << " = " << fmt_num(c.measured) << " (needs "
                   << relation_symbol(c.relation) << ' ' << fmt_num(c.limit) << ')';
            }
        }
    }
    os << " (" << std::fixed << std::setprecision(1) << result.seconds << " s)";
    return os.str();
}

std::string report_json(const std::vector<CriterionResult>& results, const Options& opts)
{
    using nlohmann::json;
    json doc;
    doc["schema_version"] = 1;
    doc["seed"] = opts.seed;
    doc["scale"] = opts.scale;
    json criteria = json::array();
    bool all = true;
    for (const CriterionResult& r : results) {
        json checks = json::array();
        for (const Check& c : r.checks) {
            checks.push_back({{"label", c.label},
                              {"measured", std::isfinite(c.measured) ? json(c.measured) : json()},
                              {"limit", c.limit},
                              {"relation", relation_symbol(c.relation)},
                              {"pass", c.pass}});
        }
        criteria.push_back({{"id", r.id},
                            {"title", r.title},
                            {"pass", r.pass()},
                            {"seconds", r.seconds},
                            {"error", r.error},
                            {"checks", std::move(checks)}});
        all = all && r.pass();
    }
    doc["all_pass"] = all;
    doc["criteria"] = std::move(criteria);
    return doc.dump(2);
}

}  // namespace jmcell::validation
