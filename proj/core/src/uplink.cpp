//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/uplink.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jmcell/error.hpp"

namespace jmcell {

using numerics::QuadratureSpec;

namespace {

constexpr double pi = std::numbers::pi;

constexpr double kTableLogLo = -6 * std::numbers::ln10;
constexpr double kTableLogHi = 6 * std::numbers::ln10;
constexpr double kCoverageFloor = 1e-6;

// -log L for the scale-free argument s~ = s lambda0^(alpha/2), with distances
// measured in units of 1/sqrt(lambda0).
double neg_log_laplace_scaled(double s_scaled, double inv_moment_unit, double alpha_pl,
                              const QuadratureSpec& spec)
{
    if (s_scaled == 0) {
        return 0;
    }
    auto integrand = [&](double rho) {
        if (rho == 0) {
            return 0.0;
        }
        const double g = -std::expm1(-2 * pi * rho * rho * inv_moment_unit);
        return g * rho / (1 + std::pow(rho, alpha_pl) / s_scaled);
    };
    QuadratureSpec qs = spec;
    qs.abs_tol = std::min(spec.abs_tol, 1e-15);
    return 2 * pi * numerics::integrate_semi_infinite(integrand, 0, qs);
}

}  // namespace

double radius_for_kappa(double lambda0, double kappa, double c2)
{
    return kappa / std::sqrt(pi * c2 * lambda0);
}

double kappa_for_radius(double lambda0, double r_c, double c2)
{
    return r_c * std::sqrt(pi * c2 * lambda0);
}

void NetworkConfig::validate() const
{
    if (!(lambda0 > 0) || !(kappa > 0) || !(c2 > 0) || !(alpha_pl > 2) || !(bandwidth > 0)
        || !(lambda_u >= 0)) {
        throw InvalidArgument("NetworkConfig needs lambda0 > 0, kappa > 0, c2 > 0, "
                              "alpha_pl > 2, bandwidth > 0, lambda_u >= 0");
    }
}

double serving_distance_cdf(double d, const NetworkConfig& cfg)
{
    const double r_c = cfg.r_c();
    if (!(d >= 0) || !(d <= r_c)) {
        throw DomainError("serving distance outside [0, r_c]");
    }
    const double k = pi * cfg.c2 * cfg.lambda0;
    return std::expm1(-k * d * d) / std::expm1(-k * r_c * r_c);
}

double serving_distance_pdf(double d, const NetworkConfig& cfg)
{
    const double r_c = cfg.r_c();
    if (!(d >= 0) || !(d <= r_c)) {
        throw DomainError("serving distance outside [0, r_c]");
    }
    const double k = pi * cfg.c2 * cfg.lambda0;
    return 2 * k * d * std::exp(-k * d * d) / -std::expm1(-k * r_c * r_c);
}

//---------------------------------------------------------------------------//
// Interferer process
//---------------------------------------------------------------------------//
InterfererDensityModel InterfererDensityModel::build(double lambda0, double kappa, double c2,
                                                     const QuadratureSpec& quad,
                                                     const numerics::RootFindSpec& root)
{
    if (!(lambda0 > 0) || !(kappa > 0)) {
        throw InvalidArgument("lambda0 and kappa must be positive");
    }
    const BetaMixtureAreaModel unit = fit_area_model_nearest(1.0, radius_for_kappa(1.0, kappa, c2), quad, root);
    return {lambda0, kappa, inverse_area_moment(unit, quad)};
}

InterfererDensityModel InterfererDensityModel::at_density(double lambda0) const
{
    InterfererDensityModel out = *this;
    out.lambda0 = lambda0;
    return out;
}

double pcf(double r, const InterfererDensityModel& model)
{
    if (!(r >= 0)) {
        throw DomainError("pcf needs r >= 0");
    }
    const double rho_sq = r * r * model.lambda0;
    return -std::expm1(-2 * pi * rho_sq * model.inv_moment_unit);
}

double pcf_annulus_mean(double r_lo, double r_hi, const InterfererDensityModel& model)
{
    if (!(r_lo >= 0) || !(r_hi > r_lo)) {
        throw DomainError("pcf_annulus_mean needs 0 <= r_lo < r_hi");
    }
    // Closed form of the integral of (1 - exp(-c r^2)) 2 r dr.
    const double c = 2 * pi * model.lambda0 * model.inv_moment_unit;
    const double lo_sq = r_lo * r_lo;
    const double hi_sq = r_hi * r_hi;
    const double hole = std::exp(-c * lo_sq) * -std::expm1(-c * (hi_sq - lo_sq)) / c;
    return 1 - hole / (hi_sq - lo_sq);
}

double interferer_density(double r, const InterfererDensityModel& model)
{
    return model.lambda0 * pcf(r, model);
}

double interference_laplace(double s, const InterfererDensityModel& model, double alpha_pl,
                            const QuadratureSpec& spec)
{
    if (!(s >= 0) || !(alpha_pl > 2)) {
        throw DomainError("interference_laplace needs s >= 0 and alpha_pl > 2");
    }
    const double s_scaled = s * std::pow(model.lambda0, alpha_pl / 2);
    return std::exp(-neg_log_laplace_scaled(s_scaled, model.inv_moment_unit, alpha_pl, spec));
}

//---------------------------------------------------------------------------//
// Coverage
//---------------------------------------------------------------------------//
CoverageEvaluator::CoverageEvaluator(const NetworkConfig& cfg,
                                     const InterfererDensityModel& model,
                                     const QuadratureSpec& spec)
    : cfg_(cfg), model_(model), spec_(spec)
{
    cfg_.validate();
    spec_.validate();
    log_s_lo_ = kTableLogLo;
    log_s_hi_ = kTableLogHi;

    const std::array<double, 4> probes = {0.1, 1.0, 10.0, 100.0};
    std::size_t points = 49;
    build_table(points);
    std::array<double, 4> previous{};
    for (std::size_t i = 0; i < probes.size(); ++i) {
        previous[i] = coverage(probes[i]);
    }
    for (int refinement = 0; refinement < 6; ++refinement) {
        points = 2 * points - 1;
        build_table(points);
        double change = 0;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const double now = coverage(probes[i]);
            change = std::max(change, std::abs(now - previous[i]));
            previous[i] = now;
        }
        if (change < 1e-4) {
            return;
        }
    }
    throw NonConvergence("Laplace-transform table did not settle to 1e-4 in coverage");
}

void CoverageEvaluator::build_table(std::size_t points)
{
    std::vector<double> xs(points);
    std::vector<double> ys(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double log_s
            = log_s_lo_ + (log_s_hi_ - log_s_lo_) * static_cast<double>(i) / (points - 1);
        xs[i] = log_s;
        ys[i] = std::log(laplace_scaled_direct(std::exp(log_s)));
    }
    table_ = numerics::MonotoneCubic(std::move(xs), std::move(ys));
}

// Returns -log L for the scaled argument.
double CoverageEvaluator::laplace_scaled_direct(double s_scaled) const
{
    return neg_log_laplace_scaled(s_scaled, model_.inv_moment_unit, cfg_.alpha_pl, spec_);
}

double CoverageEvaluator::laplace_scaled(double s_scaled) const
{
    if (s_scaled <= 0) {
        return 0;
    }
    const double log_s = std::log(s_scaled);
    if (log_s < log_s_lo_ || log_s > log_s_hi_ || table_.size() == 0) {
        return laplace_scaled_direct(s_scaled);
    }
    return std::exp(table_(log_s));
}

double CoverageEvaluator::coverage_with(double threshold, bool direct) const
{
    if (!(threshold >= 0)) {
        throw DomainError("SIR threshold must be non-negative");
    }
    if (threshold == 0) {
        return 1;
    }
    // Serving distance in units of 1/sqrt(lambda0): pi c2 rho_c^2 = kappa^2.
    const double k = pi * cfg_.c2;
    const double rho_c = cfg_.kappa / std::sqrt(k);
    const double norm = -std::expm1(-cfg_.kappa * cfg_.kappa);
    auto integrand = [&](double rho) {
        const double s = std::pow(rho, cfg_.alpha_pl) * threshold;
        const double neg_log_l = direct ? laplace_scaled_direct(s) : laplace_scaled(s);
        return std::exp(-neg_log_l) * 2 * k * rho * std::exp(-k * rho * rho) / norm;
    };
    QuadratureSpec qs = spec_;
    qs.abs_tol = std::min(spec_.abs_tol, 1e-12);
    return std::clamp(numerics::integrate_1d(integrand, 0, rho_c, qs), 0.0, 1.0);
}

double CoverageEvaluator::coverage(double threshold) const
{
    return coverage_with(threshold, false);
}

double CoverageEvaluator::coverage_direct(double threshold) const
{
    return coverage_with(threshold, true);
}

double CoverageEvaluator::spectral_efficiency_integral() const
{
    auto pc_at = [this](double t) { return coverage(std::exp2(t) - 1); };
    double t_max = 1;
    while (pc_at(t_max) >= kCoverageFloor) {
        t_max *= 2;
        if (t_max > 1024) {
            throw NonConvergence("coverage tail does not fall below 1e-6");
        }
    }
    QuadratureSpec qs = spec_;
    qs.abs_tol = std::min(spec_.abs_tol, 1e-10);
    return numerics::integrate_1d(pc_at, 0, t_max, qs);
}

double coverage_probability(double threshold, const NetworkConfig& cfg,
                            const InterfererDensityModel& model, const QuadratureSpec& spec)
{
    if (!(threshold > 0)) {
        throw DomainError("coverage_probability needs T > 0");
    }
    return CoverageEvaluator(cfg, model, spec).coverage(threshold);
}

CoverageCurve coverage_curve(const std::vector<double>& thresholds, const NetworkConfig& cfg,
                             const InterfererDensityModel& model, const QuadratureSpec& spec)
{
    const CoverageEvaluator eval(cfg, model, spec);
    CoverageCurve out;
    out.reserve(thresholds.size());
    for (double t : thresholds) {
        out.push_back({t, eval.coverage(t)});
    }
    return out;
}

double average_user_se(const NetworkConfig& cfg, const InterfererDensityModel& model,
                       const BetaMixtureAreaModel& area_model, const QuadratureSpec& spec)
{
    const double r_c = cfg.r_c();
    if (std::abs(area_model.lambda0 - cfg.lambda0) > 1e-9 * cfg.lambda0
        || std::abs(area_model.r_c - r_c) > 1e-9 * r_c) {
        throw InvalidArgument("area model was fitted for a different (lambda0, r_c)");
    }
    const double inv_load = cfg.lambda_u > 0 ? mean_inverse_load(cfg.lambda_u, area_model, spec)
                                             : 1.0;
    const CoverageEvaluator eval(cfg, model, spec);
    return cfg.bandwidth * inv_load * eval.spectral_efficiency_integral();
}

UplinkAnalysis UplinkAnalysis::build(const NetworkConfig& cfg, const QuadratureSpec& quad,
                                     const numerics::RootFindSpec& root)
{
    cfg.validate();
    UplinkAnalysis out;
    out.cfg = cfg;
    out.area_model = fit_area_model_nearest(cfg.lambda0, cfg.r_c(), quad, root);
    out.density_model = InterfererDensityModel::build(cfg.lambda0, cfg.kappa, cfg.c2, quad, root);
    out.evaluator = std::make_shared<const CoverageEvaluator>(cfg, out.density_model, quad);
    return out;
}

double UplinkAnalysis::mean_inverse_load() const
{
    return cfg.lambda_u > 0 ? jmcell::mean_inverse_load(cfg.lambda_u, area_model) : 1.0;
}

double UplinkAnalysis::average_se() const
{
    return cfg.bandwidth * mean_inverse_load() * evaluator->spectral_efficiency_integral();
}

}  // namespace jmcell
