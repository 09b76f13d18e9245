//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/uplink.hpp
//! Analytical uplink SIR coverage and average spectral efficiency.
//!
//! Interfering users are replaced by a non-homogeneous PPP whose intensity
//! follows the pair correlation function of the interferers around the typical
//! BS; coverage then follows from the Laplace transform of the aggregate
//! interference. All thresholds here are linear SIR values.
//------------------------------------------------------------------------------
#pragma once

#include <memory>
#include <vector>

#include "jmcell/area_model.hpp"
#include "jmcell/numerics.hpp"

namespace jmcell {

inline constexpr double kDefaultC2 = 1.25;

//! r_c = kappa / sqrt(pi c2 lambda0)
double radius_for_kappa(double lambda0, double kappa, double c2 = kDefaultC2);
double kappa_for_radius(double lambda0, double r_c, double c2 = kDefaultC2);

struct NetworkConfig {
    double lambda0 = 4e-6;      // BS/m^2
    double kappa = 1;           // normalized JM radius
    double c2 = kDefaultC2;     // serving-distance correction factor
    double lambda_u = 8e-4;     // users/m^2
    double alpha_pl = 3.7;      // path-loss exponent
    double bandwidth = 1;       // Hz

    double r_c() const { return radius_for_kappa(lambda0, kappa, c2); }
    //! Throws InvalidArgument on lambda0 <= 0, kappa <= 0, alpha_pl <= 2,
    //! bandwidth <= 0 or lambda_u < 0.
    void validate() const;
};

//! Truncated Rayleigh law of the serving distance. DomainError outside [0, r_c].
double serving_distance_cdf(double d, const NetworkConfig& cfg);
double serving_distance_pdf(double d, const NetworkConfig& cfg);

struct InterfererDensityModel {
    double lambda0 = 0;
    double kappa = 0;
    //! E[1 / X_C] of a unit-density JM cell with r_c = kappa / sqrt(pi c2).
    double inv_moment_unit = 0;

    //! Fits the unit-density area law once for kappa; reuse at any lambda0.
    static InterfererDensityModel build(double lambda0, double kappa, double c2 = kDefaultC2,
                                        const numerics::QuadratureSpec& quad = {},
                                        const numerics::RootFindSpec& root = {});
    InterfererDensityModel at_density(double lambda0) const;
};

//! 1 - exp(-2 pi (r sqrt(lambda0))^2 inv_moment_unit)
double pcf(double r, const InterfererDensityModel& model);
//! Area-weighted mean of pcf over the annulus r_lo <= r <= r_hi.
double pcf_annulus_mean(double r_lo, double r_hi, const InterfererDensityModel& model);
//! lambda0 * pcf(r)
double interferer_density(double r, const InterfererDensityModel& model);

//! E[exp(-s I)] of the aggregate interference at the typical BS; s in m^alpha.
double interference_laplace(double s, const InterfererDensityModel& model, double alpha_pl,
                            const numerics::QuadratureSpec& spec = {});

struct CoveragePoint {
    double threshold = 0;  // linear SIR
    double p_c = 0;
};
using CoverageCurve = std::vector<CoveragePoint>;

// Coverage evaluation with the Laplace transform tabulated on a log-spaced
// grid of the scale-free argument s * lambda0^(alpha/2) and interpolated by a
// monotone cubic in (log s, log(-log L)). The grid is doubled until coverage at
// a set of probe thresholds moves by less than 1e-4.
class CoverageEvaluator {
public:
    CoverageEvaluator(const NetworkConfig& cfg, const InterfererDensityModel& model,
                      const numerics::QuadratureSpec& spec = {});

    //! T >= 0; T = 0 gives 1.
    double coverage(double threshold) const;
    //! Same integral with the Laplace transform evaluated directly.
    double coverage_direct(double threshold) const;
    //! Integral over t >= 0 of P_c(2^t - 1), cut where P_c < 1e-6.
    double spectral_efficiency_integral() const;
    std::size_t table_size() const { return table_.size(); }

private:
    double laplace_scaled(double s_scaled) const;
    double laplace_scaled_direct(double s_scaled) const;
    double coverage_with(double threshold, bool direct) const;
    void build_table(std::size_t points);

    NetworkConfig cfg_;
    InterfererDensityModel model_;
    numerics::QuadratureSpec spec_;
    numerics::MonotoneCubic table_;
    double log_s_lo_ = 0;
    double log_s_hi_ = 0;
};

double coverage_probability(double threshold, const NetworkConfig& cfg,
                            const InterfererDensityModel& model,
                            const numerics::QuadratureSpec& spec = {});

CoverageCurve coverage_curve(const std::vector<double>& thresholds, const NetworkConfig& cfg,
                             const InterfererDensityModel& model,
                             const numerics::QuadratureSpec& spec = {});

//! B * E[1/N] * integral of P_c(2^t - 1) dt; area_model must be fitted at
//! (cfg.lambda0, cfg.r_c()).
double average_user_se(const NetworkConfig& cfg, const InterfererDensityModel& model,
                       const BetaMixtureAreaModel& area_model,
                       const numerics::QuadratureSpec& spec = {});

//! Everything the analytical chain needs for one scenario, fitted once.
struct UplinkAnalysis {
    NetworkConfig cfg;
    BetaMixtureAreaModel area_model;
    InterfererDensityModel density_model;
    std::shared_ptr<const CoverageEvaluator> evaluator;

    static UplinkAnalysis build(const NetworkConfig& cfg,
                                const numerics::QuadratureSpec& quad = {},
                                const numerics::RootFindSpec& root = {});

    double coverage(double threshold) const { return evaluator->coverage(threshold); }
    double mean_inverse_load() const;
    double average_se() const;
};

}  // namespace jmcell
