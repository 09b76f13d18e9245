//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/area_model.hpp
//! Area law of a typical Johnson-Mehl cell.
//!
//! The exact first two moments of the cell area feed a moment-matched mixture:
//! an atom at pi r_c^2 (the whole disk fits inside the Voronoi cell) plus a
//! beta density on [0, 3/2 pi r_c^2] truncated to [0, pi r_c^2] for the
//! cut cells. Areas are in m^2, densities in BS/m^2.
//------------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <functional>

#include "jmcell/numerics.hpp"

namespace jmcell {

struct AreaMoments {
    double m1 = 0;         // E[X], m^2
    double m2 = 0;         // E[X^2], m^4
    double variance = 0;   // m^4
    double p_e1 = 0;       // P(disk inside Voronoi cell)
    double cond_mean = 0;  // E[X | cut], m^2
    double cond_var = 0;   // Var[X | cut], m^4
};

struct AreaSupport {
    double lo = 0;
    double hi = 0;
};

struct BetaMixtureAreaModel {
    double lambda0 = 0;
    double r_c = 0;
    double shape_alpha = 0;
    double shape_beta = 0;
    AreaSupport trunc_support;  // [v, w] = [0, pi r_c^2]
    AreaSupport full_support;   // [y, z] = [0, 3/2 pi r_c^2]
    double dirac_location = 0;  // pi r_c^2
    double dirac_weight = 0;    // p_e1
    //! Natural log of the normalizer integral of (x-y)^(a-1) (z-x)^(b-1) over [v, w].
    double log_normalizer = 0;
    //! Var_model / Var_target - 1 for the continuous part; 0 for an exact fit.
    double variance_mismatch = 0;

    double normalizer() const;
    //! Mean and variance of the continuous (cut-cell) component.
    double continuous_mean(const numerics::QuadratureSpec& spec = {}) const;
    double continuous_variance(const numerics::QuadratureSpec& spec = {}) const;
    //! E[g(X)] under the continuous component.
    double expect_continuous(const std::function<double(double)>& g,
                             const numerics::QuadratureSpec& spec = {}) const;
    //! Throws InvalidShape if any invariant is violated.
    void validate() const;
};

//! Closed-form mean area, (1 - exp(-pi lambda0 r_c^2)) / lambda0.
double area_mean(double lambda0, double r_c);

//! Second moment via the triple integral of exp(-lambda0 V) over the disk pair.
double area_second_moment(double lambda0, double r_c, const numerics::QuadratureSpec& spec = {});

//! Area of the union of two disks of radii r1, r2 that both pass through the
//! origin, with centres at angular separation u.
double union_area(double r1, double r2, double u);

//! P(disk of radius r_c lies inside the Voronoi cell) = exp(-4 pi lambda0 r_c^2).
double prob_disk_inside_cell(double lambda0, double r_c);

//! Unconditional and conditional (cut-cell) moments. Throws InvalidMoments
//! when the conditional variance comes out below -1e-9 m1^2.
AreaMoments conditional_moments(double lambda0, double r_c,
                                const numerics::QuadratureSpec& spec = {});

BetaMixtureAreaModel fit_area_model(double lambda0, double r_c,
                                    const numerics::QuadratureSpec& quad = {},
                                    const numerics::RootFindSpec& root = {});

//! Smallest beta shape used when the exact fit has no root.
inline constexpr double kMinShapeBeta = 1e-3;

//! As fit_area_model, but when the conditional law is more dispersed than any
//! truncated beta on [0, w] can be (small r_c sqrt(lambda0)), matches the mean
//! exactly with shape_beta = kMinShapeBeta, which minimizes the variance miss,
//! and records that miss in variance_mismatch.
BetaMixtureAreaModel fit_area_model_nearest(double lambda0, double r_c,
                                            const numerics::QuadratureSpec& quad = {},
                                            const numerics::RootFindSpec& root = {});

//! Continuous density of the mixture at x; the atom is reported separately.
struct AreaDensity {
    double continuous = 0;  // 1/m^2, already weighted by 1 - p_e1
    double atom_location = 0;
    double atom_mass = 0;
};

//! Throws DomainError outside [0, pi r_c^2].
AreaDensity area_pdf(const BetaMixtureAreaModel& model, double x);

//! Right-continuous mixture CDF. Values outside the support clamp to 0 / 1.
double area_cdf(const BetaMixtureAreaModel& model, double x,
                const numerics::QuadratureSpec& spec = {});

//! E[1/X]. For shape_alpha <= 1 the continuous part is integrated from
//! 1e-6 pi r_c^2 and DivergentMoment is thrown if halving that cutoff moves
//! the result by more than 1%.
double inverse_area_moment(const BetaMixtureAreaModel& model,
                           const numerics::QuadratureSpec& spec = {});

//! E[1/X] with the continuous part integrated from cutoff_fraction * pi r_c^2.
double inverse_area_moment_with_cutoff(const BetaMixtureAreaModel& model,
                                       double cutoff_fraction,
                                       const numerics::QuadratureSpec& spec = {});

struct LoadModel {
    double mean_load = 0;  // lambda_u * x_c
};

//! Zero-truncated Poisson pmf. Throws DomainError for n = 0.
double load_pmf(const LoadModel& load, std::uint64_t n);

//! Sum over n >= 1 of pmf(n) / n, i.e. E[1/N | mean_load].
double inverse_load_given_area(double mean_load);

//! E[1/N] averaged over the fitted area law (atom included).
double mean_inverse_load(double lambda_u, const BetaMixtureAreaModel& model,
                         const numerics::QuadratureSpec& spec = {});

}  // namespace jmcell
