//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/area_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "jmcell/error.hpp"

namespace jmcell {

using numerics::QuadratureSpec;
using numerics::RootFindSpec;

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double lambda0, double r_c)
{
    if (!(lambda0 > 0) || !(r_c > 0) || !std::isfinite(lambda0) || !std::isfinite(r_c)) {
        throw InvalidArgument("lambda0 and r_c must be positive and finite");
    }
}

// Tight settings for the smooth one-dimensional shape integrals.
QuadratureSpec shape_spec(const QuadratureSpec& spec)
{
    QuadratureSpec s = spec;
    s.rel_tol = std::min(spec.rel_tol, 1e-11);
    s.abs_tol = 1e-300;
    return s;
}

// In the scaled variable t = (x - y) / (z - y) the truncated support is
// [0, tau]. Substituting t = tau s^(1/alpha) absorbs the t^(alpha-1) factor,
// so every shape integral becomes an integral of a bounded function of s on
// [0, 1] with weight (1 - t)^(beta-1).
struct ShapeIntegrals {
    double alpha;
    double beta;
    double tau;

    double t_of(double s) const { return tau * std::pow(s, 1 / alpha); }
    double weight(double t) const { return std::exp((beta - 1) * std::log1p(-t)); }

    // Values can be tiny for large beta, so error control is relative only.
    static QuadratureSpec relative(const QuadratureSpec& spec)
    {
        QuadratureSpec s = spec;
        s.abs_tol = 1e-300;
        return s;
    }

    double k(const QuadratureSpec& spec) const
    {
        return numerics::integrate_1d([&](double s) { return weight(t_of(s)); }, 0, 1,
                                      relative(spec));
    }

    double expect(const std::function<double(double)>& g_of_t, const QuadratureSpec& spec) const
    {
        const double num = numerics::integrate_1d(
            [&](double s) {
                const double t = t_of(s);
                return g_of_t(t) * weight(t);
            },
            0, 1, relative(spec));
        return num / k(spec);
    }
};

ShapeIntegrals shape_of(const BetaMixtureAreaModel& m)
{
    const double tau = (m.trunc_support.hi - m.full_support.lo)
                       / (m.full_support.hi - m.full_support.lo);
    return {m.shape_alpha, m.shape_beta, tau};
}

double log_normalizer_for(double alpha, double beta, double z, double tau,
                          const QuadratureSpec& spec)
{
    const ShapeIntegrals sh{alpha, beta, tau};
    return (alpha + beta - 1) * std::log(z) + alpha * std::log(tau) - std::log(alpha)
           + std::log(sh.k(shape_spec(spec)));
}

// (a - m1) with the small-x cancellation handled by series.
double mean_deficit(double lambda0, double x)
{
    if (x < 1e-4) {
        return x * x * (0.5 - x / 6 + x * x / 24) / lambda0;
    }
    return (x + std::expm1(-x)) / lambda0;
}

struct SecondMoment {
    double m2;
    double deficit;  // (pi r_c^2)^2 - m2
};

SecondMoment second_moment_parts(double lambda0, double r_c, const QuadratureSpec& spec)
{
    require_positive(lambda0, r_c);
    const double a = pi * r_c * r_c;
    const double x = lambda0 * a;
    const double s = lambda0 * r_c * r_c;
    const bool use_deficit = x < 1;

    // Unit-radius coordinates; u in [0, pi] by symmetry of V in u.
    auto integrand = [&](double rho1, double rho2, double u) {
        const double v = union_area(rho1, rho2, u);
        const double e = use_deficit ? -std::expm1(-s * v) : std::exp(-s * v);
        return e * rho1 * rho2;
    };
    QuadratureSpec qs = spec;
    qs.abs_tol = std::min(spec.abs_tol, 1e-14);
    const double scaled = numerics::integrate_3d(
        integrand, {{{0, 1}, {0, 1}, {0, pi}}}, qs);
    const double value = 4 * pi * std::pow(r_c, 4) * scaled;
    if (use_deficit) {
        return {a * a - value, value};
    }
    return {value, a * a - value};
}

}  // namespace

//---------------------------------------------------------------------------//
// Moments
//---------------------------------------------------------------------------//
double area_mean(double lambda0, double r_c)
{
    require_positive(lambda0, r_c);
    return -std::expm1(-pi * lambda0 * r_c * r_c) / lambda0;
}

double union_area(double r1, double r2, double u)
{
    if (!(r1 >= 0) || !(r2 >= 0)) {
        throw DomainError("union_area radii must be non-negative");
    }
    const double rmax = std::max(r1, r2);
    const double d_sq = r1 * r1 + r2 * r2 - 2 * r1 * r2 * std::cos(u);
    const double d = std::sqrt(std::max(0.0, d_sq));
    if (rmax == 0 || d < 1e-12 * rmax) {
        return pi * rmax * rmax;
    }
    const double v = std::acos(std::clamp((r1 - r2 * std::cos(u)) / d, -1.0, 1.0));
    const double w = std::acos(std::clamp((r2 - r1 * std::cos(u)) / d, -1.0, 1.0));
    return r1 * r1 * (pi - v + 0.5 * std::sin(2 * v)) + r2 * r2 * (pi - w + 0.5 * std::sin(2 * w));
}

double area_second_moment(double lambda0, double r_c, const QuadratureSpec& spec)
{
    return second_moment_parts(lambda0, r_c, spec).m2;
}

double prob_disk_inside_cell(double lambda0, double r_c)
{
    require_positive(lambda0, r_c);
    return std::exp(-4 * pi * lambda0 * r_c * r_c);
}

AreaMoments conditional_moments(double lambda0, double r_c, const QuadratureSpec& spec)
{
    require_positive(lambda0, r_c);
    const double a = pi * r_c * r_c;
    const double x = lambda0 * a;
    const double d1 = mean_deficit(lambda0, x);
    const SecondMoment sm = second_moment_parts(lambda0, r_c, spec);

    AreaMoments out;
    out.m1 = a - d1;
    out.m2 = sm.m2;
    out.variance = 2 * a * d1 - d1 * d1 - sm.deficit;
    out.p_e1 = std::exp(-4 * x);
    const double q = -std::expm1(-4 * x);
    if (!(q > 0)) {
        throw InvalidMoments("P(cut cell) underflows; r_c too small for this density");
    }
    // Total expectation / total variance with E[X | E1] = a, Var[X | E1] = 0,
    // written through the deficits to avoid cancellation as r_c -> 0.
    out.cond_mean = a - d1 / q;
    double cond_var = 2 * a * d1 / q - (d1 / q) * (d1 / q) - sm.deficit / q;
    if (cond_var < -1e-9 * out.m1 * out.m1) {
        std::ostringstream os;
        os << "conditional variance " << cond_var << " is negative";
        throw InvalidMoments(os.str());
    }
    out.cond_var = std::max(cond_var, 0.0);
    return out;
}

//---------------------------------------------------------------------------//
// Beta mixture
//---------------------------------------------------------------------------//
double BetaMixtureAreaModel::normalizer() const
{
    return std::exp(log_normalizer);
}

void BetaMixtureAreaModel::validate() const
{
    if (!(shape_alpha > 0) || !(shape_beta > 0) || !std::isfinite(shape_alpha)
        || !std::isfinite(shape_beta)) {
        throw InvalidShape("beta shapes must be positive and finite");
    }
    if (!(full_support.lo == trunc_support.lo) || !(trunc_support.hi < full_support.hi)
        || !(trunc_support.lo < trunc_support.hi)) {
        throw InvalidShape("supports must satisfy y = v < w < z");
    }
    if (!(dirac_weight >= 0 && dirac_weight < 1)) {
        throw InvalidShape("atom weight must lie in [0, 1)");
    }
}

double BetaMixtureAreaModel::expect_continuous(const std::function<double(double)>& g,
                                               const QuadratureSpec& spec) const
{
    const ShapeIntegrals sh = shape_of(*this);
    const double y = full_support.lo;
    const double scale = full_support.hi - full_support.lo;
    return sh.expect([&](double t) { return g(y + scale * t); }, spec);
}

double BetaMixtureAreaModel::continuous_mean(const QuadratureSpec& spec) const
{
    return expect_continuous([](double x) { return x; }, shape_spec(spec));
}

double BetaMixtureAreaModel::continuous_variance(const QuadratureSpec& spec) const
{
    const double mean = continuous_mean(spec);
    return expect_continuous([mean](double x) { return (x - mean) * (x - mean); },
                             shape_spec(spec));
}

namespace {

struct FitProblem {
    AreaMoments mom;
    BetaMixtureAreaModel model;
    double z = 0;
    double tau = 0;
};

FitProblem fit_problem(double lambda0, double r_c, const QuadratureSpec& quad)
{
    FitProblem p;
    p.mom = conditional_moments(lambda0, r_c, quad);
    const double a = pi * r_c * r_c;
    p.model.lambda0 = lambda0;
    p.model.r_c = r_c;
    p.model.trunc_support = {0, a};
    p.model.full_support = {0, 1.5 * a};
    p.model.dirac_location = a;
    p.model.dirac_weight = p.mom.p_e1;
    p.z = p.model.full_support.hi;
    p.tau = p.model.trunc_support.hi / p.z;
    if (!(p.mom.cond_var > 0) || !(p.mom.cond_mean > 0) || !(p.mom.cond_mean < a)) {
        throw InvalidMoments("conditional moments admit no beta fit");
    }
    return p;
}

// Relative misses of the scaled mean and variance for log shapes.
numerics::Pair shape_residual(const FitProblem& p, double log_alpha, double log_beta,
                              const QuadratureSpec& sq)
{
    const ShapeIntegrals sh{std::exp(log_alpha), std::exp(log_beta), p.tau};
    const double mean_t = sh.expect([](double t) { return t; }, sq);
    const double var_t = sh.expect([mean_t](double t) { return (t - mean_t) * (t - mean_t); }, sq);
    return {mean_t * p.z / p.mom.cond_mean - 1, var_t * p.z * p.z / p.mom.cond_var - 1};
}

BetaMixtureAreaModel finish_fit(FitProblem& p, double alpha, double beta,
                                const QuadratureSpec& quad)
{
    BetaMixtureAreaModel& model = p.model;
    model.shape_alpha = alpha;
    model.shape_beta = beta;
    if (!(alpha > 0) || !(beta > 0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw InvalidShape("moment matching produced a non-positive shape");
    }
    model.log_normalizer = log_normalizer_for(alpha, beta, p.z, p.tau, quad);
    model.validate();
    return model;
}

}  // namespace

BetaMixtureAreaModel fit_area_model(double lambda0, double r_c, const QuadratureSpec& quad,
                                    const RootFindSpec& root)
{
    FitProblem p = fit_problem(lambda0, r_c, quad);

    // Untruncated beta on [0, z] as the starting point.
    const double mu = p.mom.cond_mean / p.z;
    const double var = p.mom.cond_var / (p.z * p.z);
    const double common = mu * (1 - mu) / var - 1;
    const double alpha0 = common > 0 ? mu * common : 1.0;
    const double beta0 = common > 0 ? (1 - mu) * common : 1.0;

    const QuadratureSpec sq = shape_spec(quad);
    auto residual = [&](const numerics::Pair& logs) {
        return shape_residual(p, logs[0], logs[1], sq);
    };
    const numerics::Pair sol
        = numerics::solve_2d(residual, {std::log(alpha0), std::log(beta0)}, root);
    return finish_fit(p, std::exp(sol[0]), std::exp(sol[1]), quad);
}

BetaMixtureAreaModel fit_area_model_nearest(double lambda0, double r_c,
                                            const QuadratureSpec& quad,
                                            const RootFindSpec& root)
{
    try {
        return fit_area_model(lambda0, r_c, quad, root);
    } catch (const NoRoot&) {
    }
    FitProblem p = fit_problem(lambda0, r_c, quad);
    const QuadratureSpec sq = shape_spec(quad);
    const double log_beta = std::log(kMinShapeBeta);
    auto mean_miss = [&](double log_alpha) { return shape_residual(p, log_alpha, log_beta, sq)[0]; };

    // The mean rises with alpha; bisect in log alpha.
    double lo = std::log(1e-3);
    double hi = std::log(1e4);
    if (!(mean_miss(lo) < 0) || !(mean_miss(hi) > 0)) {
        throw NoRoot("no alpha reproduces the conditional mean at the minimum beta");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mean_miss(mid) < 0 ? lo : hi) = mid;
    }
    const double log_alpha = 0.5 * (lo + hi);
    BetaMixtureAreaModel model = finish_fit(p, std::exp(log_alpha), kMinShapeBeta, quad);
    model.variance_mismatch = shape_residual(p, log_alpha, log_beta, sq)[1];
    return model;
}

AreaDensity area_pdf(const BetaMixtureAreaModel& model, double x)
{
    const double w = model.trunc_support.hi;
    if (!(x >= model.trunc_support.lo) || !(x <= w)) {
        throw DomainError("area_pdf evaluated outside [0, pi r_c^2]");
    }
    const double y = model.full_support.lo;
    const double z = model.full_support.hi;
    const double a1 = model.shape_alpha - 1;
    const double b1 = model.shape_beta - 1;

    AreaDensity out;
    out.atom_location = model.dirac_location;
    out.atom_mass = model.dirac_weight;
    double log_f = 0;
    if (x == y) {
        if (a1 > 0) {
            return out;
        }
        if (a1 < 0) {
            out.continuous = std::numeric_limits<double>::infinity();
            return out;
        }
        log_f = b1 * std::log(z - y) - model.log_normalizer;
    } else {
        log_f = a1 * std::log(x - y) + b1 * std::log(z - x) - model.log_normalizer;
    }
    out.continuous = (1 - model.dirac_weight) * std::exp(log_f);
    return out;
}

double area_cdf(const BetaMixtureAreaModel& model, double x, const QuadratureSpec& spec)
{
    const double y = model.full_support.lo;
    const double w = model.trunc_support.hi;
    const double z = model.full_support.hi;
    if (x <= model.trunc_support.lo) {
        return 0;
    }
    if (x >= w) {
        return 1;
    }
    // P(X <= x | cut) = ((x-y)/(w-y))^alpha * K(x) / K(w), where K(.) is the
    // s-integral of (1 - ((.)-y)/(z-y) s^(1/alpha))^(beta-1).
    const double alpha = model.shape_alpha;
    const double beta = model.shape_beta;
    const QuadratureSpec sq = shape_spec(spec);
    auto k_at = [&](double upper) {
        const ShapeIntegrals sh{alpha, beta, (upper - y) / (z - y)};
        return sh.k(sq);
    };
    const double frac = std::pow((x - y) / (w - y), alpha) * k_at(x) / k_at(w);
    return (1 - model.dirac_weight) * std::clamp(frac, 0.0, 1.0);
}

double inverse_area_moment_with_cutoff(const BetaMixtureAreaModel& model,
                                       double cutoff_fraction, const QuadratureSpec& spec)
{
    if (!(cutoff_fraction > 0) || !(cutoff_fraction < 1)) {
        throw InvalidArgument("cutoff_fraction must lie in (0, 1)");
    }
    const double y = model.full_support.lo;
    const double w = model.trunc_support.hi;
    const double z = model.full_support.hi;
    const double scale = z - y;
    const double alpha = model.shape_alpha;
    const double beta = model.shape_beta;
    const double eps = cutoff_fraction * (w - y);

    // Integral of t^(alpha-2) (1-t)^(beta-1) over [eps/scale, tau] with t = e^q.
    auto integrand = [&](double q) {
        const double t = std::exp(q);
        return std::exp((alpha - 1) * q + (beta - 1) * std::log1p(-t));
    };
    QuadratureSpec qs = spec;
    qs.abs_tol = 1e-300;
    const double integral = numerics::integrate_1d(integrand, std::log(eps / scale),
                                                   std::log((w - y) / scale), qs);
    const double log_cont
        = (alpha + beta - 2) * std::log(scale) + std::log(integral) - model.log_normalizer;
    return (1 - model.dirac_weight) * std::exp(log_cont)
           + model.dirac_weight / model.dirac_location;
}

double inverse_area_moment(const BetaMixtureAreaModel& model, const QuadratureSpec& spec)
{
    model.validate();
    const double alpha = model.shape_alpha;
    if (alpha > 1 && model.full_support.lo == 0) {
        // E[1/X | cut] = alpha / ((alpha-1) w) * K(alpha-1) / K(alpha).
        const double tau = shape_of(model).tau;
        const QuadratureSpec sq = shape_spec(spec);
        const ShapeIntegrals lower{alpha - 1, model.shape_beta, tau};
        const ShapeIntegrals upper{alpha, model.shape_beta, tau};
        const double cont
            = alpha / ((alpha - 1) * model.trunc_support.hi) * lower.k(sq) / upper.k(sq);
        return (1 - model.dirac_weight) * cont + model.dirac_weight / model.dirac_location;
    }
    constexpr double cutoff = 1e-6;
    const double value = inverse_area_moment_with_cutoff(model, cutoff, spec);
    const double halved = inverse_area_moment_with_cutoff(model, cutoff / 2, spec);
    if (std::abs(halved - value) > 0.01 * std::abs(value)) {
        std::ostringstream os;
        os << "E[1/X] diverges: shape_alpha = " << alpha << ", cutoff sensitivity "
           << std::abs(halved - value) / value;
        throw DivergentMoment(os.str());
    }
    return value;
}

//---------------------------------------------------------------------------//
// Load
//---------------------------------------------------------------------------//
double load_pmf(const LoadModel& load, std::uint64_t n)
{
    if (n == 0) {
        throw DomainError("zero-truncated load has no mass at n = 0");
    }
    const double mu = load.mean_load;
    if (!(mu > 0) || !std::isfinite(mu)) {
        throw InvalidArgument("mean_load must be positive and finite");
    }
    const auto nd = static_cast<double>(n);
    return std::exp(-mu + nd * std::log(mu) - std::lgamma(nd + 1) - std::log(-std::expm1(-mu)));
}

double inverse_load_given_area(double mu)
{
    if (!(mu >= 0) || !std::isfinite(mu)) {
        throw InvalidArgument("mean load must be non-negative and finite");
    }
    if (mu == 0) {
        return 1;
    }
    // Terms t_n = pmf(n) / n, summed outward from the mode.
    const auto mode = static_cast<std::uint64_t>(std::max(1.0, std::floor(mu)));
    constexpr double cutoff = 1e-12;
    const double log_norm = std::log(-std::expm1(-mu));
    const auto md = static_cast<double>(mode);
    const double t_mode
        = std::exp(-mu + md * std::log(mu) - std::lgamma(md + 1) - std::log(md) - log_norm);

    double sum = t_mode;
    double t = t_mode;
    for (std::uint64_t n = mode; ; ++n) {
        const auto nd = static_cast<double>(n);
        t *= nd * mu / ((nd + 1) * (nd + 1));
        sum += t;
        if (t < cutoff * std::min(1.0, sum)) {
            break;
        }
    }
    t = t_mode;
    for (std::uint64_t n = mode; n > 1; --n) {
        const auto nd = static_cast<double>(n);
        t *= nd * nd / ((nd - 1) * mu);
        sum += t;
        if (t < cutoff * std::min(1.0, sum)) {
            break;
        }
    }
    return sum;
}

double mean_inverse_load(double lambda_u, const BetaMixtureAreaModel& model,
                         const QuadratureSpec& spec)
{
    if (!(lambda_u > 0)) {
        throw InvalidArgument("lambda_u must be positive");
    }
    model.validate();
    const double cont = model.expect_continuous(
        [lambda_u](double x) { return inverse_load_given_area(lambda_u * x); }, spec);
    return (1 - model.dirac_weight) * cont
           + model.dirac_weight * inverse_load_given_area(lambda_u * model.dirac_location);
}

}  // namespace jmcell
