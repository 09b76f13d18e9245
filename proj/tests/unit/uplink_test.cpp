//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/uplink.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "jmcell/area_model.hpp"
#include "jmcell/error.hpp"

namespace jmcell {
namespace {

using boost::math::quadrature::gauss_kronrod;
using std::numbers::pi;

constexpr double kLambda = 4e-6;

NetworkConfig config(double kappa, double lambda0 = kLambda)
{
    NetworkConfig cfg;
    cfg.lambda0 = lambda0;
    cfg.kappa = kappa;
    cfg.lambda_u = 200 * lambda0;
    return cfg;
}

double gk(const std::function<double(double)>& f, double a, double b)
{
    return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-11);
}

// Independent Laplace transform of a Poisson field with density lambda0 g(r)
// and Rayleigh fading: exp(-2 pi lambda0 int g(r) r s r^-a / (1 + s r^-a) dr).
double laplace_oracle(double s, const InterfererDensityModel& m, double alpha)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    auto f = [&](double r) {
        return pcf(r, m) * r / (1 + std::pow(r, alpha) / s);
    };
    return std::exp(-2 * pi * m.lambda0 * integrator.integrate(f, 1e-9));
}

TEST(Scaling, RadiusKappaRoundTrip)
{
    EXPECT_NEAR(radius_for_kappa(kLambda, 1), 1 / std::sqrt(pi * 1.25 * kLambda), 1e-9);
    for (double k : {0.05, 0.4, 1.0, 7.0}) {
        EXPECT_NEAR(kappa_for_radius(kLambda, radius_for_kappa(kLambda, k)), k, 1e-12);
    }
    EXPECT_NEAR(config(1).r_c(), 252.313, 1e-3);
}

TEST(NetworkConfig, Validation)
{
    EXPECT_NO_THROW(config(1).validate());
    auto bad = config(1);
    bad.alpha_pl = 2;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config(1);
    bad.kappa = 0;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config(1);
    bad.lambda_u = -1;
    EXPECT_THROW(bad.validate(), InvalidArgument);
    bad = config(1);
    bad.bandwidth = 0;
    EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(ServingDistance, TruncatedRayleigh)
{
    const NetworkConfig cfg = config(1);
    const double r_c = cfg.r_c();
    EXPECT_EQ(serving_distance_cdf(0, cfg), 0);
    EXPECT_NEAR(serving_distance_cdf(r_c, cfg), 1, 1e-14);
    EXPECT_NEAR(serving_distance_cdf(126.16, cfg), 0.3499, 1e-4);
    const double k = pi * 1.25 * kLambda;
    for (double f : {0.1, 0.5, 0.9}) {
        const double d = f * r_c;
        EXPECT_NEAR(serving_distance_cdf(d, cfg),
                    (1 - std::exp(-k * d * d)) / (1 - std::exp(-1.0)), 1e-12);
    }
    EXPECT_NEAR(gk([&](double d) { return serving_distance_pdf(d, cfg); }, 0, r_c), 1, 1e-10);
    EXPECT_THROW(serving_distance_cdf(-1, cfg), DomainError);
    EXPECT_THROW(serving_distance_cdf(1.001 * r_c, cfg), DomainError);
    EXPECT_THROW(serving_distance_pdf(1.001 * r_c, cfg), DomainError);
}

TEST(InterfererDensity, UnitFitIsDensityFree)
{
    const auto a = InterfererDensityModel::build(4e-6, 1);
    const auto b = InterfererDensityModel::build(1e-5, 1);
    EXPECT_DOUBLE_EQ(a.inv_moment_unit, b.inv_moment_unit);
    EXPECT_DOUBLE_EQ(a.at_density(1e-5).inv_moment_unit, a.inv_moment_unit);
    EXPECT_EQ(a.at_density(1e-5).lambda0, 1e-5);
    const BetaMixtureAreaModel unit = fit_area_model(1.0, radius_for_kappa(1.0, 1));
    EXPECT_NEAR(a.inv_moment_unit / inverse_area_moment(unit), 1, 1e-12);
}

TEST(InterfererDensity, SmallKappaUsesNearestFit)
{
    EXPECT_NO_THROW(InterfererDensityModel::build(kLambda, 0.2));
    EXPECT_THROW(InterfererDensityModel::build(kLambda, 0), InvalidArgument);
}

TEST(Pcf, ShapeAndAnnulusMean)
{
    const auto m = InterfererDensityModel::build(kLambda, 1);
    EXPECT_EQ(pcf(0, m), 0);
    EXPECT_NEAR(pcf(5 / std::sqrt(kLambda), m), 1, 1e-12);
    EXPECT_THROW(pcf(-1, m), DomainError);
    double prev = 0;
    for (int i = 1; i <= 200; ++i) {
        const double r = i * 5.0;
        const double g = pcf(r, m);
        ASSERT_GE(g, prev);
        ASSERT_LE(g, 1.0);
        EXPECT_NEAR(g, 1 - std::exp(-2 * pi * kLambda * r * r * m.inv_moment_unit), 1e-14);
        EXPECT_DOUBLE_EQ(interferer_density(r, m), kLambda * g);
        prev = g;
    }
    for (auto [lo, hi] : {std::pair{0.0, 25.0}, std::pair{100.0, 125.0}, std::pair{40.0, 900.0}}) {
        const double oracle
            = gk([&](double r) { return pcf(r, m) * 2 * r; }, lo, hi) / (hi * hi - lo * lo);
        EXPECT_NEAR(pcf_annulus_mean(lo, hi, m), oracle, 1e-10);
    }
    EXPECT_THROW(pcf_annulus_mean(10, 10, m), DomainError);
}

TEST(Laplace, MatchesIndependentIntegral)
{
    const auto m = InterfererDensityModel::build(kLambda, 1);
    EXPECT_EQ(interference_laplace(0, m, 3.7), 1);
    double prev = 1;
    for (double s_scaled : {1e-4, 1e-2, 0.3, 1.0, 10.0, 300.0}) {
        const double s = s_scaled / std::pow(kLambda, 3.7 / 2);
        const double l = interference_laplace(s, m, 3.7);
        EXPECT_NEAR(l, laplace_oracle(s, m, 3.7), 1e-7) << s_scaled;
        EXPECT_LE(l, prev);
        prev = l;
    }
    EXPECT_THROW(interference_laplace(-1, m, 3.7), DomainError);
    EXPECT_THROW(interference_laplace(1, m, 2), DomainError);
}

TEST(Coverage, MatchesDirectIntegral)
{
    const NetworkConfig cfg = config(1);
    const auto m = InterfererDensityModel::build(kLambda, 1);
    const CoverageEvaluator eval(cfg, m);
    EXPECT_GE(eval.table_size(), 49u);
    const double r_c = cfg.r_c();
    for (double db : {-10.0, 0.0, 10.0, 20.0}) {
        const double t = std::pow(10, db / 10);
        const double oracle = gk(
            [&](double d) {
                return serving_distance_pdf(d, cfg) * laplace_oracle(t * std::pow(d, 3.7), m, 3.7);
            },
            0, r_c);
        EXPECT_NEAR(eval.coverage(t), oracle, 2e-4) << db;
        EXPECT_NEAR(eval.coverage_direct(t), oracle, 1e-6) << db;
    }
    EXPECT_EQ(eval.coverage(0), 1);
    EXPECT_NEAR(coverage_probability(1, cfg, m), eval.coverage(1), 1e-12);
    EXPECT_THROW(coverage_probability(-1, cfg, m), DomainError);
}

TEST(Coverage, MonotoneInThresholdAndKappa)
{
    std::vector<double> ts;
    for (double db = -20; db <= 30; db += 2.5) {
        ts.push_back(std::pow(10, db / 10));
    }
    std::vector<CoverageCurve> curves;
    for (double kappa : {0.4, 1.0, 2.0}) {
        const NetworkConfig cfg = config(kappa);
        curves.push_back(coverage_curve(ts, cfg, InterfererDensityModel::build(kLambda, kappa)));
        const auto& c = curves.back();
        ASSERT_EQ(c.size(), ts.size());
        for (std::size_t i = 1; i < c.size(); ++i) {
            EXPECT_LE(c[i].p_c, c[i - 1].p_c + 1e-12);
            EXPECT_GE(c[i].p_c, 0);
        }
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_GE(curves[0][i].p_c + 1e-12, curves[1][i].p_c);
        EXPECT_GE(curves[1][i].p_c + 1e-12, curves[2][i].p_c);
    }
}

TEST(Coverage, DensityInvariant)
{
    const UplinkAnalysis a = UplinkAnalysis::build(config(1, 4e-6));
    const UplinkAnalysis b = UplinkAnalysis::build(config(1, 1e-5));
    for (double t : {0.1, 1.0, 10.0}) {
        EXPECT_NEAR(a.coverage(t), b.coverage(t), 1e-6);
    }
}

TEST(SpectralEfficiency, Decomposition)
{
    const NetworkConfig cfg = config(1);
    const UplinkAnalysis an = UplinkAnalysis::build(cfg);
    const double integral = an.evaluator->spectral_efficiency_integral();
    const double oracle = gauss_kronrod<double, 61>::integrate(
        [&](double t) { return an.coverage(std::exp2(t) - 1); }, 0, 40, 6, 1e-8);
    EXPECT_NEAR(integral, oracle, 1e-4 * oracle);
    EXPECT_NEAR(an.average_se(), an.mean_inverse_load() * integral, 1e-9 * integral);

    NetworkConfig wide = cfg;
    wide.bandwidth = 20;
    EXPECT_NEAR(average_user_se(wide, an.density_model, an.area_model), 20 * an.average_se(),
                1e-9);
    NetworkConfig alone = cfg;
    alone.lambda_u = 0;
    EXPECT_NEAR(average_user_se(alone, an.density_model, an.area_model), integral, 1e-9);

    const BetaMixtureAreaModel other = fit_area_model(kLambda, 400);
    EXPECT_THROW(average_user_se(cfg, an.density_model, other), InvalidArgument);
}

TEST(SpectralEfficiency, DecreasesWithKappa)
{
    double prev = std::numeric_limits<double>::infinity();
    for (double kappa : {0.2, 0.4, 1.0, 2.0}) {
        const double se = UplinkAnalysis::build(config(kappa)).average_se();
        EXPECT_LT(se, prev) << kappa;
        prev = se;
    }
    EXPECT_LT(UplinkAnalysis::build(config(0.2)).average_se(), 2.0);
}

}  // namespace
}  // namespace jmcell
