//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "jmcell/error.hpp"
#include "jmcell/parallel.hpp"

namespace jmcell {
namespace {

constexpr double pi = std::numbers::pi;
constexpr std::uint32_t kMaxAttempts = 64;

std::uint64_t attempt_seed(std::uint64_t seed, std::uint32_t attempt)
{
    return attempt == 0 ? seed : mix64(seed ^ mix64(0xA77E'0000ULL + attempt));
}

double mean_of(std::span<const double> v)
{
    double s = 0;
    for (double x : v) {
        s += x;
    }
    return v.empty() ? 0 : s / static_cast<double>(v.size());
}

double stderr_of(std::span<const double> v, double mean)
{
    if (v.size() < 2) {
        return 0;
    }
    double ss = 0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

}  // namespace

SimulationWindow McOptions::window_for(double lambda0) const
{
    return SimulationWindow{window_halfwidth_factor / std::sqrt(lambda0)};
}

double PcfBin::r_norm_center(double lambda0) const
{
    return 0.5 * (r_lo + r_hi) * std::sqrt(lambda0);
}

//---------------------------------------------------------------------------//
// EmpiricalCdf
//---------------------------------------------------------------------------//
EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples))
{
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const
{
    if (sorted_.empty()) {
        throw InvalidArgument("empty empirical distribution");
    }
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::mean() const
{
    return moment(1);
}

double EmpiricalCdf::moment(int k) const
{
    double s = 0;
    for (double x : sorted_) {
        s += std::pow(x, k);
    }
    return sorted_.empty() ? 0 : s / static_cast<double>(sorted_.size());
}

//---------------------------------------------------------------------------//
// Realizations
//---------------------------------------------------------------------------//
NetworkRealization realize(const NetworkConfig& cfg, const SimulationWindow& window,
                           std::uint64_t seed, std::uint64_t index, UserLayout layout,
                           std::size_t n_probe, std::uint32_t attempt)
{
    cfg.validate();
    const std::uint64_t s = attempt_seed(seed, attempt);
    const double r_c = cfg.r_c();
    NetworkRealization out{sample_ppp(cfg.lambda0, window, s, index), {}, {}, 1, {}, 0, 1};
    const JmTessellation tess(out.bs_process, r_c);
    const auto pts = out.bs_process.points();
    const auto ids = out.bs_process.ids();

    auto place = [&](std::size_t k) {
        RngStream rng(s, index, StreamTag::UserPlacement, ids[k]);
        return layout == UserLayout::JmCell ? tess.sample_uniform(k, rng)
                                            : uniform_in_disk(pts[k], r_c, rng);
    };
    auto fade = [&](std::size_t k) {
        RngStream rng(s, index, StreamTag::Fading, ids[k]);
        return rng.exponential();
    };

    out.typical_user = place(0);
    out.serving_fading = fade(0);
    out.interferers.reserve(pts.size() - 1);
    out.interferer_fading.reserve(pts.size() - 1);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        out.interferers.push_back(place(k));
        out.interferer_fading.push_back(fade(k));
    }

    RngStream probes(s, index, StreamTag::AreaProbes);
    out.origin_cell_area_estimate = tess.estimate_area(0, n_probe, probes);
    const double mean_load = cfg.lambda_u * out.origin_cell_area_estimate;
    if (mean_load > 0) {
        RngStream load(s, index, StreamTag::Load);
        out.origin_load = load.zero_truncated_poisson(mean_load);
    }
    return out;
}

double aggregate_interference(const NetworkRealization& real, const NetworkConfig& cfg)
{
    const double half_alpha = cfg.alpha_pl / 2;
    double total = 0;
    for (std::size_t k = 0; k < real.interferers.size(); ++k) {
        const double d_sq = distance_sq(real.interferers[k], Point2{});
        total += real.interferer_fading[k] * std::pow(d_sq, -half_alpha);
    }
    return total;
}

SirSample sir_sample(const NetworkRealization& real, const NetworkConfig& cfg)
{
    if (real.interferers.empty()) {
        throw NoInterferers("realization has no interfering users");
    }
    const double d_sq = distance_sq(real.typical_user, Point2{});
    const double signal = real.serving_fading * std::pow(d_sq, -cfg.alpha_pl / 2);
    return {signal / aggregate_interference(real, cfg), std::sqrt(d_sq), real.origin_load};
}

std::vector<SampleRecord> simulate_samples(const NetworkConfig& cfg, std::size_t n_real,
                                           std::uint64_t seed, const McOptions& opts)
{
    cfg.validate();
    const SimulationWindow window = opts.window_for(cfg.lambda0);
    window.check_for(cfg.lambda0);
    std::vector<SampleRecord> out(n_real);
    parallel_for(
        n_real,
        [&](std::size_t i) {
            for (std::uint32_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
                const NetworkRealization real
                    = realize(cfg, window, seed, i, opts.layout, opts.n_probe, attempt);
                if (real.interferers.empty()) {
                    continue;
                }
                out[i] = {i, attempt + 1, sir_sample(real, cfg), real.origin_cell_area_estimate};
                return;
            }
            throw NoInterferers("no interferers after 64 redraws");
        },
        opts.threads);
    return out;
}

EmpiricalCoverage coverage_from_samples(std::span<const SampleRecord> samples,
                                        std::span<const double> thresholds)
{
    if (samples.empty()) {
        throw InvalidArgument("no samples");
    }
    EmpiricalCoverage out;
    out.n = samples.size();
    for (const SampleRecord& r : samples) {
        out.resampled += r.attempts - 1;
    }
    const auto n = static_cast<double>(samples.size());
    for (double t : thresholds) {
        std::size_t hits = 0;
        for (const SampleRecord& r : samples) {
            hits += r.sample.sir > t ? 1 : 0;
        }
        const double p = static_cast<double>(hits) / n;
        out.points.push_back({t, p, std::sqrt(p * (1 - p) / n)});
    }
    return out;
}

SeEstimate se_from_samples(std::span<const SampleRecord> samples, double bandwidth)
{
    if (samples.empty()) {
        throw InvalidArgument("no samples");
    }
    std::vector<double> v;
    v.reserve(samples.size());
    for (const SampleRecord& r : samples) {
        v.push_back(bandwidth / static_cast<double>(r.sample.load) * std::log2(1 + r.sample.sir));
    }
    const double m = mean_of(v);
    return {m, stderr_of(v, m), v.size()};
}

EmpiricalCoverage estimate_coverage(const NetworkConfig& cfg, std::span<const double> thresholds,
                                    std::size_t n_real, std::uint64_t seed,
                                    const McOptions& opts)
{
    const auto samples = simulate_samples(cfg, n_real, seed, opts);
    return coverage_from_samples(samples, thresholds);
}

EmpiricalCoverage estimate_coverage_mcp(const NetworkConfig& cfg,
                                        std::span<const double> thresholds, std::size_t n_real,
                                        std::uint64_t seed, McOptions opts)
{
    opts.layout = UserLayout::Disk;
    return estimate_coverage(cfg, thresholds, n_real, seed, opts);
}

SeEstimate estimate_se(const NetworkConfig& cfg, std::size_t n_real, std::uint64_t seed,
                       const McOptions& opts)
{
    const auto samples = simulate_samples(cfg, n_real, seed, opts);
    return se_from_samples(samples, cfg.bandwidth);
}

//---------------------------------------------------------------------------//
// Area and PCF statistics
//---------------------------------------------------------------------------//
AreaCdfEstimate estimate_area_cdf(const NetworkConfig& cfg, std::size_t n_real,
                                  std::size_t n_probe, std::uint64_t seed,
                                  std::size_t grid_points, std::size_t threads)
{
    cfg.validate();
    if (n_real == 0 || grid_points < 2) {
        throw InvalidArgument("estimate_area_cdf needs n_real >= 1 and grid_points >= 2");
    }
    const double r_c = cfg.r_c();
    const double disk = pi * r_c * r_c;
    // Stations beyond 2 r_c never touch the origin cell.
    const double patch = 2 * r_c * (1 + 1e-6);
    std::vector<double> areas(n_real);
    parallel_for(
        n_real,
        [&](std::size_t i) {
            const BsProcess bs = sample_ppp_patch(cfg.lambda0, patch, seed, i);
            const JmTessellation tess(bs, r_c);
            RngStream probes(seed, i, StreamTag::AreaProbes);
            areas[i] = tess.estimate_area(0, n_probe, probes);
        },
        threads);

    AreaCdfEstimate out;
    out.r_c = r_c;
    const auto full = static_cast<double>(std::count(areas.begin(), areas.end(), disk));
    out.full_disk_fraction = full / static_cast<double>(n_real);
    out.cdf = EmpiricalCdf(std::move(areas));
    out.grid.resize(grid_points);
    out.values.resize(grid_points);
    for (std::size_t k = 0; k < grid_points; ++k) {
        out.grid[k] = disk * static_cast<double>(k) / static_cast<double>(grid_points - 1);
        out.values[k] = out.cdf(out.grid[k]);
    }
    return out;
}

std::vector<PcfBin> estimate_pcf(const NetworkConfig& cfg, std::size_t n_real,
                                 std::uint64_t seed, const McOptions& opts,
                                 double bin_width_norm, std::size_t n_bins)
{
    cfg.validate();
    if (n_real == 0 || n_bins == 0 || !(bin_width_norm > 0)) {
        throw InvalidArgument("estimate_pcf needs n_real, n_bins and bin width positive");
    }
    const SimulationWindow window = opts.window_for(cfg.lambda0);
    window.check_for(cfg.lambda0);
    const double dr = bin_width_norm / std::sqrt(cfg.lambda0);
    std::vector<std::uint32_t> counts(n_real * n_bins, 0);
    parallel_for(
        n_real,
        [&](std::size_t i) {
            const NetworkRealization real
                = realize(cfg, window, seed, i, opts.layout, 1, 0);
            for (const Point2& p : real.interferers) {
                const auto bin = static_cast<std::size_t>(distance(p, Point2{}) / dr);
                if (bin < n_bins) {
                    ++counts[i * n_bins + bin];
                }
            }
        },
        opts.threads);

    std::vector<PcfBin> out(n_bins);
    std::vector<double> per_real(n_real);
    for (std::size_t b = 0; b < n_bins; ++b) {
        PcfBin& bin = out[b];
        bin.r_lo = dr * static_cast<double>(b);
        bin.r_hi = dr * static_cast<double>(b + 1);
        const double expected = cfg.lambda0 * pi * (bin.r_hi * bin.r_hi - bin.r_lo * bin.r_lo);
        for (std::size_t i = 0; i < n_real; ++i) {
            per_real[i] = counts[i * n_bins + b] / expected;
        }
        bin.g = mean_of(per_real);
        bin.stderr_g = stderr_of(per_real, bin.g);
    }
    return out;
}

GoodnessOfFit goodness_of_fit(const std::function<double(double)>& empirical_cdf,
                              const std::function<double(double)>& model_cdf, double upper,
                              std::size_t grid_points, std::size_t n_bins)
{
    if (grid_points < 2 || n_bins < 1 || !(upper > 0)) {
        throw InvalidArgument("goodness_of_fit needs grid_points >= 2, n_bins >= 1, upper > 0");
    }
    GoodnessOfFit out;
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double x = upper * static_cast<double>(k) / static_cast<double>(grid_points - 1);
        out.ksd = std::max(out.ksd, std::abs(empirical_cdf(x) - model_cdf(x)));
    }

    constexpr double floor = 1e-12;
    double f_emp_prev = 0;
    double f_mod_prev = 0;
    for (std::size_t b = 0; b < n_bins; ++b) {
        const bool last = b + 1 == n_bins;
        const double hi = upper * static_cast<double>(b + 1) / static_cast<double>(n_bins);
        // The last bin closes at the upper end and so carries any atom there.
        const double f_emp = last ? 1.0 : empirical_cdf(hi);
        const double f_mod = last ? 1.0 : model_cdf(hi);
        const double p = std::max(f_emp - f_emp_prev, floor);
        const double q = std::max(f_mod - f_mod_prev, floor);
        out.kld += p * std::log(p / q);
        f_emp_prev = f_emp;
        f_mod_prev = f_mod;
    }
    out.kld = std::max(out.kld, 0.0);
    return out;
}

GoodnessOfFit goodness_of_fit(const EmpiricalCdf& empirical, const BetaMixtureAreaModel& model,
                              std::size_t grid_points, std::size_t n_bins,
                              const numerics::QuadratureSpec& spec)
{
    return goodness_of_fit([&](double x) { return empirical(x); },
                           [&](double x) { return area_cdf(model, x, spec); },
                           model.trunc_support.hi, grid_points, n_bins);
}

void write_samples_csv(std::ostream& os, std::span<const SampleRecord> samples)
{
    const auto old_precision = os.precision(17);
    os << "# schema_version=1\n"
       << "seed_index,sir_linear,serving_distance_m,load,origin_area_m2\n";
    for (const SampleRecord& r : samples) {
        os << r.index << ',' << r.sample.sir << ',' << r.sample.serving_distance << ','
           << r.sample.load << ',' << r.origin_area << '\n';
    }
    os.precision(old_precision);
}

}  // namespace jmcell
