//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/monte_carlo.hpp
//! Network simulator used as ground truth for the analytical modules.
//!
//! Realization i of a run with seed s draws every random quantity from streams
//! keyed by (s, i, purpose, station id), so results are bit-identical for any
//! thread count, and runs that differ only in window size, density or user
//! layout stay coupled.
//------------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "jmcell/area_model.hpp"
#include "jmcell/point_process.hpp"
#include "jmcell/uplink.hpp"

namespace jmcell {

//! Where each BS's active user is dropped.
enum class UserLayout {
    JmCell,  // uniform in the JM cell
    Disk,    // uniform in the full disk of radius r_c (Matern cluster baseline)
};

struct McOptions {
    double window_halfwidth_factor = 10;  // half_width = factor / sqrt(lambda0)
    std::size_t n_probe = 4096;           // probes for the origin-cell area
    UserLayout layout = UserLayout::JmCell;
    std::size_t threads = 0;              // 0: worker_count()

    SimulationWindow window_for(double lambda0) const;
};

struct NetworkRealization {
    BsProcess bs_process;
    Point2 typical_user;
    std::vector<Point2> interferers;        // bs_process.points()[k + 1] -> interferers[k]
    double serving_fading = 1;              // Exp(1)
    std::vector<double> interferer_fading;  // Exp(1), parallel to interferers
    double origin_cell_area_estimate = 0;   // m^2
    std::uint64_t origin_load = 1;          // N_C0 >= 1
};

struct SirSample {
    double sir = 0;               // linear
    double serving_distance = 0;  // m
    std::uint64_t load = 1;
};

//! One row of a raw sample dump.
struct SampleRecord {
    std::uint64_t index = 0;
    std::uint32_t attempts = 1;  // > 1 when zero-interferer draws were resampled
    SirSample sample;
    double origin_area = 0;  // m^2
};

struct EmpiricalCoveragePoint {
    double threshold = 0;  // linear SIR
    double p_c = 0;
    double stderr_pc = 0;
};

struct EmpiricalCoverage {
    std::vector<EmpiricalCoveragePoint> points;
    std::size_t n = 0;
    std::size_t resampled = 0;
};

struct SeEstimate {
    double mean = 0;  // bits/s/Hz times B
    double stderr_mean = 0;
    std::size_t n = 0;
};

struct PcfBin {
    double r_lo = 0;  // m
    double r_hi = 0;  // m
    double g = 0;
    double stderr_g = 0;

    double r_norm_center(double lambda0) const;
};

struct GoodnessOfFit {
    double ksd = 0;
    double kld = 0;  // nats
};

//! Empirical distribution function of a sample.
class EmpiricalCdf {
public:
    EmpiricalCdf() = default;
    explicit EmpiricalCdf(std::vector<double> samples);

    //! Fraction of samples <= x.
    double operator()(double x) const;
    std::span<const double> sorted() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }
    double mean() const;
    double moment(int k) const;

private:
    std::vector<double> sorted_;
};

struct AreaCdfEstimate {
    double r_c = 0;
    EmpiricalCdf cdf;
    std::vector<double> grid;    // x in m^2 on [0, pi r_c^2]
    std::vector<double> values;  // cdf at grid
    //! Fraction of realizations whose probes all fell inside the cell.
    double full_disk_fraction = 0;
};

//! One network realization; attempt > 0 redraws the BS process from a
//! derived seed (used when a draw had no interferers).
NetworkRealization realize(const NetworkConfig& cfg, const SimulationWindow& window,
                           std::uint64_t seed, std::uint64_t index = 0,
                           UserLayout layout = UserLayout::JmCell, std::size_t n_probe = 4096,
                           std::uint32_t attempt = 0);

//! Sum of h_0j d_0j^-alpha over the interferers.
double aggregate_interference(const NetworkRealization& real, const NetworkConfig& cfg);

//! Throws NoInterferers when the realization has no interferer.
SirSample sir_sample(const NetworkRealization& real, const NetworkConfig& cfg);

//! n_real realizations in index order, each resampled up to 64 times when it
//! has no interferer.
std::vector<SampleRecord> simulate_samples(const NetworkConfig& cfg, std::size_t n_real,
                                           std::uint64_t seed, const McOptions& opts = {});

EmpiricalCoverage coverage_from_samples(std::span<const SampleRecord> samples,
                                        std::span<const double> thresholds);
SeEstimate se_from_samples(std::span<const SampleRecord> samples, double bandwidth);

EmpiricalCoverage estimate_coverage(const NetworkConfig& cfg, std::span<const double> thresholds,
                                    std::size_t n_real, std::uint64_t seed,
                                    const McOptions& opts = {});

//! Same pipeline with users uniform in the full disk.
EmpiricalCoverage estimate_coverage_mcp(const NetworkConfig& cfg,
                                        std::span<const double> thresholds, std::size_t n_real,
                                        std::uint64_t seed, McOptions opts = {});

//! Mean of (B / N_C0) log2(1 + SIR).
SeEstimate estimate_se(const NetworkConfig& cfg, std::size_t n_real, std::uint64_t seed,
                       const McOptions& opts = {});

//! Hit-ratio areas of the origin cell; only stations within 2 r_c matter, so
//! a patch of the process around the origin is sampled.
AreaCdfEstimate estimate_area_cdf(const NetworkConfig& cfg, std::size_t n_real,
                                  std::size_t n_probe, std::uint64_t seed,
                                  std::size_t grid_points = 2000, std::size_t threads = 0);

//! Binned interferer pair correlation around the origin BS; bin width
//! bin_width_norm / sqrt(lambda0).
std::vector<PcfBin> estimate_pcf(const NetworkConfig& cfg, std::size_t n_real,
                                 std::uint64_t seed, const McOptions& opts = {},
                                 double bin_width_norm = 0.05, std::size_t n_bins = 60);

//! KSD on a grid_points grid over [0, pi r_c^2]; KLD over n_bins equal bins
//! with the atom in the last bin and both masses floored at 1e-12.
GoodnessOfFit goodness_of_fit(const EmpiricalCdf& empirical, const BetaMixtureAreaModel& model,
                              std::size_t grid_points = 2000, std::size_t n_bins = 200,
                              const numerics::QuadratureSpec& spec = {});

//! Same statistics between two CDFs on [0, upper].
GoodnessOfFit goodness_of_fit(const std::function<double(double)>& empirical_cdf,
                              const std::function<double(double)>& model_cdf, double upper,
                              std::size_t grid_points = 2000, std::size_t n_bins = 200);

//! CSV dump, one row per realization, preceded by a schema comment line.
void write_samples_csv(std::ostream& os, std::span<const SampleRecord> samples);

}  // namespace jmcell
