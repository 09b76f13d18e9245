//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/point_process.hpp
//! Poisson base-station processes and Johnson-Mehl cell geometry.
//!
//! A JM cell is the part of a base station's Voronoi cell that lies within
//! distance r_c of the station. Cells are never built as polygons; everything
//! here works from point membership tests.
//------------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jmcell/rng.hpp"

namespace jmcell {

struct Point2 {
    double x = 0;  // m
    double y = 0;  // m

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance_sq(const Point2& a, const Point2& b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double distance(const Point2& a, const Point2& b);

//! Origin-centred square [-half_width, half_width]^2.
struct SimulationWindow {
    double half_width = 0;  // m

    double area() const { return 4 * half_width * half_width; }
    bool contains(const Point2& p) const;
    //! Throws WindowTooSmall if half_width < 10 / sqrt(density).
    void check_for(double density) const;
};

//! Immutable BS point set. Index 0 is the typical BS at the exact origin.
class BsProcess {
public:
    static constexpr std::uint64_t kOriginId = ~std::uint64_t{0};

    BsProcess(std::vector<Point2> points, std::vector<std::uint64_t> ids, double density);

    std::span<const Point2> points() const { return points_; }
    //! Stable per-station identifiers, used to key per-station random streams.
    std::span<const std::uint64_t> ids() const { return ids_; }
    double density() const { return density_; }
    std::size_t size() const { return points_.size(); }
    static constexpr std::size_t origin_index() { return 0; }

private:
    std::vector<Point2> points_;
    std::vector<std::uint64_t> ids_;
    double density_;
};

// Homogeneous PPP in the window plus the Slivnyak point at the origin.
//
// The plane is tiled with squares of side 1/sqrt(density) anchored at the
// origin; every tile draws its own Poisson count and positions from a stream
// keyed by the tile coordinates, and points outside the window are dropped.
// Nested windows therefore share the points of their common tiles, and
// realizations at different densities are exact rescalings of each other.
BsProcess sample_ppp(double density, const SimulationWindow& window, std::uint64_t seed,
                     std::uint64_t realization = 0);

//! The same tiled process as sample_ppp restricted to [-h, h]^2, without the
//! window-size rule. Meant for statistics that only see a neighbourhood of the
//! origin, such as the origin cell area.
BsProcess sample_ppp_patch(double density, double half_width, std::uint64_t seed,
                           std::uint64_t realization = 0);

// Brute-force JM cell membership: |p - bs| <= r_c and no station of the
// process is strictly closer to p than bs is.
bool is_in_jm_cell(const Point2& p, const Point2& bs, const BsProcess& process, double r_c);

//! Rejection sampling from the disk of radius r_c around bs.
//! Throws RejectionBudgetExceeded after 10^6 rejected proposals.
Point2 sample_uniform_in_jm_cell(const Point2& bs, const BsProcess& process, double r_c,
                                 RngStream& rng);

//! Hit-ratio estimate pi r_c^2 * accepted / n_probe with probes uniform in the disk.
double estimate_cell_area(const Point2& bs, const BsProcess& process, double r_c,
                          std::size_t n_probe, RngStream& rng);

//! Uniform point in the disk of radius r around centre.
Point2 uniform_in_disk(const Point2& centre, double r, RngStream& rng);

// Indexed view of all JM cells of one process for a fixed r_c. Only stations
// within 2 r_c of a seed can cut its JM cell, so each query works on that
// candidate list, found through a uniform grid. Results are identical to the
// brute-force free functions given the same random stream.
class JmTessellation {
public:
    JmTessellation(const BsProcess& process, double r_c);

    double r_c() const { return r_c_; }
    const BsProcess& process() const { return *process_; }

    bool contains(std::size_t bs_index, const Point2& p) const;
    Point2 sample_uniform(std::size_t bs_index, RngStream& rng) const;
    double estimate_area(std::size_t bs_index, std::size_t n_probe, RngStream& rng) const;
    //! Stations (other than bs_index itself) within 2 r_c of bs_index.
    std::vector<Point2> candidates(std::size_t bs_index) const;

private:
    bool contains_with(const Point2& bs, std::span<const Point2> cands, const Point2& p) const;

    const BsProcess* process_;
    double r_c_;
    double cell_size_;
    double origin_;  // lower-left corner of the grid, both axes
    int cells_per_side_;
    std::vector<std::uint32_t> cell_start_;
    std::vector<std::uint32_t> cell_items_;
};

}  // namespace jmcell
