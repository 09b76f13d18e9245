//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/point_process.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jmcell/error.hpp"

namespace jmcell {
namespace {

constexpr std::size_t kRejectionBudget = 1'000'000;

std::uint64_t pack_tile(std::int64_t i, std::int64_t j)
{
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32)
           | static_cast<std::uint64_t>(static_cast<std::uint32_t>(j));
}

std::uint64_t pack_point(std::int64_t i, std::int64_t j, std::uint64_t k)
{
    return ((static_cast<std::uint64_t>(i) & 0xFFFFFFu) << 40)
           | ((static_cast<std::uint64_t>(j) & 0xFFFFFFu) << 16) | (k & 0xFFFFu);
}

bool has_station_within(const Point2& bs, const BsProcess& process, double radius_sq)
{
    for (const Point2& b : process.points()) {
        const double d = distance_sq(b, bs);
        if (d > 0 && d <= radius_sq) {
            return true;
        }
    }
    return false;
}

}  // namespace

double distance(const Point2& a, const Point2& b)
{
    return std::sqrt(distance_sq(a, b));
}

bool SimulationWindow::contains(const Point2& p) const
{
    return std::abs(p.x) <= half_width && std::abs(p.y) <= half_width;
}

void SimulationWindow::check_for(double density) const
{
    if (!(density > 0)) {
        throw InvalidArgument("BS density must be positive");
    }
    const double required = 10 / std::sqrt(density);
    // Tolerate rounding when the window was derived from the same rule.
    if (half_width < required * (1 - 1e-12)) {
        std::ostringstream os;
        os << "half_width " << half_width << " m is below 10/sqrt(lambda0) = " << required
           << " m";
        throw WindowTooSmall(os.str());
    }
}

BsProcess::BsProcess(std::vector<Point2> points, std::vector<std::uint64_t> ids,
                     double density)
    : points_(std::move(points)), ids_(std::move(ids)), density_(density)
{
    if (!(density_ > 0)) {
        throw InvalidArgument("BS density must be positive");
    }
    if (points_.empty() || points_.front() != Point2{0, 0}) {
        throw InvalidArgument("BsProcess must hold the typical BS at the origin first");
    }
    if (ids_.size() != points_.size()) {
        throw InvalidArgument("BsProcess ids and points differ in length");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i] == Point2{0, 0}) {
            throw InvalidArgument("only the typical BS may sit at the origin");
        }
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw InvalidArgument("BS coordinates must be finite");
        }
    }
}

BsProcess sample_ppp(double density, const SimulationWindow& window, std::uint64_t seed,
                     std::uint64_t realization)
{
    window.check_for(density);
    return sample_ppp_patch(density, window.half_width, seed, realization);
}

BsProcess sample_ppp_patch(double density, double half_width, std::uint64_t seed,
                           std::uint64_t realization)
{
    if (!(density > 0) || !(half_width > 0)) {
        throw InvalidArgument("density and half_width must be positive");
    }
    const SimulationWindow window{half_width};
    const double side = 1 / std::sqrt(density);
    const double h = window.half_width;
    const auto lo = static_cast<std::int64_t>(std::floor(-h / side));
    const auto hi = static_cast<std::int64_t>(std::ceil(h / side));

    std::vector<Point2> points{{0, 0}};
    std::vector<std::uint64_t> ids{BsProcess::kOriginId};
    const auto expected = static_cast<std::size_t>(window.area() * density * 1.1) + 16;
    points.reserve(expected);
    ids.reserve(expected);

    for (std::int64_t i = lo; i < hi; ++i) {
        for (std::int64_t j = lo; j < hi; ++j) {
            RngStream rng(seed, realization, StreamTag::BsTiles, pack_tile(i, j));
            // Each tile has unit expected count.
            const std::uint64_t n = rng.poisson(1.0);
            for (std::uint64_t k = 0; k < n; ++k) {
                const double u = rng.uniform();
                const double v = rng.uniform();
                const Point2 p{(static_cast<double>(i) + u) * side,
                               (static_cast<double>(j) + v) * side};
                if (window.contains(p) && p != Point2{0, 0}) {
                    points.push_back(p);
                    ids.push_back(pack_point(i, j, k));
                }
            }
        }
    }
    return BsProcess(std::move(points), std::move(ids), density);
}

bool is_in_jm_cell(const Point2& p, const Point2& bs, const BsProcess& process, double r_c)
{
    const double d0 = distance_sq(p, bs);
    if (d0 > r_c * r_c) {
        return false;
    }
    for (const Point2& b : process.points()) {
        if (distance_sq(p, b) < d0) {
            return false;
        }
    }
    return true;
}

Point2 uniform_in_disk(const Point2& centre, double r, RngStream& rng)
{
    for (;;) {
        const double u = 2 * rng.uniform() - 1;
        const double v = 2 * rng.uniform() - 1;
        if (u * u + v * v <= 1) {
            return {centre.x + r * u, centre.y + r * v};
        }
    }
}

Point2 sample_uniform_in_jm_cell(const Point2& bs, const BsProcess& process, double r_c,
                                 RngStream& rng)
{
    for (std::size_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
        const Point2 p = uniform_in_disk(bs, r_c, rng);
        if (is_in_jm_cell(p, bs, process, r_c)) {
            return p;
        }
    }
    throw RejectionBudgetExceeded("no accepted JM-cell proposal in 10^6 draws");
}

double estimate_cell_area(const Point2& bs, const BsProcess& process, double r_c,
                          std::size_t n_probe, RngStream& rng)
{
    if (n_probe == 0) {
        throw InvalidArgument("n_probe must be at least 1");
    }
    const double disk = std::numbers::pi * r_c * r_c;
    // No station within 2 r_c: the whole disk belongs to the cell.
    if (!has_station_within(bs, process, 4 * r_c * r_c * (1 + 1e-12))) {
        return disk;
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_probe; ++i) {
        if (is_in_jm_cell(uniform_in_disk(bs, r_c, rng), bs, process, r_c)) {
            ++hits;
        }
    }
    return disk * static_cast<double>(hits) / static_cast<double>(n_probe);
}

//---------------------------------------------------------------------------//
// JmTessellation
//---------------------------------------------------------------------------//
JmTessellation::JmTessellation(const BsProcess& process, double r_c)
    : process_(&process), r_c_(r_c)
{
    if (!(r_c > 0)) {
        throw InvalidArgument("r_c must be positive");
    }
    const auto pts = process.points();
    double lo = 0;
    double hi = 0;
    for (const Point2& p : pts) {
        lo = std::min({lo, p.x, p.y});
        hi = std::max({hi, p.x, p.y});
    }
    cell_size_ = std::max(2 * r_c, 0.5 / std::sqrt(process.density()));
    const double extent = hi - lo;
    cells_per_side_ = static_cast<int>(std::min(4096.0, std::floor(extent / cell_size_) + 1));
    cell_size_ = std::max(cell_size_, extent / cells_per_side_ * (1 + 1e-12));
    origin_ = lo;

    const auto n_cells = static_cast<std::size_t>(cells_per_side_) * cells_per_side_;
    std::vector<std::uint32_t> cell_of(pts.size());
    cell_start_.assign(n_cells + 1, 0);
    auto index_of = [&](double v) {
        return std::clamp(static_cast<int>((v - origin_) / cell_size_), 0, cells_per_side_ - 1);
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto c = static_cast<std::uint32_t>(index_of(pts[i].x) * cells_per_side_
                                                  + index_of(pts[i].y));
        cell_of[i] = c;
        ++cell_start_[c + 1];
    }
    for (std::size_t c = 0; c < n_cells; ++c) {
        cell_start_[c + 1] += cell_start_[c];
    }
    cell_items_.resize(pts.size());
    std::vector<std::uint32_t> fill(cell_start_.begin(), cell_start_.end() - 1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        cell_items_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
    }
}

std::vector<Point2> JmTessellation::candidates(std::size_t bs_index) const
{
    const auto pts = process_->points();
    const Point2 bs = pts[bs_index];
    const double reach = 2 * r_c_;
    const double reach_sq = reach * reach * (1 + 1e-12);
    auto cell = [&](double v) {
        return std::clamp(static_cast<int>(std::floor((v - origin_) / cell_size_)), 0,
                          cells_per_side_ - 1);
    };
    const int ix0 = cell(bs.x - reach);
    const int ix1 = cell(bs.x + reach);
    const int iy0 = cell(bs.y - reach);
    const int iy1 = cell(bs.y + reach);

    std::vector<Point2> out;
    for (int ix = ix0; ix <= ix1; ++ix) {
        for (int iy = iy0; iy <= iy1; ++iy) {
            const auto c = static_cast<std::size_t>(ix) * cells_per_side_ + iy;
            for (std::uint32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
                const std::uint32_t j = cell_items_[k];
                if (j == bs_index) {
                    continue;
                }
                if (distance_sq(pts[j], bs) <= reach_sq) {
                    out.push_back(pts[j]);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const Point2& a, const Point2& b) {
        return distance_sq(a, bs) < distance_sq(b, bs);
    });
    return out;
}

bool JmTessellation::contains_with(const Point2& bs, std::span<const Point2> cands,
                                   const Point2& p) const
{
    const double d0 = distance_sq(p, bs);
    if (d0 > r_c_ * r_c_) {
        return false;
    }
    if (cands.empty() || 4 * d0 <= distance_sq(cands.front(), bs)) {
        return true;  // inside the inscribed disk of the nearest neighbour
    }
    for (const Point2& b : cands) {
        if (distance_sq(p, b) < d0) {
            return false;
        }
    }
    return true;
}

bool JmTessellation::contains(std::size_t bs_index, const Point2& p) const
{
    const auto cands = candidates(bs_index);
    return contains_with(process_->points()[bs_index], cands, p);
}

Point2 JmTessellation::sample_uniform(std::size_t bs_index, RngStream& rng) const
{
    const Point2 bs = process_->points()[bs_index];
    const auto cands = candidates(bs_index);
    for (std::size_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
        const Point2 p = uniform_in_disk(bs, r_c_, rng);
        if (contains_with(bs, cands, p)) {
            return p;
        }
    }
    throw RejectionBudgetExceeded("no accepted JM-cell proposal in 10^6 draws");
}

double JmTessellation::estimate_area(std::size_t bs_index, std::size_t n_probe,
                                     RngStream& rng) const
{
    if (n_probe == 0) {
        throw InvalidArgument("n_probe must be at least 1");
    }
    const double disk = std::numbers::pi * r_c_ * r_c_;
    const Point2 bs = process_->points()[bs_index];
    const auto cands = candidates(bs_index);
    if (cands.empty()) {
        return disk;
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_probe; ++i) {
        if (contains_with(bs, cands, uniform_in_disk(bs, r_c_, rng))) {
            ++hits;
        }
    }
    return disk * static_cast<double>(hits) / static_cast<double>(n_probe);
}

}  // namespace jmcell
