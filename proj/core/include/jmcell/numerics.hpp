//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
//! \file jmcell/numerics.hpp
//! Adaptive quadrature, a 2-D root finder and monotone interpolation shared by
//! the analytical modules.
//------------------------------------------------------------------------------
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace jmcell::numerics {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;

    //! Throws InvalidArgument if any field violates its invariant.
    void validate() const;
};

struct RootFindSpec {
    double tol = 1e-10;
    int max_iter = 200;
    double bracket_expansion = 2.0;

    void validate() const;
};

struct QuadratureResult {
    double value = 0;
    double error = 0;
    int subdivisions = 0;
};

using Function1 = std::function<double(double)>;
using Function3 = std::function<double(double, double, double)>;
using Pair = std::array<double, 2>;
using Function2to2 = std::function<Pair(const Pair&)>;

struct Interval {
    double lo = 0;
    double hi = 0;
};

// Globally adaptive 21-point Gauss-Kronrod quadrature. The integrand is never
// evaluated at the interval endpoints, so integrable endpoint singularities are
// allowed. Throws NonConvergence when the subdivision budget runs out or
// when the error cannot be reduced below max(abs_tol, rel_tol*|I|).
QuadratureResult integrate_1d_detailed(const Function1& f, double a, double b,
                                       const QuadratureSpec& spec = {});

double integrate_1d(const Function1& f, double a, double b, const QuadratureSpec& spec = {});

// Integral over [a, inf) through r = a + u/(1-u), u in [0, 1).
double integrate_semi_infinite(const Function1& f, double a, const QuadratureSpec& spec = {});

// Iterated adaptive quadrature over a box; each axis is refined independently.
// Inner axes run at a tenth of the requested relative tolerance.
double integrate_3d(const Function3& f, const std::array<Interval, 3>& bounds,
                    const QuadratureSpec& spec = {});

//! Damped Newton iteration with a forward-difference Jacobian, falling back to
//! alternating one-dimensional bisection. Returns x with ||F(x)||_inf <= tol;
//! throws NoRoot otherwise.
Pair solve_2d(const Function2to2& F, const Pair& initial_guess, const RootFindSpec& spec = {});

//! Shape-preserving piecewise cubic Hermite interpolant (Fritsch-Carlson).
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    //! Abscissae must be strictly increasing, at least two points.
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    std::size_t size() const { return x_.size(); }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> slope_;
};

}  // namespace jmcell::numerics
