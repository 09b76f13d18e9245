//------------------------------------------------------------------------------
// Copyright 2026 The jmcell Authors
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#include "jmcell/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "jmcell/error.hpp"

namespace jmcell::numerics {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// 21-point Kronrod abscissae (descending, last is the centre) and weights,
// with the embedded 10-point Gauss weights for xgk[1], xgk[3], ...
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077734838718970, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(double v)
{
    if (!std::isfinite(v)) {
        throw NonConvergence("integrand returned a non-finite value");
    }
    return v;
}

Segment gauss_kronrod_21(const Function1& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = checked(f(centre));

    double resk = fc * wgk[10];
    double resg = 0;
    double resabs = std::abs(resk);
    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};

    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * xgk[j];
        const double f1 = checked(f(centre - dx));
        const double f2 = checked(f(centre + dx));
        fv1[j] = f1;
        fv2[j] = f2;
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            resg += wg[j / 2] * (f1 + f2);
        }
    }

    const double reskh = 0.5 * resk;
    double resasc = wgk[10] * std::abs(fc - reskh);
    for (std::size_t j = 0; j < 10; ++j) {
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    }

    const double scale = std::abs(half);
    resk *= half;
    resabs *= scale;
    resasc *= scale;
    double err = std::abs((resk - resg * half));
    if (resasc != 0 && err != 0) {
        err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    }
    if (resabs > kTiny / (50 * kEps)) {
        err = std::max(50 * kEps * resabs, err);
    }
    return {a, b, resk, err};
}

}  // namespace

void QuadratureSpec::validate() const
{
    if (!(rel_tol > 0) || !(abs_tol > 0) || max_subdivisions < 1) {
        throw InvalidArgument("QuadratureSpec requires rel_tol > 0, abs_tol > 0, "
                              "max_subdivisions >= 1");
    }
}

void RootFindSpec::validate() const
{
    if (!(tol > 0) || max_iter < 1 || !(bracket_expansion > 1)) {
        throw InvalidArgument("RootFindSpec requires tol > 0, max_iter >= 1, "
                              "bracket_expansion > 1");
    }
}

QuadratureResult integrate_1d_detailed(const Function1& f, double a, double b,
                                       const QuadratureSpec& spec)
{
    spec.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw InvalidArgument("integrate_1d needs finite bounds with a <= b");
    }
    if (a == b) {
        return {};
    }

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod_21(f, a, b);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);

    int subdivisions = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (subdivisions >= spec.max_subdivisions) {
            std::ostringstream os;
            os << "subdivision budget " << spec.max_subdivisions << " exhausted on [" << a
               << ", " << b << "], estimate " << total << " +- " << total_err;
            throw NonConvergence(os.str());
        }
        Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        const double width = worst.b - worst.a;
        if (mid <= worst.a || mid >= worst.b
            || width <= 4 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            std::ostringstream os;
            os << "cannot refine interval near " << mid << " (estimate " << total << " +- "
               << total_err << ")";
            throw NonConvergence(os.str());
        }
        heap.pop();
        Segment left = gauss_kronrod_21(f, worst.a, mid);
        Segment right = gauss_kronrod_21(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }

    // Re-sum to shed accumulated cancellation from incremental updates.
    double sum = 0;
    double err = 0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {sum, err, subdivisions};
}

double integrate_1d(const Function1& f, double a, double b, const QuadratureSpec& spec)
{
    return integrate_1d_detailed(f, a, b, spec).value;
}

double integrate_semi_infinite(const Function1& f, double a, const QuadratureSpec& spec)
{
    if (!std::isfinite(a)) {
        throw InvalidArgument("integrate_semi_infinite needs a finite lower bound");
    }
    auto mapped = [&f, a](double u) {
        const double w = 1 - u;
        return f(a + u / w) / (w * w);
    };
    return integrate_1d(mapped, 0.0, 1.0, spec);
}

double integrate_3d(const Function3& f, const std::array<Interval, 3>& bounds,
                    const QuadratureSpec& spec)
{
    spec.validate();
    QuadratureSpec inner = spec;
    inner.rel_tol = spec.rel_tol * 0.1;
    inner.abs_tol = spec.abs_tol * 0.1;

    auto over_x = [&](double x) {
        auto over_y = [&](double y) {
            auto over_z = [&](double z) { return f(x, y, z); };
            return integrate_1d(over_z, bounds[2].lo, bounds[2].hi, inner);
        };
        return integrate_1d(over_y, bounds[1].lo, bounds[1].hi, inner);
    };
    return integrate_1d(over_x, bounds[0].lo, bounds[0].hi, spec);
}

//---------------------------------------------------------------------------//
// 2-D root finding
//---------------------------------------------------------------------------//
namespace {

double inf_norm(const Pair& v)
{
    return std::max(std::abs(v[0]), std::abs(v[1]));
}

bool finite(const Pair& v)
{
    return std::isfinite(v[0]) && std::isfinite(v[1]);
}

// Evaluation failures inside F count as "no improvement" rather than aborting
// the search.
bool try_eval(const Function2to2& F, const Pair& x, Pair& out)
{
    try {
        out = F(x);
    } catch (const Error&) {
        return false;
    }
    return finite(out);
}

bool newton(const Function2to2& F, Pair& x, Pair& fx, const RootFindSpec& spec)
{
    for (int iter = 0; iter < spec.max_iter; ++iter) {
        if (inf_norm(fx) <= spec.tol) {
            return true;
        }
        std::array<Pair, 2> jac{};
        for (int k = 0; k < 2; ++k) {
            Pair xs = x;
            const double h = 1e-6 * std::max(1.0, std::abs(x[k]));
            xs[k] += h;
            Pair fs{};
            if (!try_eval(F, xs, fs)) {
                return false;
            }
            jac[0][k] = (fs[0] - fx[0]) / h;
            jac[1][k] = (fs[1] - fx[1]) / h;
        }
        const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if (!std::isfinite(det) || det == 0) {
            return false;
        }
        const Pair step = {-(jac[1][1] * fx[0] - jac[0][1] * fx[1]) / det,
                           -(-jac[1][0] * fx[0] + jac[0][0] * fx[1]) / det};

        double t = 1;
        bool accepted = false;
        const double base = std::hypot(fx[0], fx[1]);
        while (t >= 1.0 / 1024) {
            const Pair trial = {x[0] + t * step[0], x[1] + t * step[1]};
            Pair ft{};
            if (try_eval(F, trial, ft) && std::hypot(ft[0], ft[1]) < (1 - 1e-4 * t) * base) {
                x = trial;
                fx = ft;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            return inf_norm(fx) <= spec.tol;
        }
    }
    return inf_norm(fx) <= spec.tol;
}

// Solve component `k` of F for coordinate `k`, all else fixed.
bool bisect_coordinate(const Function2to2& F, Pair& x, int k, const RootFindSpec& spec)
{
    auto g = [&](double v, double& out) {
        Pair p = x;
        p[k] = v;
        Pair fv{};
        if (!try_eval(F, p, fv)) {
            return false;
        }
        out = fv[k];
        return true;
    };

    double g0 = 0;
    if (!g(x[k], g0)) {
        return false;
    }
    if (std::abs(g0) <= spec.tol) {
        return true;
    }
    double step = 0.1 * std::max(1.0, std::abs(x[k]));
    double lo = x[k];
    double glo = g0;
    double hi = x[k];
    double ghi = g0;
    bool bracketed = false;
    for (int i = 0; i < spec.max_iter && !bracketed; ++i) {
        for (double dir : {1.0, -1.0}) {
            double gv = 0;
            const double v = x[k] + dir * step;
            if (g(v, gv) && (gv > 0) != (g0 > 0)) {
                lo = x[k];
                glo = g0;
                hi = v;
                ghi = gv;
                bracketed = true;
                break;
            }
        }
        step *= spec.bracket_expansion;
    }
    if (!bracketed) {
        return false;
    }
    for (int i = 0; i < spec.max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        double gm = 0;
        if (!g(mid, gm)) {
            return false;
        }
        if (std::abs(gm) <= 0.1 * spec.tol || mid == lo || mid == hi) {
            x[k] = mid;
            return true;
        }
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    x[k] = 0.5 * (lo + hi);
    (void)ghi;
    return true;
}

}  // namespace

Pair solve_2d(const Function2to2& F, const Pair& initial_guess, const RootFindSpec& spec)
{
    spec.validate();
    if (!finite(initial_guess)) {
        throw InvalidArgument("solve_2d initial guess must be finite");
    }
    Pair x = initial_guess;
    Pair fx{};
    if (!try_eval(F, x, fx)) {
        throw NoRoot("system is not finite at the initial guess");
    }
    if (newton(F, x, fx, spec)) {
        return x;
    }

    Pair y = initial_guess;
    for (int sweep = 0; sweep < spec.max_iter; ++sweep) {
        for (int k = 0; k < 2; ++k) {
            if (!bisect_coordinate(F, y, k, spec)) {
                throw NoRoot("Newton stalled and coordinate bisection found no bracket");
            }
        }
        Pair fy{};
        if (try_eval(F, y, fy) && inf_norm(fy) <= spec.tol) {
            return y;
        }
    }
    throw NoRoot("both Newton and coordinate bisection exhausted max_iter");
}

//---------------------------------------------------------------------------//
// Monotone cubic interpolation
//---------------------------------------------------------------------------//
namespace {

double pchip_end_slope(double h0, double h1, double d0, double d1)
{
    double m = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if ((m > 0) != (d0 > 0) || d0 == 0) {
        m = 0;
    } else if ((d0 > 0) != (d1 > 0) && std::abs(m) > std::abs(3 * d0)) {
        m = 3 * d0;
    }
    return m;
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw InvalidArgument("MonotoneCubic needs at least two (x, y) pairs");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw InvalidArgument("MonotoneCubic abscissae must be strictly increasing");
        }
    }

    std::vector<double> h(n - 1);
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        d[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    slope_.assign(n, 0.0);
    if (n == 2) {
        slope_[0] = slope_[1] = d[0];
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (d[i - 1] * d[i] <= 0) {
            slope_[i] = 0;
        } else {
            const double w1 = 2 * h[i] + h[i - 1];
            const double w2 = h[i] + 2 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    slope_[0] = pchip_end_slope(h[0], h[1], d[0], d[1]);
    slope_[n - 1] = pchip_end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
}

double MonotoneCubic::operator()(double x) const
{
    if (x_.empty() || x < x_.front() || x > x_.back()) {
        throw DomainError("MonotoneCubic evaluated outside its table");
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(std::distance(x_.begin(), it));
    i = std::clamp<std::size_t>(i, 1, x_.size() - 1) - 1;

    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * slope_[i]
           + (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * slope_[i + 1];
}

}  // namespace jmcell::numerics
