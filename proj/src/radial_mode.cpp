#include <cmath>
#include <string>

#include "eulerwaves/errors.hpp"
#include "eulerwaves/ode.hpp"
#include "eulerwaves/special_functions.hpp"

namespace eulerwaves {

namespace {

// sinh^2(r/2) must stay below this for the series to converge quickly.
constexpr double kMaxSeriesArg = 0.9;
constexpr double kShootStart = 1e-4;

double shoot(int order, double beta, double r_max) {
    const double nu = order;
    const double kappa = 0.25 + beta * beta;
    const double c2 = -(kappa + nu * (nu + 1.0) / 3.0) / (4.0 * (nu + 1.0));
    const double r0 = kShootStart;
    // State scaled by r0^-nu so the Frobenius start is O(1).
    DormandPrince<2>::State y0{1.0 + c2 * r0 * r0, nu / r0 + (nu + 2.0) * c2 * r0};
    auto rhs = [nu, kappa](double r, const DormandPrince<2>::State& y) {
        const double sh = std::sinh(r);
        return DormandPrince<2>::State{y[1], -std::cosh(r) / sh * y[1] - (kappa - nu * nu / (sh * sh)) * y[0]};
    };
    OdeOptions opts;
    opts.rtol = 1e-12;
    opts.atol = 1e-15;
    DormandPrince<2> ode(rhs, opts);
    const auto y = ode.solve_to(r0, y0, r_max);
    // Undo the r0 scaling relative to the expected r^nu growth.
    return y[0] * std::pow(r0 / r_max, nu);
}

double series_at_boundary(int order, double beta, double r_max) {
    return hyperbolic_radial_series(order, beta, r_max).r;
}

template <class F>
double bisect_root(const F& f, double a, double b, double tol) {
    double fa = f(a);
    for (int i = 0; i < 200 && b - a > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

RadialProfileValue hyperbolic_radial_series(int n, double beta, double r) {
    const int nu = std::abs(n);
    if (!(r >= 0.0)) throw DomainError("hyperbolic_radial_series: r must be non-negative");
    const double sh = std::sinh(0.5 * r);
    const double x = -sh * sh;
    if (-x > kMaxSeriesArg) throw RangeError("hyperbolic_radial_series: r beyond the series convergence radius");
    // S = sum_k t_k x^k with t_{k+1}/t_k = ((k+1/2)^2 + beta^2) / ((nu+1+k)(k+1)).
    double tk = 1.0, xp = 1.0, s = 1.0, ds = 0.0;
    for (int k = 0; k < 5000; ++k) {
        const double kk = k + 0.5;
        tk *= (kk * kk + beta * beta) / ((nu + 1.0 + k) * (k + 1.0));
        ds += (k + 1.0) * tk * xp;
        xp *= x;
        const double add = tk * xp;
        s += add;
        if (std::abs(add) < 1e-18 * std::abs(s) && k > 4) break;
    }
    const double t = std::tanh(0.5 * r);
    const double dt = 0.5 * (1.0 - t * t);
    const double dx = -0.5 * std::sinh(r);
    RadialProfileValue v;
    const double tn = std::pow(t, nu);
    v.r = tn * s;
    v.dr = (nu > 0 ? nu * std::pow(t, nu - 1) * dt * s : 0.0) + tn * ds * dx;
    return v;
}

RadialEigenSolution hyperbolic_radial_mode(int n, double r_max, int branch) {
    if (!(r_max > 0.0)) throw ArgumentError("hyperbolic_radial_mode: r_max must be positive");
    if (branch < 1) throw ArgumentError("hyperbolic_radial_mode: branch must be >= 1");
    const double sh = std::sinh(0.5 * r_max);
    if (sh * sh > kMaxSeriesArg) throw RangeError("hyperbolic_radial_mode: r_max beyond the series convergence radius");
    const int order = std::abs(n);

    // Scan beta for sign changes of the shooting functional.
    const double step = 0.05;
    double lo = 1e-3;
    double flo = shoot(order, lo, r_max);
    int found = 0;
    double beta_shoot = 0.0;
    double blo = 0.0, bhi = 0.0;
    for (int i = 0; i < 20000 && found < branch; ++i) {
        const double hi = lo + step;
        const double fhi = shoot(order, hi, r_max);
        if ((flo < 0) != (fhi < 0)) {
            if (++found == branch) {
                blo = lo;
                bhi = hi;
            }
        }
        lo = hi;
        flo = fhi;
    }
    if (found < branch) throw BracketError("hyperbolic_radial_mode: branch not found in the beta scan");
    beta_shoot = bisect_root([&](double b) { return shoot(order, b, r_max); }, blo, bhi, 1e-13);

    // Refine on the series so the profile vanishes at r_max to roundoff.
    double a = beta_shoot - 1e-6, b = beta_shoot + 1e-6;
    auto fs = [&](double beta) { return series_at_boundary(order, beta, r_max); };
    for (int i = 0; i < 40 && (fs(a) < 0) == (fs(b) < 0); ++i) {
        a -= 1e-5 * (i + 1);
        b += 1e-5 * (i + 1);
    }
    if ((fs(a) < 0) == (fs(b) < 0)) throw BracketError("hyperbolic_radial_mode: series root not bracketed");
    const double beta = bisect_root(fs, a, b, 1e-15 * beta_shoot);

    RadialEigenSolution sol;
    sol.n = n;
    sol.branch = branch;
    sol.r_max = r_max;
    sol.beta = beta;
    sol.beta_shooting = beta_shoot;
    sol.eigenvalue = 0.25 + beta * beta;
    sol.profile = [n, beta](double r) { return hyperbolic_radial_series(n, beta, r); };
    double peak = 0.0;
    for (int i = 0; i <= 200; ++i) peak = std::max(peak, std::abs(sol.profile(r_max * i / 200.0).r));
    sol.boundary_residual = std::abs(sol.profile(r_max).r) / peak;
    return sol;
}

}  // namespace eulerwaves
