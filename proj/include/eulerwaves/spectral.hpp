#pragma once

#include <functional>
#include <vector>

#include "eulerwaves/charts.hpp"
#include "eulerwaves/ode.hpp"

namespace eulerwaves {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

using ScalarFn = std::function<double(double)>;

/// Sign-change subintervals of fn sampled at resolution+1 uniform points, in increasing order.
std::vector<Interval> scan_bracket(const ScalarFn& fn, Interval range, int resolution);

/// Bisection inside a sign-change bracket down to width xtol.
double bisect(const ScalarFn& fn, Interval bracket, double xtol);

/// Root of the solid-cylinder curl-eigenfield dispersion relation.
struct DispersionRoot {
    double beta = 0.0;
    double alpha = 0.0;     ///< +sqrt(beta^2 + m^2)
    double residual = 0.0;  ///< scaled functional at the root
    int branch = 1;
};

/// (m beta J_n'(beta) + n alpha J_n(beta)) / (|m| beta + |n| alpha), alpha = sqrt(beta^2 + m^2).
double ck_dispersion(int n, int m, double beta);
DispersionRoot ck_dispersion_root(int n, int m, int branch);

/// Same relation on an annulus a <= r <= b for c = 0, phi = r: determinant of
/// n alpha Z(beta r) + m beta r Z'(beta r) over Z in {J_n, Y_n} at r = a and r = b.
double ck_annulus_dispersion(int n, int m, double a, double b, double beta);
DispersionRoot ck_annulus_dispersion_root(int n, int m, double a, double b, int branch);

struct CrossRoot {
    double k = 0.0;
    double residual = 0.0;
    int branch = 1;
};

/// (pi k sqrt(ab) / 2) (J_nu(ka) Y_nu(kb) - J_nu(kb) Y_nu(ka)).
double bessel_cross_product(double nu, double a, double b, double k);
CrossRoot crossproduct_root(double nu, double a, double b, int branch);

/// Options shared by the twisted warped-metric shooting solver.
struct CMetricOptions {
    double rtol = 1e-12;         ///< ODE tolerance for the final solve
    double scan_rtol = 1e-8;     ///< ODE tolerance while scanning alpha
    double bc_tol = 1e-10;       ///< terminal boundary functional tolerance
    double initial_scale = 1.0;  ///< multiplies the unit start data
    int nodes = 1024;            ///< interpolation nodes across [a, b]
    Interval alpha_range{0.1, 30.0};
    int resolution = 400;
    double alpha_exclude = 1e-3;
};

/// Profile samples of a solved mode: value, first and second r-derivative.
struct CMetricSample {
    std::array<double, 3> f{};
    std::array<double, 3> g{};
    std::array<double, 3> h{};
};

struct CMetricMode {
    WarpedProfile profile;
    int n = 0;
    int m = 0;
    double alpha = 0.0;
    double boundary_residual = 0.0;  ///< normalized r = b functional at the root
    QuinticHermite g;
    QuinticHermite h;

    /// m - c n / phi^2
    double twist(double r) const;
    /// f = (n h - (m - c n/phi^2) g) / (alpha phi phi'), with derivatives by differentiating the interpolants.
    CMetricSample sample(double r) const;
};

/// Normalized r = b boundary functional for a trial alpha.
double cmetric_shooting_functional(const WarpedProfile& profile, int n, int m, double alpha,
                                   const CMetricOptions& opts = {});

/// Right-hand-side matrix A(r) of (g, h)' = A (g, h).
std::array<std::array<double, 2>, 2> cmetric_system(const WarpedProfile& profile, int n, int m, double alpha,
                                                      double r);

/// Throws ProfileError unless phi > 0 and phi' > 0 on [a, b].
void check_profile(const WarpedProfile& profile);

/// All alpha roots found by the scan (both signs), sorted by |alpha|, negative first on ties.
std::vector<double> scan_cmetric_alphas(const WarpedProfile& profile, int n, int m, const CMetricOptions& opts = {});
std::vector<Interval> scan_cmetric_brackets(const WarpedProfile& profile, int n, int m,
                                            const CMetricOptions& opts = {});

CMetricMode solve_cmetric_mode(const WarpedProfile& profile, int n, int m, Interval alpha_bracket,
                               const CMetricOptions& opts = {});

/// n = 0 twisted mode in closed form: nu^2 = 2 alpha c + 1, k^2 = alpha^2 - m^2 and
/// g = C r (Y_nu(ka) J_nu(kr) - J_nu(ka) Y_nu(kr)).
struct TwistedClosedForm {
    double alpha = 0.0;
    double nu = 0.0;
    double k = 0.0;
    double scale = 1.0;
    double c = 0.0;
    double a = 0.0;
    int m = 0;
    double ja = 0.0;  ///< J_nu(k a)
    double ya = 0.0;  ///< Y_nu(k a)

    /// Values of (f, g, h) only, from one Bessel evaluation.
    std::array<double, 3> fgh(double r) const;
    /// (value, r-derivative, second r-derivative)
    std::array<double, 3> g(double r) const;
    std::array<double, 3> h(double r) const;
    std::array<double, 3> f(double r) const;
};

/// Frequency condition for the n = 0 closed form as a function of alpha.
double twisted_n0_functional(double c, double a, double b, int m, double alpha);
/// Positive alpha root (|alpha| > |m|), by increasing alpha.
TwistedClosedForm twisted_n0_mode(double c, double a, double b, int m, int branch);

}  // namespace eulerwaves
