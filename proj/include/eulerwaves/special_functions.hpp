#pragma once

#include <functional>

namespace eulerwaves {

/// J, J', Y, Y' of one order at one argument.
struct BesselValues {
    double j = 0.0;
    double jp = 0.0;
    double y = 0.0;
    double yp = 0.0;
};

/// Argument below which J uses the power series; Steed's continued fractions above.
inline constexpr double kBesselSeriesSeam = 12.0;

/// Bessel function of the first kind. nu >= 0, or a negative integer (reflection).
double bessel_j(double nu, double x);
double bessel_j_prime(double nu, double x);
/// Bessel function of the second kind, x > 0.
double bessel_y(double nu, double x);
double bessel_y_prime(double nu, double x);
/// All four at once through the continued-fraction route (Temme series for x < 2).
BesselValues bessel_jy(double nu, double x);

/// Power-series J and J' (exposed so the seam can be tested).
double bessel_j_series(double nu, double x);
double bessel_j_prime_series(double nu, double x);

/// m-th positive zero of J_nu (m >= 1).
double bessel_j_zero(double nu, int m);

/// Ferrers associated Legendre function P_m^{|n|}(x) with Condon-Shortley phase, |x| <= 1.
double assoc_legendre(int n, int m, double x);
/// d/dx of assoc_legendre, |x| < 1.
double assoc_legendre_prime(int n, int m, double x);

/// Jacobi polynomial J_d^{(q,p)}(x) = 2^-d sum_m C(q+d, m) C(p+d, d-m) (x+1)^m (x-1)^(d-m).
double jacobi_poly(int d, int q, int p, double x);
double jacobi_poly_prime(int d, int q, int p, double x);

/// Exact binomial coefficient (as double) for 0 <= k <= n <= 62.
double binomial(int n, int k);

/// Regular radial profile R(r) of a mode R(r) e^{i n theta} on the hyperbolic disk with
/// positive-Laplacian eigenvalue 1/4 + beta^2.
struct RadialProfileValue {
    double r = 0.0;   ///< R
    double dr = 0.0;  ///< R'
};

/// Series evaluation tanh^|n|(r/2) 2F1(1/2 - i beta, 1/2 + i beta; 1 + |n|; -sinh^2(r/2)).
/// Valid for r < 2 asinh(1); DomainError beyond.
RadialProfileValue hyperbolic_radial_series(int n, double beta, double r);

struct RadialEigenSolution {
    int n = 0;
    int branch = 1;
    double r_max = 1.0;
    double beta = 0.0;            ///< series-refined root
    double beta_shooting = 0.0;   ///< root from ODE shooting
    double eigenvalue = 0.0;      ///< 1/4 + beta^2
    double boundary_residual = 0.0;  ///< |R(r_max)| / max |R|
    std::function<RadialProfileValue(double)> profile;
};

/// Dirichlet eigenmode of the hyperbolic disk of radius r_max. The root is bracketed
/// by shooting from a Frobenius start near the origin and bisection on R(r_max).
RadialEigenSolution hyperbolic_radial_mode(int n, double r_max, int branch);

}  // namespace eulerwaves
