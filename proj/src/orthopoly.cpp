#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "eulerwaves/errors.hpp"
#include "eulerwaves/special_functions.hpp"

namespace eulerwaves {

double binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (n > 62) throw RangeError("binomial: n too large for exact evaluation");
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return static_cast<double>(r);
}

double assoc_legendre(int n, int m, double x) {
    const int k = std::abs(n);
    if (m < 0) throw ArgumentError("assoc_legendre: degree must be >= 0");
    if (!(std::abs(x) <= 1.0)) throw DomainError("assoc_legendre: |x| must be <= 1");
    if (k > m) return 0.0;
    // P_k^k = (-1)^k (2k-1)!! (1-x^2)^{k/2}
    double pkk = 1.0;
    const double sx = std::sqrt((1.0 - x) * (1.0 + x));
    for (int i = 1; i <= k; ++i) pkk *= -(2.0 * i - 1.0) * sx;
    if (m == k) return pkk;
    double p0 = pkk;
    double p1 = x * (2.0 * k + 1.0) * pkk;
    for (int l = k + 2; l <= m; ++l) {
        const double p2 = (x * (2.0 * l - 1.0) * p1 - (l + k - 1.0) * p0) / (l - k);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double assoc_legendre_prime(int n, int m, double x) {
    const int k = std::abs(n);
    if (!(std::abs(x) < 1.0)) throw DomainError("assoc_legendre_prime: |x| must be < 1");
    if (k > m) return 0.0;
    // (x^2 - 1) P_m' = m x P_m - (m + k) P_{m-1}
    const double pm = assoc_legendre(k, m, x);
    const double pm1 = (m - 1 >= k) ? assoc_legendre(k, m - 1, x) : 0.0;
    return (m * x * pm - (m + k) * pm1) / (x * x - 1.0);
}

double jacobi_poly(int d, int q, int p, double x) {
    if (d < 0 || q < 0 || p < 0) throw ArgumentError("jacobi_poly: indices must be non-negative");
    double s = 0.0;
    for (int m = 0; m <= d; ++m)
        s += binomial(q + d, m) * binomial(p + d, d - m) * std::pow(x + 1.0, m) * std::pow(x - 1.0, d - m);
    return std::ldexp(s, -d);
}

double jacobi_poly_prime(int d, int q, int p, double x) {
    if (d < 0 || q < 0 || p < 0) throw ArgumentError("jacobi_poly: indices must be non-negative");
    double s = 0.0;
    for (int m = 0; m <= d; ++m) {
        const double c = binomial(q + d, m) * binomial(p + d, d - m);
        double t = 0.0;
        if (m > 0) t += m * std::pow(x + 1.0, m - 1) * std::pow(x - 1.0, d - m);
        if (d - m > 0) t += (d - m) * std::pow(x + 1.0, m) * std::pow(x - 1.0, d - m - 1);
        s += c * t;
    }
    return std::ldexp(s, -d);
}

}  // namespace eulerwaves
