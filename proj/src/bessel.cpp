#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "eulerwaves/errors.hpp"
#include "eulerwaves/special_functions.hpp"
#include "eulerwaves/types.hpp"

namespace eulerwaves {

namespace {

constexpr double kEps = 1e-16;
constexpr double kFpMin = DBL_MIN / kEps;
constexpr int kMaxIt = 100000;
constexpr double kMaxOrder = 100.0;
constexpr double kMaxArg = 1e4;

// Taylor coefficients of 1/Gamma(1+x); only the ones feeding gam1 and gam2.
constexpr double kC1 = 0.57721566490153286;
constexpr double kC2 = -0.65587807152025388;
constexpr double kC3 = -0.042002635034095236;
constexpr double kC4 = 0.16653861138229149;
constexpr double kC5 = -0.042197734555544337;
constexpr double kC6 = -0.0096219715278769736;
constexpr double kC7 = 0.0072189432466630995;

// gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    gampl = 1.0 / std::tgamma(1.0 + mu);
    gammi = 1.0 / std::tgamma(1.0 - mu);
    const double m2 = mu * mu;
    if (std::abs(mu) < 1e-2) {
        gam1 = -(kC1 + m2 * (kC3 + m2 * (kC5 + m2 * kC7)));
        gam2 = 1.0 + m2 * (kC2 + m2 * (kC4 + m2 * kC6));
    } else {
        gam1 = (gammi - gampl) / (2.0 * mu);
        gam2 = (gammi + gampl) / 2.0;
    }
}

void check_order(double nu) {
    if (!std::isfinite(nu) || nu > kMaxOrder)
        throw RangeError("Bessel order " + std::to_string(nu) + " outside supported range");
}

// Steed/Temme evaluation of J, Y and derivatives for nu >= 0, x > 0.
BesselValues steed(double xnu, double x) {
    check_order(xnu);
    if (!(x > 0.0)) throw DomainError("Bessel argument must be positive");
    if (x > kMaxArg) throw RangeError("Bessel argument " + std::to_string(x) + " outside supported range");
    const int nl = (x < 2.0 ? static_cast<int>(xnu + 0.5) : std::max(0, static_cast<int>(xnu - x + 1.5)));
    const double xmu = xnu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / kPi;
    int isign = 1;
    double h = xnu * xi;
    if (h < kFpMin) h = kFpMin;
    double b = xi2 * xnu, d = 0.0, c = h;
    int i = 0;
    for (; i < kMaxIt; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = b - 1.0 / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = c * d;
        h = del * h;
        if (d < 0.0) isign = -isign;
        if (std::abs(del - 1.0) <= kEps) break;
    }
    if (i >= kMaxIt) throw RangeError("Bessel continued fraction CF1 did not converge");
    double rjl = isign * kFpMin;
    double rjpl = h * rjl;
    const double rjl1 = rjl;
    const double rjp1 = rjpl;
    double fact = xnu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;
    double rjmu, rymu, rymup, ry1;
    if (x < 2.0) {
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        fact = (std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu));
        d = -std::log(x2);
        double e = xmu * d;
        const double fact2 = (std::abs(e) < kEps ? 1.0 : std::sinh(e) / e);
        double gam1, gam2, gampl, gammi;
        temme_gammas(xmu, gam1, gam2, gampl, gammi);
        double ff = 2.0 / kPi * fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
        e = std::exp(e);
        double p = e / (gampl * kPi);
        double q = 1.0 / (e * kPi * gammi);
        const double pimu2 = 0.5 * pimu;
        const double fact3 = (std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2);
        const double r = kPi * pimu2 * fact3 * fact3;
        c = 1.0;
        d = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        for (i = 1; i < kMaxIt; ++i) {
            ff = (i * ff + p + q) / (i * static_cast<double>(i) - xmu2);
            c *= (d / i);
            p /= (i - xmu);
            q /= (i + xmu);
            const double del = c * (ff + r * q);
            sum += del;
            const double del1 = c * p - i * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
        }
        if (i >= kMaxIt) throw RangeError("Temme series did not converge");
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        double a = 0.25 - xmu2;
        double p = -0.5 * xi;
        double q = 1.0;
        const double br = 2.0 * x;
        double bi = 2.0;
        fact = a * xi / (p * p + q * q);
        double cr = br + q * fact;
        double ci = bi + p * fact;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        for (i = 1; i < kMaxIt; ++i) {
            a += 2 * i;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) <= kEps) break;
        }
        if (i >= kMaxIt) throw RangeError("Bessel continued fraction CF2 did not converge");
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }
    fact = rjmu / rjl;
    BesselValues out;
    out.j = rjl1 * fact;
    out.jp = rjp1 * fact;
    for (i = 1; i <= nl; ++i) {
        const double rytemp = (xmu + i) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    out.y = rymu;
    out.yp = xnu * xi * rymu - ry1;
    if (!std::isfinite(out.y) || !std::isfinite(out.yp))
        throw RangeError("Bessel Y overflows at x = " + std::to_string(x));
    return out;
}

bool is_integer(double v) { return std::floor(v) == v; }

// Reduces a negative integer order. Returns the sign (-1)^n to apply.
double reflect(double& nu) {
    if (nu >= 0.0) return 1.0;
    if (!is_integer(nu)) throw DomainError("negative non-integer Bessel order is not supported");
    nu = -nu;
    return (static_cast<long>(nu) % 2 == 0) ? 1.0 : -1.0;
}

void check_arg_j(double x) {
    if (!(x >= 0.0)) throw DomainError("Bessel J argument must be non-negative");
    if (x > kMaxArg) throw RangeError("Bessel argument " + std::to_string(x) + " outside supported range");
}

}  // namespace

double bessel_j_series(double nu, double x) {
    check_order(nu);
    check_arg_j(x);
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const long double hx = 0.5L * x;
    const long double q = -hx * hx;
    long double term = std::pow(hx, static_cast<long double>(nu)) / std::tgamma(static_cast<long double>(nu) + 1.0L);
    long double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (k + nu));
        sum += term;
        if (std::abs(term) < 1e-21L * std::abs(sum) && k > hx) break;
    }
    return static_cast<double>(sum);
}

double bessel_j_prime_series(double nu, double x) {
    check_order(nu);
    check_arg_j(x);
    if (x == 0.0) {
        if (nu == 1.0) return 0.5;
        if (nu == 0.0 || nu > 1.0) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    const long double hx = 0.5L * x;
    const long double q = -hx * hx;
    long double term = std::pow(hx, static_cast<long double>(nu)) / std::tgamma(static_cast<long double>(nu) + 1.0L);
    long double sum = term * nu;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * (k + nu));
        const long double t = term * (2.0L * k + nu);
        sum += t;
        if (std::abs(t) < 1e-21L * std::abs(sum) && k > hx) break;
    }
    return static_cast<double>(sum / x);
}

double bessel_j(double nu, double x) {
    const double sgn = reflect(nu);
    check_arg_j(x);
    if (x <= kBesselSeriesSeam) return sgn * bessel_j_series(nu, x);
    return sgn * steed(nu, x).j;
}

double bessel_j_prime(double nu, double x) {
    const double sgn = reflect(nu);
    check_arg_j(x);
    if (x <= kBesselSeriesSeam) return sgn * bessel_j_prime_series(nu, x);
    return sgn * steed(nu, x).jp;
}

BesselValues bessel_jy(double nu, double x) {
    const double sgn = reflect(nu);
    BesselValues v = steed(nu, x);
    if (x <= kBesselSeriesSeam) {
        v.j = bessel_j_series(nu, x);
        v.jp = bessel_j_prime_series(nu, x);
    }
    v.j *= sgn;
    v.jp *= sgn;
    v.y *= sgn;
    v.yp *= sgn;
    return v;
}

double bessel_y(double nu, double x) {
    const double sgn = reflect(nu);
    return sgn * steed(nu, x).y;
}

double bessel_y_prime(double nu, double x) {
    const double sgn = reflect(nu);
    return sgn * steed(nu, x).yp;
}

double bessel_j_zero(double nu, int m) {
    if (m < 1) throw ArgumentError("bessel_j_zero: zero index must be >= 1");
    const double order = std::abs(nu);
    double lo = std::max(order, 1e-6);
    double flo = bessel_j(order, lo);
    const double step = 0.1;
    int found = 0;
    for (int guard = 0; guard < 200000; ++guard) {
        const double hi = lo + step;
        const double fhi = bessel_j(order, hi);
        if (fhi == 0.0) {
            if (++found == m) return hi;
        } else if ((flo < 0) != (fhi < 0)) {
            if (++found == m) {
                double a = lo, b = hi, fa = flo;
                while (b - a > 1e-15 * b) {
                    const double mid = 0.5 * (a + b);
                    const double fm = bessel_j(order, mid);
                    if (fm == 0.0) return mid;
                    if ((fm < 0) == (fa < 0)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                double z = 0.5 * (a + b);
                const double jp = bessel_j_prime(order, z);
                if (jp != 0.0) {
                    const double zn = z - bessel_j(order, z) / jp;
                    if (zn > a && zn < b) z = zn;
                }
                return z;
            }
        }
        lo = hi;
        flo = fhi;
    }
    throw BracketError("bessel_j_zero: zero not reached");
}

}  // namespace eulerwaves
