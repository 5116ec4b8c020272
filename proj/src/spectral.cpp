#include "eulerwaves/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulerwaves/errors.hpp"
#include "eulerwaves/special_functions.hpp"

namespace eulerwaves {

std::vector<Interval> scan_bracket(const ScalarFn& fn, Interval range, int resolution) {
    if (resolution < 1) throw ArgumentError("scan_bracket: resolution must be >= 1");
    std::vector<Interval> out;
    const double step = (range.hi - range.lo) / resolution;
    double x0 = range.lo;
    double f0 = fn(x0);
    for (int i = 1; i <= resolution; ++i) {
        const double x1 = (i == resolution) ? range.hi : range.lo + i * step;
        const double f1 = fn(x1);
        if ((f0 < 0.0 && f1 > 0.0) || (f0 > 0.0 && f1 < 0.0) || (f1 == 0.0 && f0 != 0.0)) out.push_back({x0, x1});
        x0 = x1;
        f0 = f1;
    }
    return out;
}

double bisect(const ScalarFn& fn, Interval bracket, double xtol) {
    double a = bracket.lo, b = bracket.hi;
    double fa = fn(a);
    double fb = fn(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0) == (fb < 0)) throw BracketError("bisect: no sign change in bracket");
    for (int i = 0; i < 400 && std::abs(b - a) > xtol; ++i) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = fn(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

namespace {

// Walks windows [lo, lo + width] until `branch` sign changes have been seen.
Interval nth_bracket(const ScalarFn& fn, double lo, double width, int resolution, int branch, double limit,
                     const char* what) {
    if (branch < 1) throw ArgumentError(std::string(what) + ": branch must be >= 1");
    int found = 0;
    while (lo < limit) {
        const auto brs = scan_bracket(fn, {lo, lo + width}, resolution);
        for (const auto& br : brs)
            if (++found == branch) return br;
        lo += width;
    }
    throw BracketError(std::string(what) + ": branch " + std::to_string(branch) + " not found below " +
                       std::to_string(limit));
}

double polish(const ScalarFn& fn, Interval br) {
    const double scale = std::max(std::abs(br.lo), std::abs(br.hi));
    return bisect(fn, br, 4e-16 * scale);
}

}  // namespace

double ck_dispersion(int n, int m, double beta) {
    const double alpha = std::sqrt(beta * beta + static_cast<double>(m) * m);
    const double num = m * beta * bessel_j_prime(n, beta) + n * alpha * bessel_j(n, beta);
    return num / (std::abs(m) * beta + std::abs(n) * alpha);
}

DispersionRoot ck_dispersion_root(int n, int m, int branch) {
    if (n == 0 && m == 0) throw DegenerateError("ck_dispersion_root: (n, m) = (0, 0) has no curl eigenfield");
    ScalarFn fn = [n, m](double b) { return ck_dispersion(n, m, b); };
    const Interval br = nth_bracket(fn, 1e-3, 5.0, 500, branch, 2000.0, "ck_dispersion_root");
    DispersionRoot r;
    r.beta = polish(fn, br);
    r.alpha = std::sqrt(r.beta * r.beta + static_cast<double>(m) * m);
    r.residual = std::abs(fn(r.beta));
    r.branch = branch;
    return r;
}

double ck_annulus_dispersion(int n, int m, double a, double b, double beta) {
    const double alpha = std::sqrt(beta * beta + static_cast<double>(m) * m);
    const auto va = bessel_jy(n, beta * a);
    const auto vb = bessel_jy(n, beta * b);
    auto p = [&](double z, double zp, double r) { return n * alpha * z + m * beta * r * zp; };
    const double d = p(va.j, va.jp, a) * p(vb.y, vb.yp, b) - p(vb.j, vb.jp, b) * p(va.y, va.yp, a);
    const double sa = std::abs(n) * alpha + std::abs(m) * beta * a;
    const double sb = std::abs(n) * alpha + std::abs(m) * beta * b;
    return d * (kPi * beta * std::sqrt(a * b) / 2.0) / (sa * sb);
}

DispersionRoot ck_annulus_dispersion_root(int n, int m, double a, double b, int branch) {
    if (!(a > 0.0 && b > a)) throw ArgumentError("ck_annulus_dispersion_root: need 0 < a < b");
    if (n == 0 && m == 0) throw DegenerateError("ck_annulus_dispersion_root: (n, m) = (0, 0)");
    ScalarFn fn = [=](double beta) { return ck_annulus_dispersion(n, m, a, b, beta); };
    const double width = 5.0 * kPi / (b - a);
    const Interval br = nth_bracket(fn, 0.05 / a, width, 500, branch, 0.05 / a + 400.0 * width,
                                    "ck_annulus_dispersion_root");
    DispersionRoot r;
    r.beta = polish(fn, br);
    r.alpha = std::sqrt(r.beta * r.beta + static_cast<double>(m) * m);
    r.residual = std::abs(fn(r.beta));
    r.branch = branch;
    return r;
}

double bessel_cross_product(double nu, double a, double b, double k) {
    const auto va = bessel_jy(nu, k * a);
    const auto vb = bessel_jy(nu, k * b);
    return (kPi * k * std::sqrt(a * b) / 2.0) * (va.j * vb.y - vb.j * va.y);
}

CrossRoot crossproduct_root(double nu, double a, double b, int branch) {
    if (!(a > 0.0 && b > a)) throw ArgumentError("crossproduct_root: need 0 < a < b");
    if (nu < 0.0) throw ArgumentError("crossproduct_root: order must be non-negative");
    ScalarFn fn = [=](double k) { return bessel_cross_product(nu, a, b, k); };
    const double width = 5.0 * kPi / (b - a);
    const double lo = 1e-3 * kPi / (b - a);
    const Interval br = nth_bracket(fn, lo, width, 250, branch, lo + 400.0 * width, "crossproduct_root");
    CrossRoot r;
    r.k = polish(fn, br);
    r.residual = std::abs(fn(r.k));
    r.branch = branch;
    return r;
}

// Twisted warped metric.

void check_profile(const WarpedProfile& profile) {
    if (!profile.phi) throw ProfileError("warped profile has no phi");
    if (!(profile.b > profile.a)) throw ProfileError("warped profile needs a < b");
    for (int i = 0; i <= 1000; ++i) {
        const double r = profile.a + (profile.b - profile.a) * i / 1000.0;
        const auto p = profile.phi(r);
        if (!(p[0] > 0.0) || !(p[1] > 0.0))
            throw ProfileError("warped profile requires phi > 0 and phi' > 0; fails at r = " + std::to_string(r));
    }
}

std::array<std::array<double, 2>, 2> cmetric_system(const WarpedProfile& profile, int n, int m, double alpha,
                                                      double r) {
    const auto p = profile.phi(r);
    const double phi = p[0], dphi = p[1], c = profile.c;
    const double mt = m - c * n / (phi * phi);
    const double inv = 1.0 / (alpha * phi * dphi);
    std::array<std::array<double, 2>, 2> a{};
    a[0][0] = inv * n * mt;
    a[0][1] = inv * (alpha * alpha * phi * phi - static_cast<double>(n) * n);
    a[1][0] = inv * (2.0 * c * alpha * dphi * dphi / (phi * phi) + mt * mt - alpha * alpha * dphi * dphi);
    a[1][1] = -inv * n * mt;
    return a;
}

namespace {

using State2 = DormandPrince<2>::State;

State2 start_data(const WarpedProfile& profile, int n, int m, double scale) {
    const auto p = profile.phi(profile.a);
    const double mt = m - profile.c * n / (p[0] * p[0]);
    const double nrm = std::hypot(static_cast<double>(n), mt);
    if (nrm == 0.0) throw DegenerateError("twisted mode: boundary condition is vacuous for n = 0, m = c n / phi^2");
    // n h - mt g = 0 with g = sin(chi), h = cos(chi).
    return {scale * n / nrm, scale * mt / nrm};
}

double terminal_functional(const WarpedProfile& profile, int n, int m, const State2& y) {
    const auto p = profile.phi(profile.b);
    const double mt = m - profile.c * n / (p[0] * p[0]);
    const double nrm = std::hypot(static_cast<double>(n), mt) * std::hypot(y[0], y[1]);
    return (n * y[1] - mt * y[0]) / nrm;
}

DormandPrince<2> make_ode(const WarpedProfile& profile, int n, int m, double alpha, double rtol) {
    OdeOptions o;
    o.rtol = rtol;
    o.atol = 1e-14;
    auto rhs = [profile, n, m, alpha](double r, const State2& y) {
        const auto a = cmetric_system(profile, n, m, alpha, r);
        return State2{a[0][0] * y[0] + a[0][1] * y[1], a[1][0] * y[0] + a[1][1] * y[1]};
    };
    return DormandPrince<2>(rhs, o);
}

}  // namespace

double cmetric_shooting_functional(const WarpedProfile& profile, int n, int m, double alpha,
                                   const CMetricOptions& opts) {
    auto ode = make_ode(profile, n, m, alpha, opts.rtol);
    const State2 y = ode.solve_to(profile.a, start_data(profile, n, m, opts.initial_scale), profile.b);
    return terminal_functional(profile, n, m, y);
}

std::vector<Interval> scan_cmetric_brackets(const WarpedProfile& profile, int n, int m,
                                            const CMetricOptions& opts) {
    check_profile(profile);
    CMetricOptions scan = opts;
    scan.rtol = opts.scan_rtol;
    std::vector<Interval> out;
    for (const double sgn : {-1.0, 1.0}) {
        const double lo = std::max(opts.alpha_range.lo, opts.alpha_exclude);
        const double hi = opts.alpha_range.hi;
        ScalarFn fn = [&](double s) { return cmetric_shooting_functional(profile, n, m, sgn * s, scan); };
        for (const auto& br : scan_bracket(fn, {lo, hi}, opts.resolution)) {
            if (sgn > 0)
                out.push_back(br);
            else
                out.push_back({-br.hi, -br.lo});
        }
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) {
        const double ax = std::abs(0.5 * (x.lo + x.hi)), ay = std::abs(0.5 * (y.lo + y.hi));
        if (ax != ay) return ax < ay;
        return x.lo < y.lo;
    });
    return out;
}

std::vector<double> scan_cmetric_alphas(const WarpedProfile& profile, int n, int m, const CMetricOptions& opts) {
    std::vector<double> out;
    for (const auto& br : scan_cmetric_brackets(profile, n, m, opts))
        out.push_back(solve_cmetric_mode(profile, n, m, br, opts).alpha);
    return out;
}

double CMetricMode::twist(double r) const {
    const double phi = profile.phi(r)[0];
    return m - profile.c * n / (phi * phi);
}

CMetricSample CMetricMode::sample(double r) const {
    CMetricSample s;
    s.g = g.eval(r);
    s.h = h.eval(r);
    auto fval = [this](double x) {
        const auto p = profile.phi(x);
        const auto gv = g.eval(x);
        const auto hv = h.eval(x);
        const double mt = m - profile.c * n / (p[0] * p[0]);
        const double dmt = 2.0 * profile.c * n * p[1] / (p[0] * p[0] * p[0]);
        const double num = n * hv[0] - mt * gv[0];
        const double dnum = n * hv[1] - dmt * gv[0] - mt * gv[1];
        const double den = alpha * p[0] * p[1];
        const double dden = alpha * (p[1] * p[1] + p[0] * p[2]);
        return std::array<double, 2>{num / den, (dnum * den - num * dden) / (den * den)};
    };
    const auto f0 = fval(r);
    const double d = 1e-5 * (profile.b - profile.a);
    s.f = {f0[0], f0[1], (fval(r + d)[1] - fval(r - d)[1]) / (2.0 * d)};
    return s;
}

CMetricMode solve_cmetric_mode(const WarpedProfile& profile, int n, int m, Interval alpha_bracket,
                               const CMetricOptions& opts) {
    check_profile(profile);
    if (alpha_bracket.lo > alpha_bracket.hi) std::swap(alpha_bracket.lo, alpha_bracket.hi);
    if (alpha_bracket.lo <= 0.0 && alpha_bracket.hi >= 0.0)
        throw BracketError("solve_cmetric_mode: bracket must not contain alpha = 0");
    ScalarFn fn = [&](double al) { return cmetric_shooting_functional(profile, n, m, al, opts); };
    const double flo = fn(alpha_bracket.lo), fhi = fn(alpha_bracket.hi);
    if ((flo < 0) == (fhi < 0) && flo != 0.0 && fhi != 0.0)
        throw BracketError("solve_cmetric_mode: boundary functional has no sign change in the alpha bracket");
    const double scale = std::max(std::abs(alpha_bracket.lo), std::abs(alpha_bracket.hi));
    const double alpha = bisect(fn, alpha_bracket, 2e-16 * scale);
    const double res = std::abs(fn(alpha));
    if (res > opts.bc_tol)
        throw BracketError("solve_cmetric_mode: boundary functional " + std::to_string(res) +
                           " above tolerance at the bracketed alpha");

    // Tabulate (g, h) with exact derivative data for the C2 interpolant.
    const int nodes = std::max(16, opts.nodes);
    std::vector<double> rs(static_cast<std::size_t>(nodes) + 1);
    for (int i = 0; i <= nodes; ++i) rs[static_cast<std::size_t>(i)] = profile.a + (profile.b - profile.a) * i / nodes;
    rs.back() = profile.b;
    auto ode = make_ode(profile, n, m, alpha, opts.rtol);
    const State2 y0 = start_data(profile, n, m, opts.initial_scale);
    std::vector<double> times(rs.begin() + 1, rs.end());
    auto ys = ode.solve(profile.a, y0, times);
    ys.insert(ys.begin(), y0);
    std::vector<double> gv, gd, gdd, hv, hd, hdd;
    const double da = 1e-4 * std::max(1.0, profile.b - profile.a);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double r = rs[i];
        const auto a = cmetric_system(profile, n, m, alpha, r);
        auto at = [&](double x) { return cmetric_system(profile, n, m, alpha, x); };
        const auto am2 = at(r - 2 * da), am1 = at(r - da), ap1 = at(r + da), ap2 = at(r + 2 * da);
        std::array<std::array<double, 2>, 2> ad{};
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                ad[p][q] = (am2[p][q] - 8 * am1[p][q] + 8 * ap1[p][q] - ap2[p][q]) / (12 * da);
        const auto& y = ys[i];
        const double g1 = a[0][0] * y[0] + a[0][1] * y[1];
        const double h1 = a[1][0] * y[0] + a[1][1] * y[1];
        const double g2 = ad[0][0] * y[0] + ad[0][1] * y[1] + a[0][0] * g1 + a[0][1] * h1;
        const double h2 = ad[1][0] * y[0] + ad[1][1] * y[1] + a[1][0] * g1 + a[1][1] * h1;
        gv.push_back(y[0]);
        gd.push_back(g1);
        gdd.push_back(g2);
        hv.push_back(y[1]);
        hd.push_back(h1);
        hdd.push_back(h2);
    }
    CMetricMode mode;
    mode.profile = profile;
    mode.n = n;
    mode.m = m;
    mode.alpha = alpha;
    mode.boundary_residual = res;
    mode.g = QuinticHermite(rs, gv, gd, gdd);
    mode.h = QuinticHermite(rs, hv, hd, hdd);
    return mode;
}

// n = 0 closed form.

double twisted_n0_functional(double c, double a, double b, int m, double alpha) {
    const double nu2 = 2.0 * alpha * c + 1.0;
    const double k2 = alpha * alpha - static_cast<double>(m) * m;
    if (!(nu2 > 0.0) || !(k2 > 0.0)) throw DomainError("twisted n = 0 mode needs 2 alpha c + 1 > 0 and alpha^2 > m^2");
    return bessel_cross_product(std::sqrt(nu2), a, b, std::sqrt(k2));
}

TwistedClosedForm twisted_n0_mode(double c, double a, double b, int m, int branch) {
    if (!(a > 0.0 && b > a)) throw ArgumentError("twisted_n0_mode: need 0 < a < b");
    if (m == 0) throw DegenerateError("twisted_n0_mode: m = 0 gives a vacuous boundary condition");
    const double lo = std::abs(m) * (1.0 + 1e-9);
    double hi = 30.0;
    if (c < 0.0) hi = std::min(hi, (1.0 - 1e-9) / (-2.0 * c));
    if (!(hi > lo)) throw BracketError("twisted_n0_mode: empty alpha window");
    ScalarFn fn = [=](double al) { return twisted_n0_functional(c, a, b, m, al); };
    const auto brs = scan_bracket(fn, {lo, hi}, 4000);
    if (static_cast<int>(brs.size()) < branch || branch < 1)
        throw BracketError("twisted_n0_mode: branch " + std::to_string(branch) + " not found");
    const Interval br = brs[static_cast<std::size_t>(branch - 1)];
    TwistedClosedForm t;
    t.alpha = bisect(fn, br, 4e-16 * br.hi);
    t.nu = std::sqrt(2.0 * t.alpha * c + 1.0);
    t.k = std::sqrt(t.alpha * t.alpha - static_cast<double>(m) * m);
    t.c = c;
    t.a = a;
    t.m = m;
    const auto za = bessel_jy(t.nu, t.k * a);
    t.ja = za.j;
    t.ya = za.y;
    // Scale chosen so that order 1/2 with k a = pi/2 gives g = 4 alpha sqrt(r) cos(k r).
    t.scale = 2.0 * kPi * t.alpha * t.k * std::sqrt(a);
    return t;
}

std::array<double, 3> TwistedClosedForm::fgh(double r) const {
    const double x = k * r;
    const auto zr = bessel_jy(nu, x);
    const double G = ya * zr.j - ja * zr.y;
    const double Gp = ya * zr.jp - ja * zr.yp;
    const double g0 = scale * r * G;
    return {-m * g0 / (alpha * r), g0, scale * (G + x * Gp) / (alpha * r)};
}

std::array<double, 3> TwistedClosedForm::g(double r) const {
    const BesselValues za{ja, 0.0, ya, 0.0};
    const double x = k * r;
    const auto zr = bessel_jy(nu, x);
    const double G = za.y * zr.j - za.j * zr.y;
    const double Gp = za.y * zr.jp - za.j * zr.yp;
    const double Gpp = -Gp / x - (1.0 - nu * nu / (x * x)) * G;
    return {scale * r * G, scale * (G + x * Gp), scale * (2.0 * k * Gp + k * x * Gpp)};
}

std::array<double, 3> TwistedClosedForm::h(double r) const {
    const auto gv = g(r);
    const BesselValues za{ja, 0.0, ya, 0.0};
    const double x = k * r;
    const auto zr = bessel_jy(nu, x);
    const double G = za.y * zr.j - za.j * zr.y;
    const double Gp = za.y * zr.jp - za.j * zr.yp;
    const double Gpp = -Gp / x - (1.0 - nu * nu / (x * x)) * G;
    const double Gppp = -Gpp / x + Gp / (x * x) - (1.0 - nu * nu / (x * x)) * Gp - 2.0 * nu * nu / (x * x * x) * G;
    const double g3 = scale * (3.0 * k * k * Gpp + k * k * x * Gppp);
    return {gv[1] / (alpha * r), gv[2] / (alpha * r) - gv[1] / (alpha * r * r),
            g3 / (alpha * r) - 2.0 * gv[2] / (alpha * r * r) + 2.0 * gv[1] / (alpha * r * r * r)};
}

std::array<double, 3> TwistedClosedForm::f(double r) const {
    const auto gv = g(r);
    const double q = -m / alpha;
    return {q * gv[0] / r, q * (gv[1] / r - gv[0] / (r * r)),
            q * (gv[2] / r - 2.0 * gv[1] / (r * r) + 2.0 * gv[0] / (r * r * r))};
}

}  // namespace eulerwaves
