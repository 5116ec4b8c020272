#include <cmath>

#include "doctest.h"
#include "eulerwaves/charts.hpp"
#include "eulerwaves/special_functions.hpp"
#include "eulerwaves/spectral.hpp"
#include "helpers.hpp"

using namespace eulerwaves;
using namespace testing_util;

namespace {

const double kA = 2.0 * kPi / 3.0;
const double kB = 2.0 * kPi;

WarpedProfile twisted_profile(double c = -0.3) { return {linear_warp(), c, kA, kB, "r"}; }

double std_bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi), fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("scan and bisect") {
    const auto br = scan_bracket([](double x) { return std::sin(x); }, {0.5, 10.0}, 100);
    REQUIRE(br.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(br[i].lo <= (i + 1) * kPi);
        CHECK(br[i].hi >= (i + 1) * kPi);
        CHECK(bisect([](double x) { return std::sin(x); }, br[i], 1e-14) == doctest::Approx((i + 1) * kPi).epsilon(1e-13));
    }
    CHECK(scan_bracket([](double x) { return 1.0 + x * x; }, {-1.0, 1.0}, 50).empty());
}

TEST_CASE("solid cylinder dispersion") {
    // n = 0 reduces to J_0'(beta) = 0.
    CHECK(ck_dispersion_root(0, 1, 1).beta == doctest::Approx(3.831705970207512).epsilon(1e-12));
    CHECK(ck_dispersion_root(0, 3, 2).beta == doctest::Approx(7.015586669815619).epsilon(1e-12));
    // m = 0 reduces to J_n(beta) = 0.
    CHECK(ck_dispersion_root(2, 0, 1).beta == doctest::Approx(5.135622301840683).epsilon(1e-12));
    const auto r = ck_dispersion_root(1, 1, 1);
    auto f = [](double beta) {
        const double al = std::sqrt(beta * beta + 1.0);
        const double jp = 0.5 * (std::cyl_bessel_j(0.0, beta) - std::cyl_bessel_j(2.0, beta));
        return beta * jp + al * std::cyl_bessel_j(1.0, beta);
    };
    const auto br = scan_bracket(f, {0.05, 10.0}, 400);
    REQUIRE(!br.empty());
    CHECK(r.beta == doctest::Approx(std_bisect(f, br[0].lo, br[0].hi)).epsilon(1e-10));
    CHECK(r.alpha == doctest::Approx(std::sqrt(r.beta * r.beta + 1.0)));
    CHECK(ck_dispersion_root(1, 1, 2).beta > r.beta);
    CHECK_THROWS_AS(ck_dispersion_root(0, 0, 1), DegenerateError);
}

TEST_CASE("cross-product roots") {
    const auto r = crossproduct_root(0.5, kA, kB, 1);
    CHECK(std::abs(r.k - 0.75) < 1e-10);
    // Half-order cross products reduce to sin(k (b - a)).
    for (int j = 1; j <= 5; ++j) CHECK(std::abs(crossproduct_root(0.5, kA, kB, j).k - 0.75 * j) < 1e-10);
    double prev = 0.0;
    for (int j = 1; j <= 6; ++j) {
        const double k = crossproduct_root(2.0, 50.0, 60.0, j).k;
        CHECK(k > prev);
        CHECK(k == doctest::Approx(j * kPi / 10.0).epsilon(2e-2));
        CHECK(std::abs(bessel_cross_product(2.0, 50.0, 60.0, k)) < 1e-10);
        prev = k;
    }
}

TEST_CASE("twisted n = 0 closed form") {
    const auto cf = twisted_n0_mode(-0.3, kA, kB, 1, 1);
    CHECK(std::abs(cf.alpha - 1.25) < 1e-10);
    CHECK(std::abs(cf.nu - 0.5) < 1e-10);
    CHECK(std::abs(cf.k - 0.75) < 1e-10);
    // Closed-form profiles up to a common scale: g = 5 sqrt r cos(3r/4).
    const double s = cf.g(3.0)[0] / (5.0 * std::sqrt(3.0) * std::cos(2.25));
    for (int i = 0; i <= 50; ++i) {
        const double r = kA + (kB - kA) * i / 50.0;
        const double g = 5.0 * std::sqrt(r) * std::cos(0.75 * r);
        const double f = -4.0 / std::sqrt(r) * std::cos(0.75 * r);
        const double h = -3.0 / std::sqrt(r) * std::sin(0.75 * r) + 2.0 * std::pow(r, -1.5) * std::cos(0.75 * r);
        CHECK(std::abs(cf.g(r)[0] - s * g) < 1e-8 * std::abs(s) * 5.0);
        CHECK(std::abs(cf.f(r)[0] - s * f) < 1e-8 * std::abs(s) * 5.0);
        CHECK(std::abs(cf.h(r)[0] - s * h) < 1e-8 * std::abs(s) * 5.0);
        const auto v = cf.fgh(r);
        CHECK(std::abs(v[0] - cf.f(r)[0]) < 1e-12 * std::abs(s) * 5.0);
        CHECK(std::abs(v[1] - cf.g(r)[0]) < 1e-12 * std::abs(s) * 5.0);
        CHECK(std::abs(v[2] - cf.h(r)[0]) < 1e-12 * std::abs(s) * 5.0);
    }
    CHECK(std::abs(cf.g(kA)[0]) < 1e-12);
    CHECK(std::abs(cf.g(kB)[0]) < 1e-10 * std::abs(s));
}

TEST_CASE("shooting with n = 0 reproduces the closed form") {
    const auto prof = twisted_profile();
    const auto br = scan_cmetric_brackets(prof, 0, 1, {});
    bool found = false;
    for (const auto& b : br) {
        if (b.lo > 0 && b.lo <= 1.25 && b.hi >= 1.25) {
            const auto mode = solve_cmetric_mode(prof, 0, 1, b);
            CHECK(std::abs(mode.alpha - 1.25) < 1e-8);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("shooting profiles match the closed-form g and h") {
    const auto prof = twisted_profile();
    Interval bracket{0, 0};
    for (const auto& b : scan_cmetric_brackets(prof, 0, 1, {}))
        if (b.lo > 0 && b.lo <= 1.25 && b.hi >= 1.25) bracket = b;
    REQUIRE(bracket.hi > 0);
    const auto mode = solve_cmetric_mode(prof, 0, 1, bracket);
    std::vector<double> rs, g, h, gs, hs;
    for (int i = 0; i <= 400; ++i) {
        const double r = kA + (kB - kA) * i / 400.0;
        rs.push_back(r);
        g.push_back(5.0 * std::sqrt(r) * std::cos(0.75 * r));
        h.push_back(-3.0 / std::sqrt(r) * std::sin(0.75 * r) + 2.0 * std::pow(r, -1.5) * std::cos(0.75 * r));
        gs.push_back(mode.g(r));
        hs.push_back(mode.h(r));
    }
    // One global scale by least squares over both profiles.
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        num += gs[i] * g[i] + hs[i] * h[i];
        den += g[i] * g[i] + h[i] * h[i];
    }
    const double s = num / den;
    double gmax = 0.0, hmax = 0.0, gdev = 0.0, hdev = 0.0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        gmax = std::max(gmax, std::abs(s * g[i]));
        hmax = std::max(hmax, std::abs(s * h[i]));
        gdev = std::max(gdev, std::abs(gs[i] - s * g[i]));
        hdev = std::max(hdev, std::abs(hs[i] - s * h[i]));
    }
    CHECK(gdev / gmax <= 1e-7);
    CHECK(hdev / hmax <= 1e-7);
}

TEST_CASE("c = 0 profiles match the Bessel closed form") {
    const int n = 1, m = 1;
    const auto prof = twisted_profile(0.0);
    const auto ref = ck_annulus_dispersion_root(n, m, kA, kB, 1);
    Interval bracket{0, 0};
    for (const auto& b : scan_cmetric_brackets(prof, n, m, {}))
        if (b.lo <= ref.alpha && b.hi >= ref.alpha) bracket = b;
    REQUIRE(bracket.hi > 0);
    const auto mode = solve_cmetric_mode(prof, n, m, bracket);
    CHECK(std::abs(mode.alpha - ref.alpha) < 1e-8);
    const double al = ref.alpha, be = ref.beta;
    auto Jp = [](double x) { return 0.5 * (std::cyl_bessel_j(0.0, x) - std::cyl_bessel_j(2.0, x)); };
    auto Yp = [](double x) { return 0.5 * (std::cyl_neumann(0.0, x) - std::cyl_neumann(2.0, x)); };
    // Radial component r f = n alpha Z + m beta r Z' vanishes at r = a.
    const double bj = n * al * std::cyl_bessel_j(1.0, be * kA) + m * be * kA * Jp(be * kA);
    const double by = n * al * std::cyl_neumann(1.0, be * kA) + m * be * kA * Yp(be * kA);
    auto Z = [&](double r) { return by * std::cyl_bessel_j(1.0, be * r) - bj * std::cyl_neumann(1.0, be * r); };
    auto dZ = [&](double r) { return be * (by * Jp(be * r) - bj * Yp(be * r)); };
    std::vector<double> g, h, gs, hs;
    for (int i = 0; i <= 400; ++i) {
        const double r = kA + (kB - kA) * i / 400.0;
        h.push_back(be * be * Z(r));
        g.push_back(-(al * r * dZ(r) + m * n * Z(r)));
        gs.push_back(mode.g(r));
        hs.push_back(mode.h(r));
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        num += gs[i] * g[i] + hs[i] * h[i];
        den += g[i] * g[i] + h[i] * h[i];
    }
    const double s = num / den;
    double gmax = 0.0, hmax = 0.0, gdev = 0.0, hdev = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        gmax = std::max(gmax, std::abs(s * g[i]));
        hmax = std::max(hmax, std::abs(s * h[i]));
        gdev = std::max(gdev, std::abs(gs[i] - s * g[i]));
        hdev = std::max(hdev, std::abs(hs[i] - s * h[i]));
    }
    CAPTURE(s);
    CHECK(gdev / gmax <= 1e-8);
    CHECK(hdev / hmax <= 1e-8);
}

TEST_CASE("c = 0 matches the annulus dispersion relation") {
    WarpedProfile prof = twisted_profile(0.0);
    const auto ref = ck_annulus_dispersion_root(1, 1, kA, kB, 1);
    auto alphas = scan_cmetric_alphas(prof, 1, 1, {});
    double best = 1e300;
    for (double al : alphas) best = std::min(best, std::abs(al - ref.alpha));
    CHECK(best < 1e-8);
}

TEST_CASE("shooting solution satisfies the ODE and boundary data") {
    const auto prof = twisted_profile();
    const auto br = scan_cmetric_brackets(prof, 1, 1, {});
    Interval pos{0, 0};
    for (const auto& b : br)
        if (b.lo > 0) {
            pos = b;
            break;
        }
    REQUIRE(pos.hi > 0);
    const auto mode = solve_cmetric_mode(prof, 1, 1, pos);
    CHECK(mode.boundary_residual < 1e-9);
    double gmax = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double r = kA + (kB - kA) * i / 200.0;
        gmax = std::max({gmax, std::abs(mode.g(r)), std::abs(mode.h(r))});
    }
    for (int i = 0; i < 200; ++i) {
        const double r = kA + (kB - kA) * (i + 0.5) / 200.0;
        const auto g = mode.g.eval(r), h = mode.h.eval(r);
        const auto A = cmetric_system(prof, 1, 1, mode.alpha, r);
        CHECK(std::abs(g[1] - (A[0][0] * g[0] + A[0][1] * h[0])) < 1e-7 * gmax);
        CHECK(std::abs(h[1] - (A[1][0] * g[0] + A[1][1] * h[0])) < 1e-7 * gmax);
    }

    CMetricOptions twice;
    twice.initial_scale = 2.0;
    const auto mode2 = solve_cmetric_mode(prof, 1, 1, pos, twice);
    CHECK(mode2.alpha == doctest::Approx(mode.alpha).epsilon(1e-10));
    for (double r : {2.5, 3.7, 5.9}) CHECK(mode2.g(r) == doctest::Approx(2.0 * mode.g(r)).epsilon(1e-8));
}

TEST_CASE("alpha scan finds both signs") {
    // At c = 0 reflecting z maps (m, alpha) to (-m, -alpha).
    CMetricOptions opts;
    opts.alpha_range = {0.1, 4.0};
    const auto prof = twisted_profile(0.0);
    const auto plus = scan_cmetric_alphas(prof, 1, 1, opts);
    const auto minus = scan_cmetric_alphas(prof, 1, -1, opts);
    int neg = 0;
    for (double al : plus) {
        if (al >= 0) continue;
        ++neg;
        double best = 1e300;
        for (double b : minus) best = std::min(best, std::abs(b + al));
        CHECK(best < 1e-7);
    }
    CHECK(neg > 0);
    const auto tw = scan_cmetric_alphas(twisted_profile(), 1, 1, opts);
    CHECK(std::any_of(tw.begin(), tw.end(), [](double a) { return a < 0; }));
    CHECK(std::any_of(tw.begin(), tw.end(), [](double a) { return a > 0; }));
}

TEST_CASE("profile validation") {
    WarpedProfile bad{[](double r) { return std::array<double, 3>{1.0 - r, -1.0, 0.0}; }, 0.0, 0.2, 2.0, "1-r"};
    CHECK_THROWS_AS(check_profile(bad), ProfileError);
    CHECK_NOTHROW(check_profile(twisted_profile()));
}

}  // TEST_SUITE
