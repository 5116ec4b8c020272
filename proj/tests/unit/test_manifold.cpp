#include "doctest.h"
#include "eulerwaves/catalogue.hpp"
#include "eulerwaves/charts.hpp"
#include "eulerwaves/quadrature.hpp"
#include "helpers.hpp"

using namespace eulerwaves;
using namespace testing_util;

TEST_SUITE("manifold") {

TEST_CASE("metric examples") {
    const auto torus = flat_torus2();
    const Matrix g = torus->metric({1.3, 4.2});
    CHECK(g[0][0] == 1.0);
    CHECK(g[1][1] == 1.0);
    CHECK(g[0][1] == 0.0);

    const auto cm = warped_chart({linear_warp(), -0.3, 0.5, 2.0, "r"});
    const Matrix h = cm->metric({1.0, 0.2, 0.3});
    CHECK(h[0][0] == doctest::Approx(1.0));
    CHECK(h[1][1] == doctest::Approx(1.0));
    CHECK(h[1][2] == doctest::Approx(-0.3));
    CHECK(h[2][1] == doctest::Approx(-0.3));
    CHECK(h[2][2] == doctest::Approx(1.09));

    const auto sph = round_sphere();
    const Matrix k = sph->metric({kPi / 2, 0.4});
    CHECK(k[0][0] == doctest::Approx(1.0));
    CHECK(k[1][1] == doctest::Approx(1.0));
    CHECK(k[0][1] == 0.0);
}

TEST_CASE("metric symmetric and positive definite at random points") {
    std::uint64_t st = 11;
    const std::vector<ManifoldPtr> charts = {flat_torus2(),        unit_disk(), round_sphere(), hyperbolic_disk(),
                                             round_s3(),           flat_torus3(),
                                             warped_chart({linear_warp(), -0.3, 2.0943951023931953, 6.283185307179586, "r"})};
    for (const auto& m : charts) {
        for (int k = 0; k < 1000; ++k) {
            const Point p = random_point(*m, st, 0.02);
            const Matrix g = m->metric(p);
            for (int i = 0; i < m->dim(); ++i)
                for (int j = 0; j < m->dim(); ++j) REQUIRE(g[i][j] == g[j][i]);
            // leading minors
            REQUIRE(g[0][0] > 0.0);
            if (m->dim() >= 2) REQUIRE(g[0][0] * g[1][1] - g[0][1] * g[1][0] > 0.0);
            REQUIRE(m->sqrt_det(p) > 0.0);
        }
    }
}

TEST_CASE("skew gradient examples") {
    const auto t = flat_torus2();
    const Vector a = skew_gradient(*t, [](const Point& p) { return p[1]; }, {0.3, 0.8});
    CHECK(vdiff(a, Vector{1.0, 0.0}) < 1e-12);
    const Point q{0.3, 0.8};
    const Vector b = skew_gradient(*t, [](const Point& p) { return -std::cos(p[1]); }, q);
    CHECK(vdiff(b, Vector{std::sin(0.8), 0.0}) < 1e-9);
    const auto s = round_sphere();
    const Vector c = skew_gradient(*s, [](const Point& p) { return -std::cos(p[0]); }, {1.1, 2.0});
    CHECK(vdiff(c, Vector{0.0, 1.0}) < 1e-9);
}

TEST_CASE("divergence examples") {
    const auto d = unit_disk();
    CHECK(divergence(*d, [](const Point& p) { return Vector{p[0], 0.0}; }, {0.5, 1.0}) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(divergence(*d, [](const Point&) { return Vector{0.0, 1.0}; }, {0.5, 1.0})) < 1e-14);
    const auto s = round_sphere();
    CHECK(std::abs(divergence(*s, [](const Point&) { return Vector{0.0, 1.0}; }, {0.7, 1.0})) < 1e-14);
    std::uint64_t st = 5;
    for (int k = 0; k < 50; ++k) {
        const Point p = random_point(*s, st);
        auto psi = [](const Point& x) { return std::sin(x[0]) * std::cos(2 * x[1]) + std::cos(x[0]); };
        auto u = [&s, psi](const Point& x) { return skew_gradient(*s, psi, x); };
        CHECK(std::abs(divergence(*s, u, p)) < 1e-6);
    }
}

TEST_CASE("curl examples") {
    const auto cm = warped_chart({linear_warp(), -0.3, 0.5, 2.0, "r"});
    const Vector c = curl3(*cm, [](const Point&) { return Vector{0.0, 1.0, 0.0}; }, {1.2, 0.3, 0.4});
    CHECK(vdiff(c, Vector{0.0, 0.0, 2.0}) < 1e-9);

    const auto s3 = round_s3();
    const Vector h = curl3(*s3, [](const Point&) { return Vector{0.0, 1.0, 1.0}; }, {0.6, 0.3, 0.4});
    CHECK(vdiff(h, Vector{0.0, -2.0, -2.0}) < 1e-9);

    const auto t3 = flat_torus3();
    const Vector z = curl3(*t3, [](const Point& p) { return Vector{std::sin(p[2]), 0.0, 0.0}; }, {0.1, 0.2, 0.9});
    CHECK(vdiff(z, Vector{0.0, std::cos(0.9), 0.0}) < 1e-9);
}

TEST_CASE("curl of a gradient vanishes") {
    const auto s3 = round_s3();
    std::uint64_t st = 17;
    auto f = [](const Point& p) { return std::sin(2 * p[0]) * std::cos(p[1] - p[2]) + std::cos(p[0]); };
    for (int k = 0; k < 20; ++k) {
        const Point p = random_point(*s3, st);
        auto grad = [&s3, f](const Point& x) {
            const auto df = gradient(*s3, f, x);
            const Matrix gi = s3->inverse_metric(x);
            Vector v;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) v[i] += gi[i][j] * df[static_cast<std::size_t>(j)];
            return v;
        };
        CHECK(vmax(curl3(*s3, grad, p)) < 1e-6);
    }
}

TEST_CASE("Laplace-Beltrami examples") {
    const auto t = flat_torus2();
    const Point p{0.4, 1.1};
    CHECK(laplace_beltrami(*t, [](const Point& x) { return std::cos(x[0] + 2 * x[1]); }, p) ==
          doctest::Approx(5.0 * std::cos(0.4 + 2.2)).epsilon(1e-8));
    CHECK(std::abs(laplace_beltrami(*t, [](const Point&) { return 3.0; }, p)) < 1e-14);
    const auto s = round_sphere();
    CHECK(laplace_beltrami(*s, [](const Point& x) { return std::cos(x[0]); }, {0.9, 0.2}) ==
          doctest::Approx(2.0 * std::cos(0.9)).epsilon(1e-8));
}

TEST_CASE("Hodge Laplacian on Killing fields") {
    const Vector a = hodge_laplacian_field(*flat_torus2(), [](const Point&) { return Vector{1.0, 0.0}; }, {0.2, 0.3});
    CHECK(vmax(a) < 1e-12);
    const Vector b = hodge_laplacian_field(*round_sphere(), [](const Point&) { return Vector{0.0, 1.0}; }, {0.8, 0.3});
    CHECK(vdiff(b, Vector{0.0, 2.0}) < 1e-7);
    const Vector c = hodge_laplacian_field(*hyperbolic_disk(), [](const Point&) { return Vector{0.0, 1.0}; }, {0.6, 0.3});
    CHECK(vdiff(c, Vector{0.0, -2.0}) < 1e-7);
}

TEST_CASE("Hodge Laplacian of a skew gradient is the skew gradient of the Laplacian") {
    const auto s = round_sphere();
    std::uint64_t st = 23;
    auto psi = [](const Point& x) { return std::sin(x[0]) * std::sin(x[0]) * std::cos(2 * x[1]) + std::cos(x[0]); };
    for (int k = 0; k < 20; ++k) {
        const Point p = random_point(*s, st);
        auto u = [&s, psi](const Point& x) { return skew_gradient(*s, psi, x); };
        auto lap = [&s, psi](const Point& x) { return laplace_beltrami(*s, psi, x); };
        const Vector a = hodge_laplacian_field(*s, u, p);
        const Vector b = skew_gradient(*s, lap, p);
        CHECK(norm(*s, p, a - b) <= 1e-5 * std::max(1.0, norm(*s, p, b)));
    }
}

TEST_CASE("Lie bracket examples and identities") {
    const auto t = flat_torus2();
    const Vector a = lie_bracket(
        *t, [](const Point&) { return Vector{1.0, 0.0}; }, [](const Point& p) { return Vector{0.0, std::sin(p[0])}; },
        {0.7, 0.1});
    CHECK(vdiff(a, Vector{0.0, std::cos(0.7)}) < 1e-9);

    const auto cm = warped_chart({linear_warp(), -0.3, 0.5, 2.0, "r"});
    const Vector b = lie_bracket(
        *cm, [](const Point&) { return Vector{0.0, 1.0, 0.0}; }, [](const Point&) { return Vector{0.0, 0.0, 1.0}; },
        {1.0, 0.2, 0.2});
    CHECK(vmax(b) < 1e-14);

    const auto rs = rossby_sphere(1, 2);
    const auto& m = *rs.manifold;
    std::uint64_t st = 31;
    auto v = rs.eigen.v.at(0.0), w = rs.eigen.w.at(0.0), u0 = rs.u0.at(0.0);
    for (int k = 0; k < 20; ++k) {
        const Point p = random_point(m, st);
        CHECK(norm(m, p, lie_bracket(m, u0, v, p) + w(p)) < 1e-8);
        CHECK(norm(m, p, lie_bracket(m, u0, w, p) - v(p)) < 1e-8);
        const Vector vw = lie_bracket(m, v, w, p), wv = lie_bracket(m, w, v, p);
        CHECK(norm(m, p, vw + wv) <= 1e-8 * std::max(1.0, norm(m, p, vw)));
    }
}

TEST_CASE("Jacobi identity for catalogue fields") {
    const auto rs = rossby_sphere(1, 2);
    const auto& m = *rs.manifold;
    auto v = rs.eigen.v.at(0.0), w = rs.eigen.w.at(0.0), u0 = rs.u0.at(0.0);
    auto br = [&m](VectorFieldFn a, VectorFieldFn b) {
        return VectorFieldFn([&m, a, b](const Point& p) { return lie_bracket(m, a, b, p); });
    };
    std::uint64_t st = 37;
    for (int k = 0; k < 10; ++k) {
        const Point p = random_point(m, st);
        const Vector j1 = lie_bracket(m, u0, br(v, w), p);
        const Vector j2 = lie_bracket(m, v, br(w, u0), p);
        const Vector j3 = lie_bracket(m, w, br(u0, v), p);
        const double scale = std::max({norm(m, p, j1), norm(m, p, j2), norm(m, p, j3), 1.0});
        CHECK(norm(m, p, j1 + j2 + j3) <= 1e-6 * scale);
    }
}

TEST_CASE("bracket of skew gradients is the skew gradient of the Poisson bracket") {
    for (const auto& m : {round_sphere(), hyperbolic_disk(), unit_disk()}) {
        auto a = [](const Point& x) { return std::sin(x[0]) * std::cos(x[1]); };
        auto b = [](const Point& x) { return std::cos(2 * x[0]) + std::sin(x[0]) * std::sin(2 * x[1]); };
        auto ua = [&m, a](const Point& x) { return skew_gradient(*m, a, x); };
        auto ub = [&m, b](const Point& x) { return skew_gradient(*m, b, x); };
        auto pb = [&m, a, b](const Point& x) { return poisson_bracket(*m, a, b, x); };
        std::uint64_t st = 41;
        for (int k = 0; k < 20; ++k) {
            const Point p = random_point(*m, st);
            const Vector lhs = lie_bracket(*m, ua, ub, p);
            const Vector rhs = skew_gradient(*m, pb, p);
            CHECK(norm(*m, p, lhs - rhs) <= 1e-5 * std::max(1.0, norm(*m, p, rhs)));
        }
    }
}

TEST_CASE("cross product") {
    const auto t3 = flat_torus3();
    const Point p{0.1, 0.2, 0.3};
    CHECK(vdiff(cross_product(*t3, p, {1, 0, 0}, {0, 1, 0}), Vector{0, 0, 1}) < 1e-15);
    CHECK(vmax(cross_product(*t3, p, {0.3, -1, 2}, {0.3, -1, 2})) < 1e-15);

    // Orthonormal frame on the round three-sphere in toroidal coordinates.
    const auto s3 = round_s3();
    const Point q{0.6, 0.4, 1.3};
    const double c = std::cos(q[0]), s = std::sin(q[0]);
    const Vector e1{1.0, 0.0, 0.0};
    const Vector e2{0.0, s / c, -c / s};
    const Vector e3{0.0, 1.0, 1.0};
    CHECK(inner(*s3, q, e2, e2) == doctest::Approx(1.0));
    CHECK(std::abs(inner(*s3, q, e2, e3)) < 1e-14);
    CHECK(vdiff(cross_product(*s3, q, e1, e2), e3) < 1e-12);
}

TEST_CASE("stencil errors near non-periodic edges") {
    const auto d = unit_disk();
    CHECK_THROWS_AS(divergence(*d, [](const Point&) { return Vector{0.0, 1.0}; }, {0.999, 1.0}), StencilError);
    // periodic coordinates wrap
    CHECK_NOTHROW(divergence(*d, [](const Point&) { return Vector{0.0, 1.0}; }, {0.5, 2.0 * kPi - 1e-6}));
    CHECK_THROWS_AS(d->require_regular({0.01, 1.0}, "test"), DomainError);
    CHECK_THROWS_AS(d->require_regular({1.5, 1.0}, "test"), DomainError);
}

TEST_CASE("time-dependent bracket requires frozen fields") {
    const auto t = flat_torus2();
    TimeVaryingField a;
    a.eval = [](double tt, const Point&) { return Vector{tt, 0.0}; };
    a.dt_eval = [](double, const Point&) { return Vector{1.0, 0.0}; };
    TimeVaryingField b = a;
    CHECK_THROWS_AS(lie_bracket(*t, a, b, {0.1, 0.1}), ContractError);
    a.time_independent = b.time_independent = true;
    CHECK_NOTHROW(lie_bracket(*t, a, b, {0.1, 0.1}));
}

TEST_CASE("time derivatives agree with finite differences") {
    for (const auto& s : {kelvin_torus(1, 2), rossby_sphere(1, 2), rossby_s3(1, 0, 0, -1)}) {
        const auto U = s.real();
        const auto& m = *s.manifold;
        std::uint64_t st = 43;
        for (int k = 0; k < 20; ++k) {
            const Point p = random_point(m, st);
            const double t = 3.0 * uniform01(st), h = 1e-4;
            const Vector fd = (U.eval(t + h, p) - U.eval(t - h, p)) * (0.5 / h);
            CHECK(vdiff(fd, U.dt_eval(t, p)) < 1e-6);
        }
    }
}

TEST_CASE("quadrature examples") {
    const auto t = flat_torus2();
    auto u = [](const Point& p) { return Vector{std::sin(p[1]), 0.0}; };
    CHECK(inner_product_quadrature(*t, u, u).value == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-13));
    auto a = [](const Point& p) { return Vector{std::sin(p[0]), std::cos(2 * p[1])}; };
    auto b = [](const Point& p) { return Vector{std::sin(2 * p[0]), std::cos(p[1])}; };
    CHECK(std::abs(inner_product_quadrature(*t, a, b).value) < 1e-13);
    const auto s = round_sphere();
    auto r = [](const Point&) { return Vector{0.0, 1.0}; };
    const auto q = inner_product_quadrature(*s, r, r);
    CHECK(q.value == doctest::Approx(8.0 * kPi / 3.0).epsilon(1e-13));
    CHECK_FALSE(q.coarse);
    std::vector<double> x, w;
    gauss_legendre(5, x, w);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * std::pow(x[i], 8);
    CHECK(sum == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
}

}  // TEST_SUITE
