#include "eulerwaves/charts.hpp"

#include <cmath>

namespace eulerwaves {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

Matrix diag(double a, double b, double c = 0.0) {
    Matrix g{};
    g[0][0] = a;
    g[1][1] = b;
    g[2][2] = c;
    return g;
}

}  // namespace

ManifoldPtr flat_torus2() {
    ChartedManifold::Spec s;
    s.name = "flat-torus-2";
    s.dim = 2;
    s.coord_names = {"x", "y"};
    s.ranges = {{0.0, kTwoPi}, {0.0, kTwoPi}};
    s.periodic = {true, true};
    s.metric = [](const Point&) { return diag(1.0, 1.0); };
    return std::make_shared<ChartedManifold>(std::move(s));
}

ManifoldPtr flat_torus3() {
    ChartedManifold::Spec s;
    s.name = "flat-torus-3";
    s.dim = 3;
    s.coord_names = {"x", "y", "z"};
    s.ranges = {{0.0, kTwoPi}, {0.0, kTwoPi}, {0.0, kTwoPi}};
    s.periodic = {true, true, true};
    s.metric = [](const Point&) { return diag(1.0, 1.0, 1.0); };
    return std::make_shared<ChartedManifold>(std::move(s));
}

ManifoldPtr unit_disk() {
    ChartedManifold::Spec s;
    s.name = "unit-disk";
    s.dim = 2;
    s.coord_names = {"r", "theta"};
    s.ranges = {{0.0, 1.0}, {0.0, kTwoPi}};
    s.periodic = {false, true};
    s.metric = [](const Point& p) { return diag(1.0, p[0] * p[0]); };
    s.boundary = {{0, 1.0, 1}};
    s.singular = {{0, 0.0}};
    return std::make_shared<ChartedManifold>(std::move(s));
}

ManifoldPtr round_sphere() {
    ChartedManifold::Spec s;
    s.name = "round-sphere";
    s.dim = 2;
    s.coord_names = {"phi", "theta"};
    s.ranges = {{0.0, kPi}, {0.0, kTwoPi}};
    s.periodic = {false, true};
    s.metric = [](const Point& p) {
        const double sp = std::sin(p[0]);
        return diag(1.0, sp * sp);
    };
    // (phi, theta) is negatively oriented w.r.t. the outward normal.
    s.orientation_sign = -1;
    s.singular = {{0, 0.0}, {0, kPi}};
    return std::make_shared<ChartedManifold>(std::move(s));
}

ManifoldPtr hyperbolic_disk(double r_max) {
    if (!(r_max > 0.0)) throw ArgumentError("hyperbolic_disk: r_max must be positive");
    ChartedManifold::Spec s;
    s.name = "hyperbolic-disk";
    s.dim = 2;
    s.coord_names = {"r", "theta"};
    s.ranges = {{0.0, r_max}, {0.0, kTwoPi}};
    s.periodic = {false, true};
    s.metric = [](const Point& p) {
        const double sh = std::sinh(p[0]);
        return diag(1.0, sh * sh);
    };
    s.boundary = {{0, r_max, 1}};
    s.singular = {{0, 0.0}};
    return std::make_shared<ChartedManifold>(std::move(s));
}

ManifoldPtr round_s3() {
    ChartedManifold::Spec s;
    s.name = "round-s3";
    s.dim = 3;
    s.coord_names = {"chi", "theta", "phi"};
    s.ranges = {{0.0, kPi / 2.0}, {0.0, kTwoPi}, {0.0, kTwoPi}};
    s.periodic = {false, true, true};
    s.metric = [](const Point& p) {
        const double c = std::cos(p[0]);
        const double sn = std::sin(p[0]);
        return diag(1.0, c * c, sn * sn);
    };
    s.singular = {{0, 0.0}, {0, kPi / 2.0}};
    return std::make_shared<ChartedManifold>(std::move(s));
}

WarpFn linear_warp() {
    return [](double r) { return std::array<double, 3>{r, 1.0, 0.0}; };
}

ManifoldPtr warped_chart(const WarpedProfile& profile) {
    if (!(profile.b > profile.a) || profile.a < 0.0) throw ArgumentError("warped_chart: need 0 <= a < b");
    ChartedManifold::Spec s;
    s.name = "warped-" + profile.label;
    s.dim = 3;
    s.coord_names = {"r", "theta", "z"};
    s.ranges = {{profile.a, profile.b}, {0.0, kTwoPi}, {0.0, kTwoPi}};
    s.periodic = {false, true, true};
    const WarpFn phi = profile.phi;
    const double c = profile.c;
    s.metric = [phi, c](const Point& p) {
        const auto f = phi(p[0]);
        Matrix g{};
        g[0][0] = 1.0;
        g[1][1] = f[0] * f[0];
        g[1][2] = g[2][1] = c;
        g[2][2] = c * c / (f[0] * f[0]) + f[1] * f[1];
        return g;
    };
    if (profile.a == 0.0) {
        s.singular = {{0, 0.0}};
    } else {
        s.boundary.push_back({0, profile.a, -1});
    }
    s.boundary.push_back({0, profile.b, 1});
    return std::make_shared<ChartedManifold>(std::move(s));
}

std::array<double, 4> s3_embed(const Point& p) {
    const double c = std::cos(p[0]);
    const double sn = std::sin(p[0]);
    return {c * std::cos(p[1]), c * std::sin(p[1]), sn * std::cos(p[2]), sn * std::sin(p[2])};
}

std::array<double, 4> s3_pushforward(const Point& p, const Vector& v) {
    const double c = std::cos(p[0]);
    const double sn = std::sin(p[0]);
    const double ct = std::cos(p[1]), st = std::sin(p[1]);
    const double cp = std::cos(p[2]), sp = std::sin(p[2]);
    return {-sn * ct * v[0] - c * st * v[1], -sn * st * v[0] + c * ct * v[1], c * cp * v[0] - sn * sp * v[2],
            c * sp * v[0] + sn * cp * v[2]};
}

Point s3_chart_of(const std::array<double, 4>& x) {
    const double rho1 = std::hypot(x[0], x[1]);
    const double rho2 = std::hypot(x[2], x[3]);
    Point p;
    p[0] = std::atan2(rho2, rho1);
    p[1] = std::atan2(x[1], x[0]);
    p[2] = std::atan2(x[3], x[2]);
    if (p[1] < 0) p[1] += kTwoPi;
    if (p[2] < 0) p[2] += kTwoPi;
    return p;
}

}  // namespace eulerwaves
