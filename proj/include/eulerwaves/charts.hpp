#pragma once

#include <array>
#include <functional>
#include <string>

#include "eulerwaves/manifold.hpp"

namespace eulerwaves {

/// Flat torus (x, y) in [0, 2pi)^2.
ManifoldPtr flat_torus2();
/// Flat torus (x, y, z) in [0, 2pi)^3.
ManifoldPtr flat_torus3();
/// Flat unit disk in polar coordinates (r, theta), boundary r = 1.
ManifoldPtr unit_disk();
/// Round unit sphere in colatitude/longitude (phi, theta).
ManifoldPtr round_sphere();
/// Hyperbolic disk of curvature -1 in geodesic polar coordinates (r, theta), boundary r = r_max.
ManifoldPtr hyperbolic_disk(double r_max = 1.0);
/// Round unit three-sphere in toroidal coordinates (chi, theta, phi), chi in [0, pi/2].
ManifoldPtr round_s3();

/// Radial warping function phi(r) with its first two derivatives.
using WarpFn = std::function<std::array<double, 3>(double)>;

/// Profile of the twisted warped metric
/// dr^2 + phi^2 dtheta^2 + 2c dtheta dz + (c^2/phi^2 + phi'^2) dz^2 on [a, b] x T^2.
struct WarpedProfile {
    WarpFn phi;
    double c = 0.0;
    double a = 0.0;
    double b = 1.0;
    std::string label = "phi";
};

/// The warped chart (r, theta, z). When a == 0 the inner edge is treated as an axis
/// (singular locus) instead of a boundary component.
ManifoldPtr warped_chart(const WarpedProfile& profile);

/// phi(r) = r.
WarpFn linear_warp();

/// Tangent vector chart components on the round S^3 pushed forward to R^4.
std::array<double, 4> s3_pushforward(const Point& p, const Vector& v);
/// Embedding of the toroidal chart of S^3 into R^4.
std::array<double, 4> s3_embed(const Point& p);
/// Inverse of s3_embed for a point on the unit sphere.
Point s3_chart_of(const std::array<double, 4>& x);

}  // namespace eulerwaves
