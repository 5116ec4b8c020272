#include "eulerwaves/ode.hpp"

namespace eulerwaves {

QuinticHermite::QuinticHermite(std::vector<double> x, std::vector<double> y, std::vector<double> dy,
                               std::vector<double> d2y)
    : x_(std::move(x)), y_(std::move(y)), dy_(std::move(dy)), d2y_(std::move(d2y)) {
    if (x_.size() < 2 || y_.size() != x_.size() || dy_.size() != x_.size() || d2y_.size() != x_.size())
        throw ArgumentError("QuinticHermite: inconsistent node data");
}

std::array<double, 3> QuinticHermite::eval(double r) const {
    r = std::clamp(r, x_.front(), x_.back());
    auto it = std::upper_bound(x_.begin(), x_.end(), r);
    std::size_t k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - x_.begin()) - 1));
    if (k >= x_.size() - 1) k = x_.size() - 2;
    const double h = x_[k + 1] - x_[k];
    const double s = (r - x_[k]) / h;
    // Basis polynomials on [0, 1] and their derivatives in s.
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
    const double h00 = 1 - 10 * s3 + 15 * s4 - 6 * s5;
    const double h10 = s - 6 * s3 + 8 * s4 - 3 * s5;
    const double h20 = 0.5 * (s2 - 3 * s3 + 3 * s4 - s5);
    const double h01 = 10 * s3 - 15 * s4 + 6 * s5;
    const double h11 = -4 * s3 + 7 * s4 - 3 * s5;
    const double h21 = 0.5 * (s3 - 2 * s4 + s5);
    const double d00 = -30 * s2 + 60 * s3 - 30 * s4;
    const double d10 = 1 - 18 * s2 + 32 * s3 - 15 * s4;
    const double d20 = 0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4);
    const double d01 = -d00;
    const double d11 = -12 * s2 + 28 * s3 - 15 * s4;
    const double d21 = 0.5 * (3 * s2 - 8 * s3 + 5 * s4);
    const double q00 = -60 * s + 180 * s2 - 120 * s3;
    const double q10 = -36 * s + 96 * s2 - 60 * s3;
    const double q20 = 0.5 * (2 - 18 * s + 36 * s2 - 20 * s3);
    const double q01 = -q00;
    const double q11 = -24 * s + 84 * s2 - 60 * s3;
    const double q21 = 0.5 * (6 * s - 24 * s2 + 20 * s3);
    const double y0 = y_[k], y1 = y_[k + 1];
    const double p0 = dy_[k] * h, p1 = dy_[k + 1] * h;
    const double a0 = d2y_[k] * h * h, a1 = d2y_[k + 1] * h * h;
    const double v = h00 * y0 + h10 * p0 + h20 * a0 + h01 * y1 + h11 * p1 + h21 * a1;
    const double dv = (d00 * y0 + d10 * p0 + d20 * a0 + d01 * y1 + d11 * p1 + d21 * a1) / h;
    const double d2v = (q00 * y0 + q10 * p0 + q20 * a0 + q01 * y1 + q11 * p1 + q21 * a1) / (h * h);
    return {v, dv, d2v};
}

}  // namespace eulerwaves
