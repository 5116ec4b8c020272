#pragma once

#include <cmath>
#include <cstdint>

#include "eulerwaves/manifold.hpp"
#include "eulerwaves/verification.hpp"

namespace testing_util {

using namespace eulerwaves;

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline double vdiff(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (int i = 0; i < kMaxDim; ++i) s = std::max(s, std::abs(a[i] - b[i]));
    return s;
}

inline double vmax(const Vector& a) {
    double s = 0.0;
    for (int i = 0; i < kMaxDim; ++i) s = std::max(s, std::abs(a[i]));
    return s;
}

/// Random point inside the sampling box of a chart (away from singular loci and boundaries).
inline Point random_point(const ChartedManifold& m, std::uint64_t& state, double pad = 0.1) {
    Point p;
    for (int i = 0; i < m.dim(); ++i) {
        const auto& r = m.range(i);
        double lo = r.lo, hi = r.hi;
        if (!m.periodic(i)) {
            lo += pad * r.width();
            hi -= pad * r.width();
        }
        p[i] = lo + (hi - lo) * uniform01(state);
    }
    return p;
}

}  // namespace testing_util
