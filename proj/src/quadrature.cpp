#include "eulerwaves/quadrature.hpp"

#include <cmath>
#include <limits>

#include "eulerwaves/parallel.hpp"

namespace eulerwaves {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw ArgumentError("gauss_legendre: need at least one node");
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

QuadratureGrid build_quadrature(const ChartedManifold& m, const QuadratureOptions& opts) {
    std::vector<std::vector<double>> xs(static_cast<std::size_t>(m.dim()));
    std::vector<std::vector<double>> ws(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
        const auto& r = m.range(i);
        auto& x = xs[static_cast<std::size_t>(i)];
        auto& w = ws[static_cast<std::size_t>(i)];
        if (m.periodic(i)) {
            const int n = opts.periodic_nodes;
            for (int k = 0; k < n; ++k) {
                x.push_back(r.lo + r.width() * k / n);
                w.push_back(r.width() / n);
            }
        } else {
            std::vector<double> gx, gw;
            gauss_legendre(opts.gauss_nodes, gx, gw);
            for (std::size_t k = 0; k < gx.size(); ++k) {
                x.push_back(r.lo + 0.5 * r.width() * (gx[k] + 1.0));
                w.push_back(0.5 * r.width() * gw[k]);
            }
        }
    }
    QuadratureGrid grid;
    std::array<std::size_t, kMaxDim> idx{};
    const int d = m.dim();
    for (;;) {
        Point p;
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            p[i] = xs[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
            w *= ws[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
        }
        grid.nodes.push_back(p);
        grid.weights.push_back(w * m.sqrt_det(p));
        int i = d - 1;
        while (i >= 0) {
            auto& k = idx[static_cast<std::size_t>(i)];
            if (++k < xs[static_cast<std::size_t>(i)].size()) break;
            k = 0;
            --i;
        }
        if (i < 0) break;
    }
    return grid;
}

double stable_sum(const std::vector<double>& values) {
    double sum = 0.0, comp = 0.0;
    for (const double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double integrate(const ChartedManifold& m, const ScalarFieldFn& f, const QuadratureOptions& opts) {
    const auto grid = build_quadrature(m, opts);
    std::vector<double> terms(grid.nodes.size());
    parallel_for(terms.size(), [&](std::size_t i) { terms[i] = grid.weights[i] * f(grid.nodes[i]); });
    return stable_sum(terms);
}

QuadratureResult inner_product_quadrature(const ChartedManifold& m, const VectorFieldFn& x, const VectorFieldFn& y,
                                          const QuadratureOptions& opts) {
    auto integrand = [&](const Point& p) { return inner(m, p, x(p), y(p)); };
    QuadratureResult r;
    r.value = integrate(m, integrand, opts);
    QuadratureOptions fine = opts;
    fine.periodic_nodes *= 2;
    fine.gauss_nodes *= 2;
    r.refined = integrate(m, integrand, fine);
    const double scale = std::max(std::abs(r.refined), std::numeric_limits<double>::min());
    r.disagreement = std::abs(r.value - r.refined) / scale;
    r.coarse = r.disagreement > 1e-10 && std::abs(r.value - r.refined) > 1e-14;
    return r;
}

}  // namespace eulerwaves
