#pragma once

#include <vector>

#include "eulerwaves/manifold.hpp"

namespace eulerwaves {

struct QuadratureOptions {
    int periodic_nodes = 64;  ///< trapezoid nodes per periodic coordinate
    int gauss_nodes = 32;     ///< Gauss-Legendre nodes per bounded coordinate
};

/// Tensor-product rule with weights that already include sqrt(det g).
struct QuadratureGrid {
    std::vector<Point> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

QuadratureGrid build_quadrature(const ChartedManifold& m, const QuadratureOptions& opts = {});

/// Compensated sequential sum; fixed order, so reductions are reproducible.
double stable_sum(const std::vector<double>& values);

/// Integral of f against the Riemannian volume.
double integrate(const ChartedManifold& m, const ScalarFieldFn& f, const QuadratureOptions& opts = {});

struct QuadratureResult {
    double value = 0.0;
    double refined = 0.0;
    double disagreement = 0.0;  ///< |value - refined| / max(|refined|, tiny)
    bool coarse = false;        ///< disagreement above 1e-10
};

/// L^2 inner product of two vector fields, with a refinement pass at doubled nodes.
QuadratureResult inner_product_quadrature(const ChartedManifold& m, const VectorFieldFn& x, const VectorFieldFn& y,
                                          const QuadratureOptions& opts = {});

}  // namespace eulerwaves
