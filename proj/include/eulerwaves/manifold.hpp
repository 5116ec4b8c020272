#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eulerwaves/errors.hpp"
#include "eulerwaves/types.hpp"

namespace eulerwaves {

struct CoordinateRange {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

/// Boundary piece `x[coord] == value`; `outward` is +1 when the outward normal points along +coord.
struct BoundaryComponent {
    int coord = 0;
    double value = 0.0;
    int outward = 1;
};

/// Coordinate singularity `x[coord] == value` (pole, axis, edge of a torus chart).
struct SingularLocus {
    int coord = 0;
    double value = 0.0;
};

using MetricFn = std::function<Matrix(const Point&)>;
using ScalarFieldFn = std::function<double(const Point&)>;
using VectorFieldFn = std::function<Vector(const Point&)>;

/// Finite-difference configuration. Step along coordinate i is
/// step_factor * width_i / (2 pi).
struct DiffScheme {
    double step_factor = 1e-2;
};

class ChartedManifold {
public:
    struct Spec {
        std::string name;
        int dim = 2;
        std::vector<std::string> coord_names;
        std::vector<CoordinateRange> ranges;
        std::vector<bool> periodic;
        MetricFn metric;
        int orientation_sign = 1;
        std::vector<BoundaryComponent> boundary;
        std::vector<SingularLocus> singular;
        double singular_margin = 5e-2;
    };

    explicit ChartedManifold(Spec spec);

    const std::string& name() const { return spec_.name; }
    int dim() const { return spec_.dim; }
    const std::vector<std::string>& coord_names() const { return spec_.coord_names; }
    const CoordinateRange& range(int i) const { return spec_.ranges[static_cast<std::size_t>(i)]; }
    bool periodic(int i) const { return spec_.periodic[static_cast<std::size_t>(i)]; }
    int orientation_sign() const { return spec_.orientation_sign; }
    const std::vector<BoundaryComponent>& boundary() const { return spec_.boundary; }
    const std::vector<SingularLocus>& singular() const { return spec_.singular; }
    double singular_margin() const { return spec_.singular_margin; }

    /// Periodic coordinates reduced into [lo, hi).
    Point wrap(const Point& p) const;
    bool in_range(const Point& p) const;
    /// Smallest distance to a singular locus along its coordinate (infinity if none).
    double singular_distance(const Point& p) const;
    /// Throws DomainError if p is out of range or within the singular margin.
    void require_regular(const Point& p, const char* what) const;

    /// Unchecked metric, inverse and sqrt(det g).
    Matrix metric(const Point& p) const { return spec_.metric(p); }
    Matrix inverse_metric(const Point& p) const;
    double sqrt_det(const Point& p) const;

    double step(int i, const DiffScheme& scheme) const;
    /// Stencil node check: wraps periodic coordinates, throws StencilError if a
    /// non-periodic coordinate falls outside its range.
    Point stencil_node(const Point& q, int i) const;

private:
    Spec spec_;
};

using ManifoldPtr = std::shared_ptr<const ChartedManifold>;

/// Fourth-order central first derivative of f along coordinate i.
template <class F>
auto partial(const ChartedManifold& m, const F& f, const Point& p, int i, double h) {
    auto node = [&](double k) {
        Point q = p;
        q[i] += k * h;
        return f(m.stencil_node(q, i));
    };
    auto a = node(-2.0);
    auto b = node(-1.0);
    auto c = node(1.0);
    auto d = node(2.0);
    return (a - 8.0 * b + 8.0 * c - d) * (1.0 / (12.0 * h));
}

/// Smooth vector field, possibly time dependent. `dt_eval` is the analytic time derivative.
struct TimeVaryingField {
    std::function<Vector(double, const Point&)> eval;
    std::function<Vector(double, const Point&)> dt_eval;
    std::string label;
    bool time_independent = false;

    Vector operator()(double t, const Point& p) const { return eval(t, p); }
    VectorFieldFn at(double t) const {
        auto e = eval;
        return [e, t](const Point& p) { return e(t, p); };
    }
};

/// Stream function psi(t, x) for two-dimensional fields.
struct StreamFunction {
    std::function<double(double, const Point&)> eval;
    std::function<double(double, const Point&)> dt_eval;
    std::string label;

    double operator()(double t, const Point& p) const { return eval(t, p); }
    ScalarFieldFn at(double t) const {
        auto e = eval;
        return [e, t](const Point& p) { return e(t, p); };
    }
};

// Pointwise geometry.

Matrix metric_eval(const ChartedManifold& m, const Point& p);
double inner(const ChartedManifold& m, const Point& p, const Vector& u, const Vector& v);
double norm(const ChartedManifold& m, const Point& p, const Vector& u);
/// Lower an index with the metric.
Vector lower(const ChartedManifold& m, const Point& p, const Vector& u);

/// Skew gradient from analytic partials of psi: v^i = s eps^{ij} d_j psi / sqrt(g).
Vector skew_gradient_of(const ChartedManifold& m, const Point& p, const std::array<double, kMaxDim>& dpsi);
Vector skew_gradient(const ChartedManifold& m, const ScalarFieldFn& psi, const Point& p, const DiffScheme& s = {});

/// Poisson bracket {a, b} = (skew gradient of a) applied to b.
double poisson_bracket(const ChartedManifold& m, const ScalarFieldFn& a, const ScalarFieldFn& b, const Point& p,
                       const DiffScheme& s = {});

std::array<double, kMaxDim> gradient(const ChartedManifold& m, const ScalarFieldFn& f, const Point& p,
                                     const DiffScheme& s = {});
/// Row j holds d_j X (all components).
std::array<Vector, kMaxDim> jacobian(const ChartedManifold& m, const VectorFieldFn& x, const Point& p,
                                     const DiffScheme& s = {});

double divergence(const ChartedManifold& m, const VectorFieldFn& x, const Point& p, const DiffScheme& s = {});
/// Positive Laplace-Beltrami operator -(1/sqrt g) d_i (sqrt g g^{ij} d_j f).
double laplace_beltrami(const ChartedManifold& m, const ScalarFieldFn& f, const Point& p, const DiffScheme& s = {});
/// Two-dimensional vorticity s (d_1 u_2 - d_2 u_1) / sqrt(g); equals the Laplacian of psi for u = skew gradient of psi.
double scalar_vorticity(const ChartedManifold& m, const VectorFieldFn& u, const Point& p, const DiffScheme& s = {});
/// Hodge Laplacian of a divergence-free 2D field, as the skew gradient of its vorticity.
Vector hodge_laplacian_field(const ChartedManifold& m, const VectorFieldFn& u, const Point& p,
                             const DiffScheme& s = {});
Vector curl3(const ChartedManifold& m, const VectorFieldFn& u, const Point& p, const DiffScheme& s = {});
/// [X, Y]^i = X^j d_j Y^i - Y^j d_j X^i.
Vector lie_bracket(const ChartedManifold& m, const VectorFieldFn& x, const VectorFieldFn& y, const Point& p,
                   const DiffScheme& s = {});
/// Same operation on time-varying inputs; both must be flagged time independent.
Vector lie_bracket(const ChartedManifold& m, const TimeVaryingField& x, const TimeVaryingField& y, const Point& p,
                   const DiffScheme& s = {});
Vector cross_product(const ChartedManifold& m, const Point& p, const Vector& u, const Vector& v);

}  // namespace eulerwaves
