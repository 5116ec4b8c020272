#include "eulerwaves/manifold.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace eulerwaves {

namespace {

double det3(const Matrix& g, int dim) {
    if (dim == 2) return g[0][0] * g[1][1] - g[0][1] * g[1][0];
    return g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
           g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
}

std::string describe_point(const ChartedManifold& m, const Point& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (int i = 0; i < m.dim(); ++i) os << (i ? ", " : "") << m.coord_names()[static_cast<std::size_t>(i)] << "=" << p[i];
    os << ")";
    return os.str();
}

// Levi-Civita symbol on {0,1,2}.
int levi(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((i + 1) % 3 == j) ? 1 : -1;
}

}  // namespace

ChartedManifold::ChartedManifold(Spec spec) : spec_(std::move(spec)) {
    const auto d = static_cast<std::size_t>(spec_.dim);
    if (spec_.dim < 2 || spec_.dim > kMaxDim || spec_.coord_names.size() != d || spec_.ranges.size() != d ||
        spec_.periodic.size() != d || !spec_.metric)
        throw ArgumentError("malformed chart specification for " + spec_.name);
    if (spec_.orientation_sign != 1 && spec_.orientation_sign != -1)
        throw ArgumentError("orientation sign must be +1 or -1");
}

Point ChartedManifold::wrap(const Point& p) const {
    Point q = p;
    for (int i = 0; i < dim(); ++i) {
        if (!periodic(i)) continue;
        const auto& r = range(i);
        double v = std::fmod(q[i] - r.lo, r.width());
        if (v < 0) v += r.width();
        q[i] = r.lo + v;
    }
    return q;
}

bool ChartedManifold::in_range(const Point& p) const {
    for (int i = 0; i < dim(); ++i) {
        if (periodic(i)) continue;
        if (!(p[i] >= range(i).lo && p[i] <= range(i).hi)) return false;
    }
    return true;
}

double ChartedManifold::singular_distance(const Point& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : spec_.singular) best = std::min(best, std::abs(p[s.coord] - s.value));
    return best;
}

void ChartedManifold::require_regular(const Point& p, const char* what) const {
    if (!in_range(p)) throw DomainError(std::string(what) + ": point " + describe_point(*this, p) + " outside chart " + name());
    if (singular_distance(p) < singular_margin())
        throw DomainError(std::string(what) + ": point " + describe_point(*this, p) + " within singular margin of chart " +
                          name());
}

Matrix ChartedManifold::inverse_metric(const Point& p) const {
    const Matrix g = metric(p);
    Matrix inv{};
    const double det = det3(g, dim());
    if (dim() == 2) {
        inv[0][0] = g[1][1] / det;
        inv[1][1] = g[0][0] / det;
        inv[0][1] = inv[1][0] = -g[0][1] / det;
        return inv;
    }
    inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
    inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
    inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
    inv[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
    inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
    inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
    inv[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
    inv[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
    inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
    return inv;
}

double ChartedManifold::sqrt_det(const Point& p) const { return std::sqrt(det3(metric(p), dim())); }

double ChartedManifold::step(int i, const DiffScheme& scheme) const {
    return scheme.step_factor * range(i).width() / (2.0 * kPi);
}

Point ChartedManifold::stencil_node(const Point& q, int i) const {
    if (periodic(i)) return wrap(q);
    if (q[i] < range(i).lo || q[i] > range(i).hi)
        throw StencilError("stencil node " + describe_point(*this, q) + " leaves the range of coordinate " +
                           coord_names()[static_cast<std::size_t>(i)]);
    return q;
}

Matrix metric_eval(const ChartedManifold& m, const Point& p) {
    m.require_regular(p, "metric_eval");
    return m.metric(p);
}

double inner(const ChartedManifold& m, const Point& p, const Vector& u, const Vector& v) {
    const Matrix g = m.metric(p);
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += g[i][j] * u[i] * v[j];
    return s;
}

double norm(const ChartedManifold& m, const Point& p, const Vector& u) {
    return std::sqrt(std::max(0.0, inner(m, p, u, u)));
}

Vector lower(const ChartedManifold& m, const Point& p, const Vector& u) {
    const Matrix g = m.metric(p);
    Vector out;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out[i] += g[i][j] * u[j];
    return out;
}

Vector skew_gradient_of(const ChartedManifold& m, const Point& p, const std::array<double, kMaxDim>& dpsi) {
    if (m.dim() != 2) throw DimensionError("skew_gradient requires a two-dimensional chart");
    const double f = m.orientation_sign() / m.sqrt_det(p);
    return {f * dpsi[1], -f * dpsi[0]};
}

std::array<double, kMaxDim> gradient(const ChartedManifold& m, const ScalarFieldFn& f, const Point& p,
                                     const DiffScheme& s) {
    std::array<double, kMaxDim> g{};
    for (int i = 0; i < m.dim(); ++i) g[static_cast<std::size_t>(i)] = partial(m, f, p, i, m.step(i, s));
    return g;
}

std::array<Vector, kMaxDim> jacobian(const ChartedManifold& m, const VectorFieldFn& x, const Point& p,
                                     const DiffScheme& s) {
    std::array<Vector, kMaxDim> jac{};
    for (int i = 0; i < m.dim(); ++i) jac[static_cast<std::size_t>(i)] = partial(m, x, p, i, m.step(i, s));
    return jac;
}

Vector skew_gradient(const ChartedManifold& m, const ScalarFieldFn& psi, const Point& p, const DiffScheme& s) {
    if (m.dim() != 2) throw DimensionError("skew_gradient requires a two-dimensional chart");
    return skew_gradient_of(m, p, gradient(m, psi, p, s));
}

double poisson_bracket(const ChartedManifold& m, const ScalarFieldFn& a, const ScalarFieldFn& b, const Point& p,
                       const DiffScheme& s) {
    if (m.dim() != 2) throw DimensionError("poisson_bracket requires a two-dimensional chart");
    const auto da = gradient(m, a, p, s);
    const auto db = gradient(m, b, p, s);
    return m.orientation_sign() * (da[1] * db[0] - da[0] * db[1]) / m.sqrt_det(p);
}

double divergence(const ChartedManifold& m, const VectorFieldFn& x, const Point& p, const DiffScheme& s) {
    double acc = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        auto flux = [&](const Point& q) { return m.sqrt_det(q) * x(q)[i]; };
        acc += partial(m, flux, p, i, m.step(i, s));
    }
    return acc / m.sqrt_det(p);
}

double laplace_beltrami(const ChartedManifold& m, const ScalarFieldFn& f, const Point& p, const DiffScheme& s) {
    const int d = m.dim();
    double acc = 0.0;
    for (int i = 0; i < d; ++i) {
        auto flux = [&](const Point& q) {
            const auto df = gradient(m, f, q, s);
            const Matrix gi = m.inverse_metric(q);
            double v = 0.0;
            for (int j = 0; j < d; ++j) v += gi[i][j] * df[static_cast<std::size_t>(j)];
            return m.sqrt_det(q) * v;
        };
        acc += partial(m, flux, p, i, m.step(i, s));
    }
    return -acc / m.sqrt_det(p);
}

double scalar_vorticity(const ChartedManifold& m, const VectorFieldFn& u, const Point& p, const DiffScheme& s) {
    if (m.dim() != 2) throw DimensionError("scalar_vorticity requires a two-dimensional chart");
    auto u1 = [&](const Point& q) { return lower(m, q, u(q))[1]; };
    auto u0 = [&](const Point& q) { return lower(m, q, u(q))[0]; };
    const double d0u1 = partial(m, u1, p, 0, m.step(0, s));
    const double d1u0 = partial(m, u0, p, 1, m.step(1, s));
    return m.orientation_sign() * (d0u1 - d1u0) / m.sqrt_det(p);
}

Vector hodge_laplacian_field(const ChartedManifold& m, const VectorFieldFn& u, const Point& p, const DiffScheme& s) {
    if (m.dim() != 2) throw DimensionError("hodge_laplacian_field requires a two-dimensional chart");
    auto zeta = [&](const Point& q) { return scalar_vorticity(m, u, q, s); };
    return skew_gradient(m, zeta, p, s);
}

Vector curl3(const ChartedManifold& m, const VectorFieldFn& u, const Point& p, const DiffScheme& s) {
    if (m.dim() != 3) throw DimensionError("curl3 requires a three-dimensional chart");
    std::array<Vector, kMaxDim> dlow{};
    for (int j = 0; j < 3; ++j) {
        auto low = [&](const Point& q) { return lower(m, q, u(q)); };
        dlow[static_cast<std::size_t>(j)] = partial(m, low, p, j, m.step(j, s));
    }
    Vector out;
    const double f = m.orientation_sign() / m.sqrt_det(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = levi(i, j, k);
                if (e) out[i] += e * dlow[static_cast<std::size_t>(j)][k];
            }
    return f * out;
}

Vector lie_bracket(const ChartedManifold& m, const VectorFieldFn& x, const VectorFieldFn& y, const Point& p,
                   const DiffScheme& s) {
    const auto jx = jacobian(m, x, p, s);
    const auto jy = jacobian(m, y, p, s);
    const Vector xp = x(p);
    const Vector yp = y(p);
    Vector out;
    for (int j = 0; j < m.dim(); ++j) {
        out += xp[j] * jy[static_cast<std::size_t>(j)];
        out -= yp[j] * jx[static_cast<std::size_t>(j)];
    }
    return out;
}

Vector lie_bracket(const ChartedManifold& m, const TimeVaryingField& x, const TimeVaryingField& y, const Point& p,
                   const DiffScheme& s) {
    if (!x.time_independent || !y.time_independent)
        throw ContractError("lie_bracket requires time-independent operands; freeze time with .at(t)");
    return lie_bracket(m, x.at(0.0), y.at(0.0), p, s);
}

Vector cross_product(const ChartedManifold& m, const Point& p, const Vector& u, const Vector& v) {
    if (m.dim() != 3) throw DimensionError("cross_product requires a three-dimensional chart");
    const double f = m.orientation_sign() * m.sqrt_det(p);
    Vector low;
    for (int l = 0; l < 3; ++l)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const int e = levi(l, j, k);
                if (e) low[l] += e * u[j] * v[k];
            }
    low *= f;
    const Matrix gi = m.inverse_metric(p);
    Vector out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += gi[i][j] * low[j];
    return out;
}

}  // namespace eulerwaves
