#include <cmath>

#include "eulerwaves/catalogue.hpp"

namespace eulerwaves {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Stationary:
            return "stationary";
        case Classification::MovingFrameTrivial:
            return "moving-frame-trivial";
        case Classification::Genuine:
            return "genuine";
    }
    return "unknown";
}

namespace {

std::pair<Vector, Vector> eval_vw(const ComplexEigenfield& e, double t, const Point& p) {
    if (e.pair) return e.pair(p);
    return {e.v.eval(t, p), e.w.eval(t, p)};
}

}  // namespace

Vector ExactSolution::real_field(double t, const Point& p) const {
    const Vector base = u0.eval(t, p);
    if (rho == 0.0) return base;
    const double ph = phase(t);
    const auto [v, w] = eval_vw(eigen, t, p);
    return base + rho * std::cos(ph) * v - rho * std::sin(ph) * w;
}

Vector ExactSolution::real_field_dt(double t, const Point& p) const {
    if (rho == 0.0) return {};
    const double ph = phase(t);
    const auto [v, w] = eval_vw(eigen, t, p);
    return -rho * omega * std::sin(ph) * v - rho * omega * std::cos(ph) * w;
}

Vector ExactSolution::linearized_field(double t, const Point& p) const {
    if (rho == 0.0) return {};
    const double ph = phase(t);
    const auto [v, w] = eval_vw(eigen, t, p);
    return rho * std::sin(ph) * v + rho * std::cos(ph) * w;
}

Vector ExactSolution::linearized_field_dt(double t, const Point& p) const {
    if (rho == 0.0) return {};
    const double ph = phase(t);
    const auto [v, w] = eval_vw(eigen, t, p);
    return rho * omega * std::cos(ph) * v - rho * omega * std::sin(ph) * w;
}

TimeVaryingField ExactSolution::real() const {
    auto self = std::make_shared<ExactSolution>(*this);
    TimeVaryingField f;
    f.eval = [self](double t, const Point& p) { return self->real_field(t, p); };
    f.dt_eval = [self](double t, const Point& p) { return self->real_field_dt(t, p); };
    f.label = key + ":U_R";
    f.time_independent = rho == 0.0 || omega == 0.0;
    return f;
}

TimeVaryingField ExactSolution::linearized() const {
    auto self = std::make_shared<ExactSolution>(*this);
    TimeVaryingField f;
    f.eval = [self](double t, const Point& p) { return self->linearized_field(t, p); };
    f.dt_eval = [self](double t, const Point& p) { return self->linearized_field_dt(t, p); };
    f.label = key + ":U_I";
    f.time_independent = rho == 0.0 || omega == 0.0;
    return f;
}

std::optional<StreamFunction> ExactSolution::real_stream() const {
    if (!stream_u0 || !eigen.stream_v || !eigen.stream_w) return std::nullopt;
    auto self = std::make_shared<ExactSolution>(*this);
    StreamFunction s;
    s.eval = [self](double t, const Point& p) {
        const double ph = self->phase(t);
        return self->stream_u0->eval(t, p) + self->rho * std::cos(ph) * self->eigen.stream_v->eval(t, p) -
               self->rho * std::sin(ph) * self->eigen.stream_w->eval(t, p);
    };
    s.dt_eval = [self](double t, const Point& p) {
        const double ph = self->phase(t);
        return -self->rho * self->omega *
               (std::sin(ph) * self->eigen.stream_v->eval(t, p) + std::cos(ph) * self->eigen.stream_w->eval(t, p));
    };
    s.label = key + ":psi_R";
    return s;
}

std::optional<StreamFunction> ExactSolution::linearized_stream() const {
    if (!eigen.stream_v || !eigen.stream_w) return std::nullopt;
    auto self = std::make_shared<ExactSolution>(*this);
    StreamFunction s;
    s.eval = [self](double t, const Point& p) {
        const double ph = self->phase(t);
        return self->rho *
               (std::sin(ph) * self->eigen.stream_v->eval(t, p) + std::cos(ph) * self->eigen.stream_w->eval(t, p));
    };
    s.dt_eval = [self](double t, const Point& p) {
        const double ph = self->phase(t);
        return self->rho * self->omega *
               (std::cos(ph) * self->eigen.stream_v->eval(t, p) - std::sin(ph) * self->eigen.stream_w->eval(t, p));
    };
    s.label = key + ":psi_I";
    return s;
}

Classification stationarity_classifier(const ExactSolution& s) {
    const auto& e = s.eigen;
    bool lambda_is_zeta, lambda_zero, zeta_zero;
    if (e.lambda_exact && e.zeta_exact) {
        lambda_is_zeta = *e.lambda_exact == *e.zeta_exact;
        lambda_zero = e.lambda_exact->is_zero();
        zeta_zero = e.zeta_exact->is_zero();
    } else {
        const double tol = 1e-12 * std::max(1.0, std::abs(e.zeta));
        lambda_is_zeta = std::abs(e.lambda - e.zeta) <= tol;
        lambda_zero = std::abs(e.lambda) <= tol;
        zeta_zero = std::abs(e.zeta) <= tol;
    }
    if (lambda_is_zeta) return Classification::Stationary;
    if (lambda_zero && !zeta_zero) return Classification::MovingFrameTrivial;
    return Classification::Genuine;
}

Classification ExactSolution::classification() const { return stationarity_classifier(*this); }

ExactSolution ExactSolution::with_amplitude(double new_rho, double new_sigma) const {
    if (new_rho < 0.0) throw ArgumentError("amplitude rho must be non-negative");
    ExactSolution s = *this;
    s.rho = new_rho;
    s.sigma = new_sigma;
    return s;
}

ExactSolution ExactSolution::with_omega(double new_omega) const {
    ExactSolution s = *this;
    s.omega = new_omega;
    s.omega_exact.reset();
    return s;
}

}  // namespace eulerwaves
