#include "eulerwaves/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eulerwaves/parallel.hpp"
#include "json.hpp"

namespace eulerwaves {

namespace {

constexpr double kTiny = 1e-300;
constexpr int kReachSteps = 10;

struct Eval {
    double res = 0.0;
    double scale = 0.0;
};

using EvalFn = std::function<Eval(double, const Point&, const DiffScheme&)>;

double fd_tol(const ExactSolution& s, const VerifyConfig& cfg) {
    if (cfg.tol) return *cfg.tol;
    return s.manifold->dim() == 2 ? 1e-5 : 1e-4;
}

int grid_size(const ChartedManifold& m, const VerifyConfig& cfg) {
    if (cfg.grid > 0) return cfg.grid;
    return m.dim() == 2 ? 24 : 12;
}

std::vector<CoordinateRange> sample_box(const ChartedManifold& m, const VerifyConfig& cfg) {
    std::vector<CoordinateRange> box;
    for (int i = 0; i < m.dim(); ++i) {
        CoordinateRange r = m.range(i);
        if (!m.periodic(i)) {
            const double reach = kReachSteps * m.step(i, cfg.scheme);
            double lo = reach, hi = reach;
            for (const auto& sl : m.singular()) {
                if (sl.coord != i) continue;
                if (sl.value == r.lo) lo = std::max(lo, m.singular_margin());
                if (sl.value == r.hi) hi = std::max(hi, m.singular_margin());
            }
            r.lo += lo;
            r.hi -= hi;
        }
        box.push_back(r);
    }
    return box;
}

double cell(const CoordinateRange& r, int k, int n) { return r.lo + r.width() * (k + 0.5) / n; }

VectorFieldFn field_v(const ExactSolution& s) {
    const auto& e = s.eigen;
    if (e.pair) {
        auto pr = e.pair;
        return [pr](const Point& q) { return pr(q).first; };
    }
    return e.v.at(0.0);
}

VectorFieldFn field_w(const ExactSolution& s) {
    const auto& e = s.eigen;
    if (e.pair) {
        auto pr = e.pair;
        return [pr](const Point& q) { return pr(q).second; };
    }
    return e.w.at(0.0);
}

/// Inertia operator applied to u; in 2D through the stream function when one is given.
VectorFieldFn inertia(const ChartedManifold& m, VectorFieldFn u, std::optional<ScalarFieldFn> psi,
                      const DiffScheme& sc) {
    if (m.dim() == 3) return [&m, u, sc](const Point& q) { return curl3(m, u, q, sc); };
    if (psi) {
        ScalarFieldFn f = *psi;
        ScalarFieldFn lap = [&m, f, sc](const Point& x) { return laplace_beltrami(m, f, x, sc); };
        return [&m, lap, sc](const Point& q) { return skew_gradient(m, lap, q, sc); };
    }
    return [&m, u, sc](const Point& q) { return hodge_laplacian_field(m, u, q, sc); };
}

std::optional<ScalarFieldFn> stream_of(const std::optional<StreamFunction>& s) {
    if (!s) return std::nullopt;
    return s->at(0.0);
}

CheckResult run_check(const std::string& name, const std::vector<Point>& pts, const std::vector<double>& times,
                      const EvalFn& fn, double tol, const VerifyConfig& cfg, bool fd) {
    const std::size_t np = pts.size();
    const std::size_t jobs = np * times.size();
    auto sweep = [&](const DiffScheme& sc) {
        std::vector<Eval> out(jobs);
        parallel_for(jobs, [&](std::size_t i) { out[i] = fn(times[i / np], pts[i % np], sc); });
        return out;
    };
    auto reduce = [](const std::vector<Eval>& out, double& sup, double& mean, double& scale) {
        sup = 0.0;
        scale = 0.0;
        std::vector<double> vals(out.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            sup = std::max(sup, out[i].res);
            scale = std::max(scale, out[i].scale);
            vals[i] = out[i].res;
        }
        mean = out.empty() ? 0.0 : stable_sum(vals) / static_cast<double>(out.size());
        if (scale < kTiny) scale = 1.0;
    };
    CheckResult r;
    r.name = name;
    r.tol = tol;
    r.samples = static_cast<int>(jobs);
    reduce(sweep(cfg.scheme), r.sup, r.mean, r.normalizer);
    r.pass = std::isfinite(r.sup) && r.ratio() <= tol;
    if (fd && cfg.richardson) {
        DiffScheme half = cfg.scheme;
        half.step_factor *= 0.5;
        double sup, mean, scale;
        reduce(sweep(half), sup, mean, scale);
        r.sup_half = sup / scale;
    }
    return r;
}

double mnorm(const ChartedManifold& m, const Point& p, const Vector& v) { return norm(m, p, v); }

std::vector<double> with_period(const ExactSolution& s, std::vector<double> times) {
    if (s.omega != 0.0) {
        const double T = 2.0 * kPi / std::abs(s.omega);
        for (int k = 1; k <= 4; ++k) times.push_back(T * k / 4.0);
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

double uniform01(std::uint64_t& state) { return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53; }

std::vector<Point> interior_samples(const ChartedManifold& m, const VerifyConfig& cfg) {
    const int n = grid_size(m, cfg);
    const auto box = sample_box(m, cfg);
    std::vector<Point> pts;
    const int d = m.dim();
    const int total = d == 2 ? n * n : n * n * n;
    pts.reserve(static_cast<std::size_t>(total + cfg.random_samples));
    for (int idx = 0; idx < total; ++idx) {
        Point p;
        int rest = idx;
        for (int i = d - 1; i >= 0; --i) {
            p[i] = cell(box[static_cast<std::size_t>(i)], rest % n, n);
            rest /= n;
        }
        pts.push_back(p);
    }
    std::uint64_t state = cfg.seed;
    for (int k = 0; k < cfg.random_samples; ++k) {
        Point p;
        for (int i = 0; i < d; ++i) {
            const auto& r = box[static_cast<std::size_t>(i)];
            p[i] = r.lo + r.width() * uniform01(state);
        }
        pts.push_back(p);
    }
    return pts;
}

std::vector<Point> boundary_samples(const ChartedManifold& m, const VerifyConfig& cfg) {
    const int n = grid_size(m, cfg);
    const auto box = sample_box(m, cfg);
    std::vector<Point> pts;
    const int d = m.dim();
    for (const auto& b : m.boundary()) {
        const int total = d == 2 ? n : n * n;
        for (int idx = 0; idx < total; ++idx) {
            Point p;
            int rest = idx;
            for (int i = d - 1; i >= 0; --i) {
                if (i == b.coord) continue;
                p[i] = cell(box[static_cast<std::size_t>(i)], rest % n, n);
                rest /= n;
            }
            p[b.coord] = b.value;
            pts.push_back(p);
        }
    }
    return pts;
}

std::vector<double> default_times(const ExactSolution& s) {
    std::vector<double> t{0.0, 0.7, 1.9};
    if (s.omega != 0.0) t.push_back(2.0 * kPi / std::abs(s.omega));
    return t;
}

namespace {

std::vector<double> times_of(const ExactSolution& s, const VerifyConfig& cfg) {
    return cfg.times.empty() ? default_times(s) : cfg.times;
}

CheckResult eigen_a(const ExactSolution& s, const VerifyConfig& cfg, const std::vector<Point>& pts) {
    const ChartedManifold& m = *s.manifold;
    const VectorFieldFn v = field_v(s), w = field_w(s);
    const auto pv = stream_of(s.eigen.stream_v), pw = stream_of(s.eigen.stream_w);
    const double alpha = s.eigen.alpha;
    EvalFn fn = [&m, v, w, pv, pw, alpha](double, const Point& p, const DiffScheme& sc) {
        const Vector av = inertia(m, v, pv, sc)(p);
        const Vector aw = inertia(m, w, pw, sc)(p);
        const Vector vv = v(p), ww = w(p);
        Eval e;
        e.res = std::max(mnorm(m, p, av - alpha * vv), mnorm(m, p, aw - alpha * ww));
        e.scale = std::max({mnorm(m, p, av), mnorm(m, p, aw), std::abs(alpha) * mnorm(m, p, vv),
                            std::abs(alpha) * mnorm(m, p, ww)});
        return e;
    };
    return run_check("eigen.inertia", pts, {0.0}, fn, fd_tol(s, cfg), cfg, true);
}

CheckResult eigen_b(const ExactSolution& s, const VerifyConfig& cfg, const std::vector<Point>& pts) {
    const ChartedManifold& m = *s.manifold;
    const VectorFieldFn v = field_v(s), w = field_w(s), u0 = s.u0.at(0.0);
    const double zeta = s.eigen.zeta;
    EvalFn fn = [&m, v, w, u0, zeta](double, const Point& p, const DiffScheme& sc) {
        const Vector bv = lie_bracket(m, u0, v, p, sc);
        const Vector bw = lie_bracket(m, u0, w, p, sc);
        const Vector vv = v(p), ww = w(p);
        Eval e;
        e.res = std::max(mnorm(m, p, bv + zeta * ww), mnorm(m, p, bw - zeta * vv));
        e.scale = std::max({mnorm(m, p, bv), mnorm(m, p, bw), mnorm(m, p, vv), mnorm(m, p, ww)});
        e.scale = std::max(e.scale, std::abs(zeta) * e.scale);
        return e;
    };
    return run_check("eigen.bracket_u0", pts, {0.0}, fn, fd_tol(s, cfg), cfg, true);
}

CheckResult eigen_c(const ExactSolution& s, const VerifyConfig& cfg, const std::vector<Point>& pts) {
    const ChartedManifold& m = *s.manifold;
    const VectorFieldFn v = field_v(s), w = field_w(s), u0 = s.u0.at(0.0);
    const auto pv = stream_of(s.eigen.stream_v), pw = stream_of(s.eigen.stream_w);
    const auto p0 = stream_of(s.stream_u0);
    const double lambda = s.eigen.lambda;
    EvalFn fn = [&m, v, w, u0, pv, pw, p0, lambda](double, const Point& p, const DiffScheme& sc) {
        const VectorFieldFn au0 = inertia(m, u0, p0, sc);
        const Vector bv = lie_bracket(m, v, au0, p, sc);
        const Vector bw = lie_bracket(m, w, au0, p, sc);
        const Vector av = inertia(m, v, pv, sc)(p);
        const Vector aw = inertia(m, w, pw, sc)(p);
        Eval e;
        e.res = std::max(mnorm(m, p, bv - lambda * aw), mnorm(m, p, bw + lambda * av));
        const double na = std::max(mnorm(m, p, av), mnorm(m, p, aw));
        e.scale = std::max({mnorm(m, p, bv), mnorm(m, p, bw), na, std::abs(lambda) * na});
        return e;
    };
    return run_check("eigen.coadjoint", pts, {0.0}, fn, fd_tol(s, cfg), cfg, true);
}

}  // namespace

std::vector<CheckResult> check_eigen_relations(const ExactSolution& s, const VerifyConfig& cfg) {
    const auto pts = interior_samples(*s.manifold, cfg);
    return {eigen_a(s, cfg, pts), eigen_b(s, cfg, pts), eigen_c(s, cfg, pts)};
}

CheckResult euler_residual_2d(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    if (m.dim() != 2) throw DimensionError("euler_residual_2d: manifold is not two-dimensional");
    const auto psi = s.real_stream();
    if (!psi) throw ContractError("euler_residual_2d: total stream function unavailable");
    const StreamFunction sf = *psi;
    EvalFn fn = [&m, sf](double t, const Point& p, const DiffScheme& sc) {
        const ScalarFieldFn ps = sf.at(t);
        auto dps = sf.dt_eval;
        ScalarFieldFn dpsi = [dps, t](const Point& q) { return dps(t, q); };
        ScalarFieldFn vort = [&m, ps, sc](const Point& q) { return laplace_beltrami(m, ps, q, sc); };
        const double dtv = laplace_beltrami(m, dpsi, p, sc);
        const double br = poisson_bracket(m, ps, vort, p, sc);
        Eval e;
        e.res = std::abs(dtv + br);
        e.scale = std::max({std::abs(dtv), std::abs(br), std::abs(vort(p))});
        return e;
    };
    return run_check("euler", interior_samples(m, cfg), times_of(s, cfg), fn, fd_tol(s, cfg), cfg, true);
}

CheckResult euler_residual_3d(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    if (m.dim() != 3) throw DimensionError("euler_residual_3d: manifold is not three-dimensional");
    auto self = std::make_shared<ExactSolution>(s);
    EvalFn fn = [&m, self](double t, const Point& p, const DiffScheme& sc) {
        VectorFieldFn u = [self, t](const Point& q) { return self->real_field(t, q); };
        VectorFieldFn du = [self, t](const Point& q) { return self->real_field_dt(t, q); };
        VectorFieldFn cu = [&m, u, sc](const Point& q) { return curl3(m, u, q, sc); };
        const Vector dtc = curl3(m, du, p, sc);
        const Vector br = lie_bracket(m, u, cu, p, sc);
        Eval e;
        e.res = mnorm(m, p, dtc + br);
        e.scale = std::max({mnorm(m, p, dtc), mnorm(m, p, br), mnorm(m, p, cu(p))});
        return e;
    };
    return run_check("euler", interior_samples(m, cfg), times_of(s, cfg), fn, fd_tol(s, cfg), cfg, true);
}

CheckResult euler_residual(const ExactSolution& s, const VerifyConfig& cfg) {
    return s.manifold->dim() == 2 ? euler_residual_2d(s, cfg) : euler_residual_3d(s, cfg);
}

CheckResult linearized_residual(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    EvalFn fn;
    if (m.dim() == 2) {
        const auto pr = s.real_stream(), pi = s.linearized_stream();
        if (!pr || !pi) throw ContractError("linearized_residual: stream functions unavailable");
        const StreamFunction sr = *pr, si = *pi;
        fn = [&m, sr, si](double t, const Point& p, const DiffScheme& sc) {
            const ScalarFieldFn psr = sr.at(t), psi = si.at(t);
            auto dsi = si.dt_eval;
            ScalarFieldFn dpsi = [dsi, t](const Point& q) { return dsi(t, q); };
            ScalarFieldFn wr = [&m, psr, sc](const Point& q) { return laplace_beltrami(m, psr, q, sc); };
            ScalarFieldFn wi = [&m, psi, sc](const Point& q) { return laplace_beltrami(m, psi, q, sc); };
            const double a = laplace_beltrami(m, dpsi, p, sc);
            const double b = poisson_bracket(m, psr, wi, p, sc);
            const double c = poisson_bracket(m, psi, wr, p, sc);
            Eval e;
            e.res = std::abs(a + b + c);
            e.scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(wi(p))});
            return e;
        };
    } else {
        auto self = std::make_shared<ExactSolution>(s);
        fn = [&m, self](double t, const Point& p, const DiffScheme& sc) {
            VectorFieldFn ur = [self, t](const Point& q) { return self->real_field(t, q); };
            VectorFieldFn ui = [self, t](const Point& q) { return self->linearized_field(t, q); };
            VectorFieldFn dui = [self, t](const Point& q) { return self->linearized_field_dt(t, q); };
            VectorFieldFn cr = [&m, ur, sc](const Point& q) { return curl3(m, ur, q, sc); };
            VectorFieldFn ci = [&m, ui, sc](const Point& q) { return curl3(m, ui, q, sc); };
            const Vector a = curl3(m, dui, p, sc);
            const Vector b = lie_bracket(m, ur, ci, p, sc);
            const Vector c = lie_bracket(m, ui, cr, p, sc);
            Eval e;
            e.res = mnorm(m, p, a + b + c);
            e.scale = std::max({mnorm(m, p, a), mnorm(m, p, b), mnorm(m, p, c), mnorm(m, p, ci(p))});
            return e;
        };
    }
    return run_check("linearized", interior_samples(m, cfg), times_of(s, cfg), fn, fd_tol(s, cfg), cfg, true);
}

CheckResult conservation_check(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    QuadratureOptions qo;
    if (m.dim() == 3) {
        qo.periodic_nodes = 32;
        qo.gauss_nodes = 24;
    }
    const auto times = with_period(s, times_of(s, cfg));
    std::vector<double> energy;
    int coarse = 0;
    for (double t : times) {
        VectorFieldFn u = [&s, t](const Point& q) { return s.real_field(t, q); };
        const QuadratureResult q = inner_product_quadrature(m, u, u, qo);
        energy.push_back(q.refined);
        coarse += q.coarse ? 1 : 0;
    }
    CheckResult r;
    r.name = "energy";
    r.tol = 1e-6;
    r.samples = static_cast<int>(times.size());
    r.normalizer = std::abs(energy.front()) < kTiny ? 1.0 : std::abs(energy.front());
    std::vector<double> dev;
    for (double e : energy) {
        dev.push_back(std::abs(e - energy.front()));
        r.sup = std::max(r.sup, dev.back());
    }
    r.mean = stable_sum(dev) / static_cast<double>(dev.size());
    r.pass = std::isfinite(r.sup) && r.ratio() <= r.tol;
    std::ostringstream os;
    os.precision(17);
    os << "E(0) = " << energy.front() << "; quadrature refinement flagged at " << coarse << " of " << times.size()
       << " times";
    r.detail = os.str();
    return r;
}

std::vector<CheckResult> constraint_check(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    const auto times = times_of(s, cfg);
    auto self = std::make_shared<ExactSolution>(s);
    EvalFn div = [&m, self](double t, const Point& p, const DiffScheme& sc) {
        const double sg = m.sqrt_det(p);
        double sum = 0.0, mag = 0.0;
        for (int i = 0; i < m.dim(); ++i) {
            auto flux = [&m, self, t, i](const Point& q) { return m.sqrt_det(q) * self->real_field(t, q)[i]; };
            const double term = partial(m, flux, p, i, m.step(i, sc)) / sg;
            sum += term;
            mag += std::abs(term);
        }
        return Eval{std::abs(sum), mag};
    };
    CheckResult d = run_check("divergence", interior_samples(m, cfg), times, div, cfg.tol ? *cfg.tol : 1e-6, cfg, true);
    std::vector<CheckResult> out{d};
    if (!m.boundary().empty()) {
        const auto bp = boundary_samples(m, cfg);
        EvalFn tan = [&m, self](double t, const Point& p, const DiffScheme&) {
            int coord = 0;
            for (const auto& b : m.boundary())
                if (p[b.coord] == b.value) coord = b.coord;
            const Vector u = self->real_field(t, p);
            const double gcc = m.inverse_metric(p)[coord][coord];
            return Eval{std::abs(u[coord]) / std::sqrt(gcc), mnorm(m, p, u)};
        };
        out.push_back(run_check("tangency", bp, times, tan, 1e-8, cfg, false));
    }
    return out;
}

CheckResult stationarity_check(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    const Classification cls = s.classification();
    const bool expect_steady = cls == Classification::Stationary || s.rho == 0.0;
    const double dt = 1e-3;
    EvalFn fn = [&m, &s, dt](double t, const Point& p, const DiffScheme&) {
        const Vector d = (s.real_field(t - 2 * dt, p) - 8.0 * s.real_field(t - dt, p) +
                          8.0 * s.real_field(t + dt, p) - s.real_field(t + 2 * dt, p)) *
                         (1.0 / (12.0 * dt));
        return Eval{mnorm(m, p, d), mnorm(m, p, s.real_field(t, p))};
    };
    CheckResult r = run_check("stationarity", interior_samples(m, cfg), times_of(s, cfg), fn, 1e-8, cfg, false);
    const bool observed_steady = r.ratio() <= 1e-8;
    r.pass = observed_steady == expect_steady;
    r.detail = "classified " + to_string(cls) + "; finite-difference d/dt U_R " +
               (observed_steady ? "vanishes" : "does not vanish");
    return r;
}

std::vector<CandidateOutcome> resolve_candidates(const ExactSolution& s, const VerifyConfig& cfg) {
    std::vector<CandidateOutcome> out;
    if (s.candidates.empty()) return out;
    const auto pts = interior_samples(*s.manifold, cfg);
    VerifyConfig c = cfg;
    c.richardson = false;
    for (const auto& cand : s.candidates) {
        ExactSolution t = s;
        CheckResult r;
        if (cand.quantity == "alpha") {
            t.eigen.alpha = cand.value;
            r = eigen_a(t, c, pts);
        } else {
            t.eigen.lambda = cand.value;
            r = eigen_c(t, c, pts);
        }
        out.push_back({cand, r.name, r.ratio(), r.pass});
    }
    return out;
}

bool ResidualReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

ResidualReport verify_solution(const ExactSolution& s, const VerifyConfig& cfg) {
    const ChartedManifold& m = *s.manifold;
    ResidualReport r;
    r.key = s.key;
    r.title = s.title;
    r.params = s.params;
    r.dim = m.dim();
    r.grid = grid_size(m, cfg);
    r.points = static_cast<int>(interior_samples(m, cfg).size());
    r.times = times_of(s, cfg);
    r.seed = cfg.seed;
    r.step_factor = cfg.scheme.step_factor;
    r.tol_override = cfg.tol;
    r.richardson = cfg.richardson;
    r.alpha = s.eigen.alpha;
    r.lambda = s.eigen.lambda;
    r.zeta = s.eigen.zeta;
    r.omega = s.omega;
    r.alpha_exact = s.eigen.alpha_exact;
    r.lambda_exact = s.eigen.lambda_exact;
    r.zeta_exact = s.eigen.zeta_exact;
    r.omega_exact = s.omega_exact;
    r.rho = s.rho;
    r.sigma = s.sigma;
    r.classification = s.classification();
    r.notes = s.notes;
    for (auto& c : check_eigen_relations(s, cfg)) r.checks.push_back(c);
    r.checks.push_back(euler_residual(s, cfg));
    r.checks.push_back(linearized_residual(s, cfg));
    r.checks.push_back(conservation_check(s, cfg));
    for (auto& c : constraint_check(s, cfg)) r.checks.push_back(c);
    r.checks.push_back(stationarity_check(s, cfg));
    r.candidates = resolve_candidates(s, cfg);
    if (!r.candidates.empty()) {
        CheckResult c;
        c.name = "sign-candidates";
        c.tol = fd_tol(s, cfg);
        c.pass = true;
        std::string passed;
        for (const auto& o : r.candidates) {
            if (o.candidate.adopted && !o.pass) c.pass = false;
            if (o.candidate.adopted) c.sup = std::max(c.sup, o.ratio);
            if (o.pass) passed += (passed.empty() ? "" : "; ") + o.candidate.quantity + ": " + o.candidate.label;
        }
        c.detail = "passing: " + (passed.empty() ? std::string("none") : passed);
        r.checks.push_back(c);
    }
    return r;
}

namespace {

nlohmann::ordered_json num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::ordered_json rational(const std::optional<Rational>& q) {
    if (!q) return nullptr;
    return q->str();
}

}  // namespace

std::string ResidualReport::to_json() const {
    using J = nlohmann::ordered_json;
    J j;
    j["schema"] = 1;
    j["version"] = kVersion;
    J sol;
    sol["key"] = key;
    sol["title"] = title;
    J p = J::object();
    for (const auto& [k, v] : params) p[k] = v;
    sol["params"] = p;
    sol["rho"] = num(rho);
    sol["sigma"] = num(sigma);
    j["solution"] = sol;
    j["grid"] = {{"dim", dim}, {"per_axis", grid}, {"points", points}, {"step_factor", num(step_factor)}};
    j["config"] = {{"tol_override", tol_override ? num(*tol_override) : J(nullptr)},
                   {"richardson", richardson},
                   {"random_samples_seed", seed}};
    J ts = J::array();
    for (double t : times) ts.push_back(num(t));
    j["times"] = ts;
    j["seed"] = seed;
    J sp;
    sp["alpha"] = num(alpha);
    sp["lambda"] = num(lambda);
    sp["zeta"] = num(zeta);
    sp["omega"] = num(omega);
    sp["alpha_exact"] = rational(alpha_exact);
    sp["lambda_exact"] = rational(lambda_exact);
    sp["zeta_exact"] = rational(zeta_exact);
    sp["omega_exact"] = rational(omega_exact);
    sp["classification"] = to_string(classification);
    j["spectral"] = sp;
    J cs = J::array();
    for (const auto& c : checks) {
        J e;
        e["name"] = c.name;
        e["sup"] = num(c.sup);
        e["mean"] = num(c.mean);
        e["normalizer"] = num(c.normalizer);
        e["ratio"] = num(c.ratio());
        e["tol"] = num(c.tol);
        e["pass"] = c.pass;
        e["samples"] = c.samples;
        if (c.sup_half) {
            e["richardson_half"] = num(*c.sup_half);
            e["richardson_disagreement"] = num(std::abs(c.ratio() - *c.sup_half));
        }
        if (!c.detail.empty()) e["detail"] = c.detail;
        cs.push_back(e);
    }
    j["checks"] = cs;
    J cand = J::array();
    for (const auto& o : candidates) {
        cand.push_back({{"quantity", o.candidate.quantity},
                        {"label", o.candidate.label},
                        {"value", num(o.candidate.value)},
                        {"adopted", o.candidate.adopted},
                        {"check", o.check},
                        {"ratio", num(o.ratio)},
                        {"pass", o.pass}});
    }
    j["candidates"] = cand;
    j["notes"] = notes;
    j["pass"] = all_pass();
    return j.dump(2) + "\n";
}

// Fourier fields on the flat torus.

double FourierField::stream(const Point& p) const {
    double s = 0.0;
    for (const auto& md : modes) {
        const double ph = md.kx * p[0] + md.ky * p[1];
        s += md.c * std::cos(ph) + md.s * std::sin(ph);
    }
    return s;
}

Vector FourierField::field(const Point& p) const {
    Vector u;
    for (const auto& md : modes) {
        const double ph = md.kx * p[0] + md.ky * p[1];
        const double d = -md.c * std::sin(ph) + md.s * std::cos(ph);
        u[0] += md.ky * d;
        u[1] -= md.kx * d;
    }
    return u;
}

std::array<Vector, kMaxDim> FourierField::jacobian(const Point& p) const {
    std::array<Vector, kMaxDim> jac{};
    for (const auto& md : modes) {
        const double ph = md.kx * p[0] + md.ky * p[1];
        const double dd = -md.c * std::cos(ph) - md.s * std::sin(ph);
        const double k[2] = {static_cast<double>(md.kx), static_cast<double>(md.ky)};
        for (int j = 0; j < 2; ++j) {
            jac[static_cast<std::size_t>(j)][0] += k[j] * dd * md.ky;
            jac[static_cast<std::size_t>(j)][1] -= k[j] * dd * md.kx;
        }
    }
    return jac;
}

FourierField FourierField::inverse_laplacian() const {
    FourierField out;
    for (const auto& md : modes) {
        const int k2 = md.kx * md.kx + md.ky * md.ky;
        if (k2 == 0) throw DegenerateError("inverse_laplacian: constant mode has no inverse");
        out.modes.push_back({md.kx, md.ky, md.c / k2, md.s / k2});
    }
    return out;
}

FourierField random_fourier_field(std::uint64_t& state, int modes, int kmax) {
    FourierField f;
    while (static_cast<int>(f.modes.size()) < modes) {
        const int kx = static_cast<int>(splitmix(state) % static_cast<std::uint64_t>(2 * kmax + 1)) - kmax;
        const int ky = static_cast<int>(splitmix(state) % static_cast<std::uint64_t>(2 * kmax + 1)) - kmax;
        if (kx == 0 && ky == 0) continue;
        f.modes.push_back({kx, ky, 2.0 * uniform01(state) - 1.0, 2.0 * uniform01(state) - 1.0});
    }
    return f;
}

Vector fourier_bracket(const FourierField& x, const FourierField& y, const Point& p) {
    const Vector xv = x.field(p), yv = y.field(p);
    const auto jx = x.jacobian(p), jy = y.jacobian(p);
    Vector out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[i] += xv[j] * jy[static_cast<std::size_t>(j)][i] - yv[j] * jx[static_cast<std::size_t>(j)][i];
    return out;
}

namespace {

void require_torus(const ChartedManifold& m) {
    if (m.name() != "flat-torus-2") throw DomainError("skew_adjoint_quadrature: needs the flat two-torus");
}

double l2(const ChartedManifold& m, const VectorFieldFn& f, const QuadratureOptions& qo) {
    return std::sqrt(std::max(0.0, inner_product_quadrature(m, f, f, qo).value));
}

}  // namespace

CheckResult skew_adjoint_quadrature(const ChartedManifold& m, const FourierField& u, const FourierField& v,
                                    double tol, const QuadratureOptions& opts) {
    require_torus(m);
    const FourierField iu = u.inverse_laplacian();
    VectorFieldFn a = [iu](const Point& p) { return iu.field(p); };
    VectorFieldFn b = [&u, &v](const Point& p) { return fourier_bracket(v, u, p); };
    const QuadratureResult q = inner_product_quadrature(m, a, b, opts);
    CheckResult r;
    r.name = "skew-adjoint";
    r.tol = tol;
    r.sup = std::abs(q.value);
    r.mean = r.sup;
    const double nrm = l2(m, a, opts) * l2(m, b, opts);
    r.normalizer = nrm < kTiny ? 1.0 : nrm;
    r.samples = 1;
    r.pass = r.ratio() <= tol;
    return r;
}

CheckResult skew_adjoint_trilinear(const ChartedManifold& m, const FourierField& u, const FourierField& v,
                                   const FourierField& w, double tol, const QuadratureOptions& opts) {
    require_torus(m);
    const FourierField iu = u.inverse_laplacian(), iw = w.inverse_laplacian();
    VectorFieldFn a1 = [iu](const Point& p) { return iu.field(p); };
    VectorFieldFn b1 = [&v, &w](const Point& p) { return fourier_bracket(v, w, p); };
    VectorFieldFn a2 = [iw](const Point& p) { return iw.field(p); };
    VectorFieldFn b2 = [&v, &u](const Point& p) { return fourier_bracket(v, u, p); };
    const double t1 = inner_product_quadrature(m, a1, b1, opts).value;
    const double t2 = inner_product_quadrature(m, a2, b2, opts).value;
    CheckResult r;
    r.name = "skew-adjoint-trilinear";
    r.tol = tol;
    r.sup = std::abs(t1 + t2);
    r.mean = r.sup;
    const double nrm = std::max(l2(m, a1, opts) * l2(m, b1, opts), l2(m, a2, opts) * l2(m, b2, opts));
    r.normalizer = nrm < kTiny ? 1.0 : nrm;
    r.samples = 1;
    r.pass = r.ratio() <= tol;
    return r;
}

}  // namespace eulerwaves
