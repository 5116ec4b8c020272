#include "eulerwaves/catalogue.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <memory>
#include <sstream>

#include "eulerwaves/special_functions.hpp"

namespace eulerwaves {

namespace {

using PairFn = std::function<std::pair<Vector, Vector>(const Point&)>;
using ScalarPairFn = std::function<std::pair<double, double>(const Point&)>;

TimeVaryingField steady(std::function<Vector(const Point&)> fn, std::string label) {
    TimeVaryingField f;
    f.eval = [fn](double, const Point& p) { return fn(p); };
    f.dt_eval = [](double, const Point&) { return Vector{}; };
    f.label = std::move(label);
    f.time_independent = true;
    return f;
}

StreamFunction steady_stream(std::function<double(const Point&)> fn, std::string label) {
    StreamFunction s;
    s.eval = [fn](double, const Point& p) { return fn(p); };
    s.dt_eval = [](double, const Point&) { return 0.0; };
    s.label = std::move(label);
    return s;
}

void set_pair(ComplexEigenfield& e, const PairFn& pr, const std::string& label) {
    e.pair = pr;
    e.v = steady([pr](const Point& p) { return pr(p).first; }, label + ":v");
    e.w = steady([pr](const Point& p) { return pr(p).second; }, label + ":w");
}

void set_stream_pair(ComplexEigenfield& e, const ScalarPairFn& pr, const std::string& label) {
    e.stream_v = steady_stream([pr](const Point& p) { return pr(p).first; }, label + ":psi_v");
    e.stream_w = steady_stream([pr](const Point& p) { return pr(p).second; }, label + ":psi_w");
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void finish(ExactSolution& s) {
    s.omega = s.eigen.lambda - s.eigen.zeta;
    if (s.eigen.lambda_exact && s.eigen.zeta_exact) s.omega_exact = *s.eigen.lambda_exact - *s.eigen.zeta_exact;
    if (s.omega_exact) s.omega = s.omega_exact->value();
}

TimeVaryingField rotation_2d(const std::string& label) {
    return steady([](const Point&) { return Vector{0.0, 1.0}; }, label);
}

}  // namespace

ExactSolution kelvin_torus(int n, int m) {
    if (n == 0 && m == 0) throw DegenerateError("kelvin_torus: (n, m) = (0, 0) gives the zero field");
    ExactSolution s;
    s.key = "kelvin-torus";
    s.title = "Kelvin waves on the flat two-torus";
    s.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    s.manifold = flat_torus2();
    s.u0 = steady([](const Point&) { return Vector{1.0, 0.0}; }, "d/dx");
    s.stream_u0 = steady_stream([](const Point& p) { return p[1]; }, "y");
    const double dn = n, dm = m;
    set_pair(
        s.eigen,
        [dn, dm](const Point& p) {
            const double ph = dn * p[0] + dm * p[1];
            const double sn = std::sin(ph), cs = std::cos(ph);
            return std::make_pair(Vector{-dm * sn, dn * sn}, Vector{dm * cs, -dn * cs});
        },
        s.key);
    set_stream_pair(
        s.eigen,
        [dn, dm](const Point& p) {
            const double ph = dn * p[0] + dm * p[1];
            return std::make_pair(std::cos(ph), std::sin(ph));
        },
        s.key);
    s.eigen.alpha_exact = Rational(n * n + m * m);
    s.eigen.lambda_exact = Rational(0);
    s.eigen.zeta_exact = Rational(n);
    s.eigen.alpha = s.eigen.alpha_exact->value();
    s.eigen.lambda = 0.0;
    s.eigen.zeta = n;
    finish(s);
    return s;
}

ExactSolution kelvin_disk(int n, int m) {
    if (m < 1) throw ArgumentError("kelvin_disk: zero index m must be >= 1");
    ExactSolution s;
    s.key = "kelvin-disk";
    s.title = "Kelvin waves on the flat disk";
    s.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    s.manifold = unit_disk();
    s.u0 = rotation_2d("d/dtheta");
    s.stream_u0 = steady_stream([](const Point& p) { return -0.5 * p[0] * p[0]; }, "-r^2/2");
    const double beta = bessel_j_zero(std::abs(n), m);
    const double dn = n;
    set_pair(
        s.eigen,
        [n, dn, beta](const Point& p) {
            const double r = p[0];
            const double jv = bessel_j(n, beta * r);
            const double jp = beta * bessel_j_prime(n, beta * r);
            const double sn = std::sin(dn * p[1]), cs = std::cos(dn * p[1]);
            return std::make_pair(Vector{-dn / r * jv * sn, -jp / r * cs}, Vector{dn / r * jv * cs, -jp / r * sn});
        },
        s.key);
    set_stream_pair(
        s.eigen,
        [n, dn, beta](const Point& p) {
            const double jv = bessel_j(n, beta * p[0]);
            return std::make_pair(jv * std::cos(dn * p[1]), jv * std::sin(dn * p[1]));
        },
        s.key);
    s.eigen.alpha = beta * beta;
    s.eigen.lambda_exact = Rational(0);
    s.eigen.zeta_exact = Rational(n);
    s.eigen.lambda = 0.0;
    s.eigen.zeta = n;
    s.notes.push_back("beta = " + fmt(beta) + " is zero " + std::to_string(m) + " of J_" + std::to_string(std::abs(n)));
    s.notes.push_back("theta component uses -(1/r) d_r psi so that the field is divergence free");
    finish(s);
    return s;
}

ExactSolution rossby_sphere(int n, int m) {
    if (m < 1) throw ArgumentError("rossby_sphere: degree m must be >= 1");
    if (std::abs(n) > m) throw ArgumentError("rossby_sphere: need |n| <= m");
    ExactSolution s;
    s.key = "rossby-sphere";
    s.title = "Rossby-Haurwitz waves on the round two-sphere";
    s.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    s.manifold = round_sphere();
    s.u0 = rotation_2d("d/dtheta");
    s.stream_u0 = steady_stream([](const Point& p) { return -std::cos(p[0]); }, "-cos(phi)");
    const double dn = n;
    set_pair(
        s.eigen,
        [n, m, dn](const Point& p) {
            const double x = std::cos(p[0]);
            const double sp = std::sin(p[0]);
            const double pv = assoc_legendre(n, m, x);
            const double pd = assoc_legendre_prime(n, m, x);
            const double sn = std::sin(dn * p[1]), cs = std::cos(dn * p[1]);
            return std::make_pair(Vector{dn / sp * pv * sn, -pd * cs}, Vector{-dn / sp * pv * cs, -pd * sn});
        },
        s.key);
    set_stream_pair(
        s.eigen,
        [n, m, dn](const Point& p) {
            const double pv = assoc_legendre(n, m, std::cos(p[0]));
            return std::make_pair(pv * std::cos(dn * p[1]), pv * std::sin(dn * p[1]));
        },
        s.key);
    s.eigen.alpha_exact = Rational(m * (m + 1));
    s.eigen.lambda_exact = Rational(2 * n, m * (m + 1));
    s.eigen.zeta_exact = Rational(n);
    s.eigen.alpha = s.eigen.alpha_exact->value();
    s.eigen.lambda = s.eigen.lambda_exact->value();
    s.eigen.zeta = n;
    finish(s);
    return s;
}

ExactSolution kelvin_hyperbolic(int n, int m) {
    if (m < 1) throw ArgumentError("kelvin_hyperbolic: mode index m must be >= 1");
    const double r_max = 1.0;
    const RadialEigenSolution mode = hyperbolic_radial_mode(n, r_max, m);
    ExactSolution s;
    s.key = "kelvin-hyperbolic";
    s.title = "Kelvin waves on a compact disk in hyperbolic space";
    s.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    s.manifold = hyperbolic_disk(r_max);
    s.u0 = rotation_2d("d/dtheta");
    s.stream_u0 = steady_stream([](const Point& p) { return -std::cosh(p[0]); }, "-cosh(r)");
    const double dn = n;
    const auto profile = mode.profile;
    set_pair(
        s.eigen,
        [dn, profile](const Point& p) {
            const auto rv = profile(p[0]);
            const double sh = std::sinh(p[0]);
            const double sn = std::sin(dn * p[1]), cs = std::cos(dn * p[1]);
            return std::make_pair(Vector{-dn / sh * rv.r * sn, -rv.dr / sh * cs},
                                  Vector{dn / sh * rv.r * cs, -rv.dr / sh * sn});
        },
        s.key);
    set_stream_pair(
        s.eigen,
        [dn, profile](const Point& p) {
            const double rv = profile(p[0]).r;
            return std::make_pair(rv * std::cos(dn * p[1]), rv * std::sin(dn * p[1]));
        },
        s.key);
    const double kappa = mode.eigenvalue;
    s.eigen.alpha = kappa;
    s.eigen.lambda = n == 0 ? 0.0 : -2.0 * n / kappa;
    s.eigen.zeta = n;
    s.eigen.zeta_exact = Rational(n);
    if (n == 0) s.eigen.lambda_exact = Rational(0);
    s.candidates = {
        {"alpha", "positive Hodge Laplacian eigenvalue 1/4 + beta^2", kappa, true},
        {"alpha", "sign-flipped alpha = -(1/4 + beta^2)", -kappa, false},
        {"lambda", "coadjoint value -2n/(1/4 + beta^2)", s.eigen.lambda, true},
        {"lambda", "sign-flipped lambda = 2n/(1/4 + beta^2)", 2.0 * n / kappa, false},
    };
    s.notes.push_back("beta = " + fmt(mode.beta) + " (shooting " + fmt(mode.beta_shooting) + ")");
    finish(s);
    return s;
}

ComplexEigenfield build_ck_eigenfield(ManifoldPtr mp, const VectorFieldFn& x, const ComplexScalarFn& f, double eps,
                                      double delta2, int n, int sign, double scale) {
    if (sign != 1 && sign != -1) throw ArgumentError("build_ck_eigenfield: sign must be +1 or -1");
    if (!(delta2 > 0.0)) throw DegenerateError("build_ck_eigenfield: Laplacian eigenvalue must be positive");
    const double root = std::sqrt(eps * eps + delta2);
    const double alpha = eps + sign * root;
    if (std::abs(alpha) < 1e-14 * root) throw DegenerateError("build_ck_eigenfield: curl eigenvalue vanishes");
    ComplexEigenfield e;
    e.alpha = alpha;
    e.lambda = 2.0 * n * eps / alpha;
    e.zeta = n;
    const double dn = n;
    set_pair(
        e,
        [mp, x, f, alpha, dn, scale](const Point& p) {
            const auto& m = *mp;
            const ComplexScalarSample s = f(p);
            const Matrix gi = m.inverse_metric(p);
            Vector gr, gim;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    gr[i] += gi[i][j] * s.df[static_cast<std::size_t>(j)].real();
                    gim[i] += gi[i][j] * s.df[static_cast<std::size_t>(j)].imag();
                }
            const Vector xv = x(p);
            const Vector cr = cross_product(m, p, gr, xv);
            const Vector ci = cross_product(m, p, gim, xv);
            const Vector re = alpha * alpha * s.f.real() * xv + alpha * cr - dn * gim;
            const Vector im = alpha * alpha * s.f.imag() * xv + alpha * ci + dn * gr;
            return std::make_pair(scale * re, scale * im);
        },
        "ck");
    return e;
}

ExactSolution rossby_s3(int j, int k, int d, int sign) {
    if (d < 0) throw ArgumentError("rossby_s3: d must be >= 0");
    if (sign != 1 && sign != -1) throw ArgumentError("rossby_s3: sign must be +1 or -1");
    const int aj = std::abs(j), ak = std::abs(k);
    const int ell = aj + ak + 2 * d;
    const int n = j + k;
    const double eps = -1.0;
    const double delta2 = static_cast<double>(ell) * (ell + 2);
    if (ell == 0) throw DegenerateError("rossby_s3: j = k = d = 0 gives a constant eigenfunction");
    const int alpha_int = sign > 0 ? ell : -(ell + 2);

    ExactSolution s;
    s.key = "rossby-s3";
    s.title = "Generalized Rossby-Haurwitz waves on the round three-sphere";
    s.params = {{"j", std::to_string(j)}, {"k", std::to_string(k)}, {"d", std::to_string(d)},
                {"sign", sign > 0 ? "+" : "-"}};
    s.manifold = round_s3();
    s.u0 = steady([](const Point&) { return Vector{0.0, 1.0, 1.0}; }, "hopf");
    const double dj = j, dk = k;
    ComplexScalarFn f = [aj, ak, d, dj, dk](const Point& p) {
        const double c = std::cos(p[0]), sn = std::sin(p[0]);
        const double x = std::cos(2.0 * p[0]);
        const double jp = jacobi_poly(d, ak, aj, x);
        const double jd = jacobi_poly_prime(d, ak, aj, x);
        const double amp = std::pow(c, aj) * std::pow(sn, ak);
        double damp = 0.0;
        if (aj > 0) damp -= aj * std::pow(c, aj - 1) * std::pow(sn, ak + 1);
        if (ak > 0) damp += ak * std::pow(c, aj + 1) * std::pow(sn, ak - 1);
        const double F = amp * jp;
        const double dF = damp * jp + amp * jd * (-2.0 * std::sin(2.0 * p[0]));
        const std::complex<double> e = std::polar(1.0, dj * p[1] + dk * p[2]);
        ComplexScalarSample out;
        out.f = e * F;
        out.df = {e * dF, std::complex<double>(0.0, dj) * out.f, std::complex<double>(0.0, dk) * out.f};
        return out;
    };
    auto hopf = [](const Point&) { return Vector{0.0, 1.0, 1.0}; };
    // Normalized so the d = 0 field has unit coefficient on the xi terms.
    const double scale = 1.0 / (2.0 * std::sqrt(eps * eps + delta2));
    s.eigen = build_ck_eigenfield(s.manifold, hopf, f, eps, delta2, n, sign, scale);
    s.eigen.alpha_exact = Rational(alpha_int);
    s.eigen.lambda_exact = Rational(-2 * n, alpha_int);
    s.eigen.zeta_exact = Rational(n);
    s.eigen.alpha = alpha_int;
    s.eigen.lambda = s.eigen.lambda_exact->value();

    // Detect the identically vanishing branch.
    double zmax = 0.0, ref = 0.0;
    for (int a = 1; a <= 7; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c) {
                const Point p(kPi / 2.0 * a / 8.0, 2.0 * kPi * b / 8.0 + 0.1, 2.0 * kPi * c / 8.0 + 0.2);
                const auto [v, w] = s.eigen.pair(p);
                zmax = std::max({zmax, norm(*s.manifold, p, v), norm(*s.manifold, p, w)});
                const auto fs = f(p);
                ref = std::max(ref, scale * alpha_int * alpha_int * std::abs(fs.f));
                double gabs = 0.0;
                for (const auto& z : fs.df) gabs += std::norm(z);
                ref = std::max(ref, scale * std::abs(n) * std::sqrt(gabs));
                ref = std::max(ref, scale * std::abs(alpha_int) * std::sqrt(gabs));
            }
    if (zmax <= 1e-10 * ref || zmax == 0.0)
        throw DegenerateError("rossby_s3: the " + std::string(sign > 0 ? "+" : "-") +
                              " branch vanishes identically for these indices (as z_+ does for d = 0, j, k >= 0)");
    finish(s);
    return s;
}

std::array<double, 4> s3_ambient_field(double rho, double phase, const std::array<double, 4>& x) {
    const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
    const std::array<double, 4> X{-x2, x1, -x4, x3};
    const std::array<double, 4> V1{-2.0 * x1 * x2, 2.0 * x1 * x1 - x3 * x3 - x4 * x4, x2 * x3 - 3.0 * x1 * x4,
                                   3.0 * x1 * x3 + x2 * x4};
    const std::array<double, 4> V2{x3 * x3 + x4 * x4 - 2.0 * x2 * x2, 2.0 * x1 * x2, -(x1 * x3 + 3.0 * x2 * x4),
                                   3.0 * x2 * x3 - x1 * x4};
    const double c = std::cos(phase), sn = std::sin(phase);
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = X[i] + rho * (c * V1[i] - sn * V2[i]);
    return out;
}

std::array<double, 4> embed_s3_to_r4(const ExactSolution& s, double t, const std::array<double, 4>& x) {
    const bool simplest = s.key == "rossby-s3" && s.params.size() == 4 && s.params[0].second == "1" &&
                          s.params[1].second == "0" && s.params[2].second == "0" && s.params[3].second == "-";
    if (!simplest) throw ArgumentError("embed_s3_to_r4: only the (j, k, d, sign) = (1, 0, 0, -) solution has an R^4 form");
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
    if (std::abs(r - 1.0) > 1e-12) throw DomainError("embed_s3_to_r4: point is not on the unit sphere");
    return s3_ambient_field(s.rho, s.phase(t), x);
}

namespace {

// Field assembly on the warped chart from radial profile values (f, g, h).
struct RadialTriple {
    double f, g, h;
};

// Stencils along theta and z revisit the same r, so a few recent radial values are kept per thread.
struct RadialMemo {
    std::function<RadialTriple(double)> fn;
    std::uint64_t id = 0;
};

std::atomic<std::uint64_t> memo_counter{0};

RadialTriple memo_eval(const RadialMemo* owner, double r) {
    struct Slot {
        std::uint64_t id = 0;
        double r = 0.0;
        RadialTriple v{};
    };
    constexpr std::size_t kSlots = 16;
    thread_local std::array<Slot, kSlots> slots{};
    thread_local std::size_t next = 0;
    for (const auto& s : slots)
        if (s.id == owner->id && s.r == r) return s.v;
    Slot& s = slots[next];
    next = (next + 1) % kSlots;
    s.id = owner->id;
    s.r = r;
    s.v = owner->fn(r);
    return s.v;
}

PairFn warped_pair(const WarpedProfile& prof, int n, int m, std::function<RadialTriple(double)> fn) {
    auto memo = std::make_shared<RadialMemo>(RadialMemo{std::move(fn), ++memo_counter});
    auto radial = [memo](double r) { return memo_eval(memo.get(), r); };
    const WarpFn phi = prof.phi;
    const double c = prof.c;
    const double dn = n, dm = m;
    return [phi, c, dn, dm, radial](const Point& p) {
        const auto ph = phi(p[0]);
        const RadialTriple q = radial(p[0]);
        const double p2 = ph[0] * ph[0], dp2 = ph[1] * ph[1];
        const double ang = dn * p[1] + dm * p[2];
        const double sn = std::sin(ang), cs = std::cos(ang);
        const double th = q.g / p2 - c * q.h / (p2 * dp2);
        const double zz = q.h / dp2;
        return std::make_pair(Vector{-q.f * sn, cs * th, cs * zz}, Vector{q.f * cs, sn * th, sn * zz});
    };
}

}  // namespace

ExactSolution ck_cylinder(int n, int m, int branch) {
    const DispersionRoot root = ck_dispersion_root(n, m, branch);
    ExactSolution s;
    s.key = "ck-cylinder";
    s.title = "Chandrasekhar-Kendall modes on the solid cylinder";
    s.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"branch", std::to_string(branch)}};
    WarpedProfile prof{linear_warp(), 0.0, 0.0, 1.0, "r"};
    s.manifold = warped_chart(prof);
    s.u0 = steady([](const Point&) { return Vector{0.0, 1.0, 0.0}; }, "d/dtheta");
    const double beta = root.beta, alpha = root.alpha;
    const double dn = n, dm = m;
    set_pair(s.eigen,
             warped_pair(prof, n, m,
                         [n, dn, dm, beta, alpha](double r) {
                             const double jv = bessel_j(n, beta * r);
                             const double jd = bessel_j_prime(n, beta * r);
                             const double g = beta * alpha * r * jd + dn * dm * jv;
                             const double h = -beta * beta * jv;
                             return RadialTriple{(dn * h - dm * g) / (alpha * r), g, h};
                         }),
             s.key);
    s.eigen.alpha = alpha;
    s.eigen.lambda = 2.0 * m / alpha;
    s.eigen.zeta = n;
    s.eigen.zeta_exact = Rational(n);
    if (m == 0) s.eigen.lambda_exact = Rational(0);
    s.notes.push_back("beta = " + fmt(beta));
    finish(s);
    return s;
}

ExactSolution twisted_annulus(const TwistedParams& tp) {
    if (tp.m == 0 && tp.n == 0) throw DegenerateError("twisted_annulus: (n, m) = (0, 0)");
    WarpedProfile prof{linear_warp(), tp.c, tp.a, tp.b, "r"};
    check_profile(prof);
    ExactSolution s;
    s.key = "twisted-annulus";
    s.title = "Twisted warped metric (c != 0) on a solid torus";
    s.params = {{"m", std::to_string(tp.m)}, {"n", std::to_string(tp.n)}, {"c", fmt(tp.c)},
                {"a", fmt(tp.a)},            {"b", fmt(tp.b)},            {"branch", std::to_string(tp.branch)}};
    s.manifold = warped_chart(prof);
    s.u0 = steady([](const Point&) { return Vector{0.0, 1.0, 0.0}; }, "d/dtheta");
    double alpha = 0.0;
    if (tp.n == 0) {
        const TwistedClosedForm cf = twisted_n0_mode(tp.c, tp.a, tp.b, tp.m, tp.branch);
        alpha = cf.alpha;
        set_pair(s.eigen,
                 warped_pair(prof, 0, tp.m,
                             [cf](double r) {
                                 const auto v = cf.fgh(r);
                                 return RadialTriple{v[0], v[1], v[2]};
                             }),
                 s.key);
        s.notes.push_back("closed form: nu = " + fmt(cf.nu) + ", k = " + fmt(cf.k));
    } else {
        std::vector<Interval> pos;
        for (const auto& br : scan_cmetric_brackets(prof, tp.n, tp.m))
            if (br.lo > 0.0) pos.push_back(br);
        if (tp.branch < 1 || static_cast<int>(pos.size()) < tp.branch)
            throw BracketError("twisted_annulus: branch " + std::to_string(tp.branch) + " not found in the alpha scan");
        std::sort(pos.begin(), pos.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
        auto mode = std::make_shared<CMetricMode>(
            solve_cmetric_mode(prof, tp.n, tp.m, pos[static_cast<std::size_t>(tp.branch - 1)]));
        alpha = mode->alpha;
        set_pair(s.eigen,
                 warped_pair(prof, tp.n, tp.m,
                             [mode](double r) {
                                 const auto q = mode->sample(r);
                                 return RadialTriple{q.f[0], q.g[0], q.h[0]};
                             }),
                 s.key);
        s.notes.push_back("shooting solve, boundary residual " + fmt(mode->boundary_residual));
    }
    s.eigen.alpha = alpha;
    s.eigen.lambda = 2.0 * tp.m / alpha;
    s.eigen.zeta = tp.n;
    s.eigen.zeta_exact = Rational(tp.n);
    finish(s);
    return s;
}

}  // namespace eulerwaves
