// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eulerwaves/catalogue.hpp"
#include "eulerwaves/charts.hpp"
#include "eulerwaves/cli.hpp"
#include "eulerwaves/special_functions.hpp"
#include "eulerwaves/spectral.hpp"
#include "eulerwaves/verification.hpp"

using namespace eulerwaves;

namespace {

constexpr double kEulerTol2D = 1e-5;
constexpr double kEulerTol3D = 1e-4;
constexpr double kWallBudget = 30.0;    // seconds per entry
constexpr double kPowerFactor = 10.0;   // perturbed residual must exceed this times the tolerance
constexpr double kLambdaTol = 1e-5;
constexpr double kTwistedAlphaTol = 1e-8;
constexpr double kCrossTol = 1e-10;
constexpr double kProfileTol = 1e-7;
constexpr double kCkProfileTol = 1e-8;
constexpr double kEnergyTol = 1e-6;
constexpr double kDivergenceTol = 1e-6;
constexpr double kTangencyTol = 1e-8;
constexpr double kSkewTol = 1e-8;
constexpr double kZeroTol = 1e-10;
constexpr double kIdentityTol = 1e-10;

const double kA = 2.0 * kPi / 3.0;
const double kB = 2.0 * kPi;

struct Entry {
    ExactSolution s;
    ResidualReport report;
    double seconds = 0.0;
};

const CheckResult* find(const ResidualReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

void line(int n, bool pass, const std::string& what, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n    %s\n", n, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

double std_zero(double nu, double lo, double hi) {
    double flo = std::cyl_bessel_j(nu, lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi), fm = std::cyl_bessel_j(nu, mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Max deviation of (gs, hs) from one global multiple of (g, h), relative to the sup of each profile.
std::pair<double, double> scaled_deviation(const std::vector<double>& g, const std::vector<double>& h,
                                           const std::vector<double>& gs, const std::vector<double>& hs) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        num += gs[i] * g[i] + hs[i] * h[i];
        den += g[i] * g[i] + h[i] * h[i];
    }
    const double s = num / den;
    double gmax = 0.0, hmax = 0.0, gdev = 0.0, hdev = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        gmax = std::max(gmax, std::abs(s * g[i]));
        hmax = std::max(hmax, std::abs(s * h[i]));
        gdev = std::max(gdev, std::abs(gs[i] - s * g[i]));
        hdev = std::max(hdev, std::abs(hs[i] - s * h[i]));
    }
    return {gdev / gmax, hdev / hmax};
}

Interval bracket_containing(const WarpedProfile& prof, int n, int m, double alpha) {
    for (const auto& b : scan_cmetric_brackets(prof, n, m))
        if (b.lo <= alpha && b.hi >= alpha) return b;
    return {0.0, 0.0};
}

}  // namespace

int main() {
    int failures = 0;
    auto record = [&](int n, bool pass, const std::string& what, const std::string& detail) {
        if (!pass) ++failures;
        line(n, pass, what, detail);
    };

    std::vector<Entry> entries;
    for (auto make : std::vector<std::function<ExactSolution()>>{
             [] { return kelvin_torus(1, 2); }, [] { return kelvin_disk(1, 1); }, [] { return rossby_sphere(1, 2); },
             [] { return kelvin_hyperbolic(1, 1); }, [] { return rossby_s3(1, 0, 0, -1); },
             [] { return ck_cylinder(1, 1, 1); }, [] { return twisted_annulus(); }}) {
        Entry e;
        const auto t0 = std::chrono::steady_clock::now();
        e.s = make();
        e.report = verify_solution(e.s);
        e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        entries.push_back(std::move(e));
    }

    // 1. Euler residual exactness and test power.
    {
        bool ok = true;
        std::ostringstream d;
        for (const auto& e : entries) {
            const double tol = e.s.manifold->dim() == 2 ? kEulerTol2D : kEulerTol3D;
            const CheckResult* c = find(e.report, "euler");
            VerifyConfig cfg;
            cfg.richardson = false;
            const auto bad = euler_residual(e.s.with_omega(1.1 * e.s.omega), cfg);
            const bool pass = c && c->ratio() <= tol && e.seconds <= kWallBudget && bad.ratio() >= kPowerFactor * tol;
            ok = ok && pass;
            d << e.s.key << " " << (c ? sci(c->ratio()) : "missing") << " (" << sci(e.seconds)
              << " s, perturbed " << sci(bad.ratio()) << "); ";
        }
        record(1, ok, "Euler residual <= 1e-5 (2D) / 1e-4 (3D), <= 30 s per entry, 10% omega shift >= 10x tol",
               d.str());
    }

    // 2. Spectral data reproduction.
    {
        bool ok = true;
        std::ostringstream d;
        for (int m = 1; m <= 4; ++m)
            for (int n = -m; n <= m; ++n) {
                const auto s = rossby_sphere(n, m);
                const Rational want(2 * n, m * (m + 1));
                if (!s.eigen.lambda_exact || !(*s.eigen.lambda_exact == want)) ok = false;
            }
        const auto rs = entries[2].report;
        const CheckResult* co = find(rs, "eigen.coadjoint");
        const bool lam = rs.lambda_exact && *rs.lambda_exact == Rational(1, 3) && co && co->ratio() <= kLambdaTol;
        ok = ok && lam;
        d << "sphere(1,2) lambda = " << (rs.lambda_exact ? rs.lambda_exact->str() : "?") << " coadjoint "
          << (co ? sci(co->ratio()) : "missing") << "; ";
        const auto& s3 = entries[4].s;
        const bool om = s3.omega_exact && *s3.omega_exact == Rational(-1, 3);
        ok = ok && om;
        d << "s3 omega = " << (s3.omega_exact ? s3.omega_exact->str() : "?") << "; ";
        const double al = entries[6].s.eigen.alpha;
        ok = ok && std::abs(al - 1.25) <= kTwistedAlphaTol;
        d << "twisted alpha - 5/4 = " << sci(al - 1.25) << "; ";
        const double k = crossproduct_root(0.5, kA, kB, 1).k;
        ok = ok && std::abs(k - 0.75) <= kCrossTol;
        d << "crossproduct k - 3/4 = " << sci(k - 0.75);
        record(2, ok, "exact lambda = 2n/(m(m+1)), S3 omega = -1/3, twisted alpha = 5/4, cross-product k = 3/4",
               d.str());
    }

    // 3. Stationarity classification table.
    {
        struct Row {
            std::string label;
            ExactSolution s;
            Classification want;
        };
        const auto S = Classification::Stationary, T = Classification::MovingFrameTrivial,
                   G = Classification::Genuine;
        std::vector<Row> rows = {
            {"torus(0,1)", kelvin_torus(0, 1), S},   {"torus(0,3)", kelvin_torus(0, 3), S},
            {"torus(1,2)", kelvin_torus(1, 2), T},   {"torus(2,0)", kelvin_torus(2, 0), T},
            {"disk(0,1)", kelvin_disk(0, 1), S},     {"disk(1,1)", kelvin_disk(1, 1), T},
            {"disk(2,1)", kelvin_disk(2, 1), T},     {"sphere(0,2)", rossby_sphere(0, 2), S},
            {"sphere(1,1)", rossby_sphere(1, 1), S}, {"sphere(1,2)", rossby_sphere(1, 2), G},
            {"sphere(2,3)", rossby_sphere(2, 3), G}, {"sphere(-1,1)", rossby_sphere(-1, 1), S},
        };
        int good = 0;
        std::ostringstream d;
        VerifyConfig cfg;
        cfg.grid = 10;
        for (const auto& r : rows) {
            const bool verdict = r.s.classification() == r.want && stationarity_check(r.s, cfg).pass;
            if (verdict) ++good;
            else d << r.label << " mismatch; ";
        }
        d << good << "/" << rows.size() << " verdicts match";
        record(3, good == static_cast<int>(rows.size()), "classification table of 12 parameter choices", d.str());
    }

    // 4. Linearized companion.
    {
        bool ok = true;
        std::ostringstream d;
        for (const auto& e : entries) {
            const double tol = e.s.manifold->dim() == 2 ? kEulerTol2D : kEulerTol3D;
            const CheckResult* c = find(e.report, "linearized");
            ok = ok && c && c->ratio() <= tol;
            d << e.s.key << " " << (c ? sci(c->ratio()) : "missing") << "; ";
        }
        record(4, ok, "linearized residual within the criterion-1 tolerances", d.str());
    }

    // 5. Closed-form cross-validation of the shooting solver.
    {
        std::vector<double> g, h, gs, hs;
        const WarpedProfile prof{linear_warp(), -0.3, kA, kB, "r"};
        const auto br = bracket_containing(prof, 0, 1, 1.25);
        const auto mode = solve_cmetric_mode(prof, 0, 1, br);
        for (int i = 0; i <= 400; ++i) {
            const double r = kA + (kB - kA) * i / 400.0;
            g.push_back(5.0 * std::sqrt(r) * std::cos(0.75 * r));
            h.push_back(-3.0 / std::sqrt(r) * std::sin(0.75 * r) + 2.0 * std::pow(r, -1.5) * std::cos(0.75 * r));
            gs.push_back(mode.g(r));
            hs.push_back(mode.h(r));
        }
        const auto [gd, hd] = scaled_deviation(g, h, gs, hs);

        const int n = 1, m = 1;
        const WarpedProfile flat{linear_warp(), 0.0, kA, kB, "r"};
        const auto ref = ck_annulus_dispersion_root(n, m, kA, kB, 1);
        const auto ck = solve_cmetric_mode(flat, n, m, bracket_containing(flat, n, m, ref.alpha));
        const double al = ref.alpha, be = ref.beta;
        auto Jp = [](double x) { return 0.5 * (std::cyl_bessel_j(0.0, x) - std::cyl_bessel_j(2.0, x)); };
        auto Yp = [](double x) { return 0.5 * (std::cyl_neumann(0.0, x) - std::cyl_neumann(2.0, x)); };
        const double bj = n * al * std::cyl_bessel_j(1.0, be * kA) + m * be * kA * Jp(be * kA);
        const double by = n * al * std::cyl_neumann(1.0, be * kA) + m * be * kA * Yp(be * kA);
        g.clear(), h.clear(), gs.clear(), hs.clear();
        for (int i = 0; i <= 400; ++i) {
            const double r = kA + (kB - kA) * i / 400.0;
            const double Z = by * std::cyl_bessel_j(1.0, be * r) - bj * std::cyl_neumann(1.0, be * r);
            const double dZ = be * (by * Jp(be * r) - bj * Yp(be * r));
            h.push_back(be * be * Z);
            g.push_back(-(al * r * dZ + m * n * Z));
            gs.push_back(ck.g(r));
            hs.push_back(ck.h(r));
        }
        const auto [cg, chh] = scaled_deviation(g, h, gs, hs);
        const double dal = std::abs(ck.alpha - al);
        const bool ok = gd <= kProfileTol && hd <= kProfileTol && cg <= kCkProfileTol && chh <= kCkProfileTol &&
                        dal <= kCkProfileTol;
        record(5, ok, "shooting g, h match closed forms (twisted <= 1e-7, c = 0 <= 1e-8)",
               "twisted g " + sci(gd) + " h " + sci(hd) + "; c = 0 g " + sci(cg) + " h " + sci(chh) + " alpha " +
                   sci(dal));
    }

    // 6. Conservation and constraints.
    {
        bool ok = true;
        std::ostringstream d;
        for (const auto& e : entries) {
            const CheckResult* en = find(e.report, "energy");
            const CheckResult* dv = find(e.report, "divergence");
            const CheckResult* tg = find(e.report, "tangency");
            ok = ok && en && en->ratio() <= kEnergyTol && dv && dv->ratio() <= kDivergenceTol;
            if (!e.s.manifold->boundary().empty()) ok = ok && tg && tg->ratio() <= kTangencyTol;
            d << e.s.key << " E " << (en ? sci(en->ratio()) : "-") << " div " << (dv ? sci(dv->ratio()) : "-")
              << " tan " << (tg ? sci(tg->ratio()) : "-") << "; ";
        }
        record(6, ok, "energy <= 1e-6 over a period, divergence <= 1e-6, boundary tangency <= 1e-8", d.str());
    }

    // 7. Skew-adjointness by quadrature.
    {
        const auto torus = flat_torus2();
        std::uint64_t st = kDefaultSeed;
        double worst = 0.0;
        bool ok = true;
        for (int k = 0; k < 20; ++k) {
            const auto u = random_fourier_field(st), v = random_fourier_field(st);
            const auto r = skew_adjoint_quadrature(*torus, u, v, kSkewTol);
            worst = std::max(worst, r.ratio());
            ok = ok && r.pass && r.ratio() <= kSkewTol;
        }
        record(7, ok, "<A^-1 u, [v, u]> vanishes on the flat torus for 20 random Fourier pairs",
               "worst normalized value " + sci(worst));
    }

    // 8. Special-function floor.
    {
        const double e01 = std::abs(bessel_j_zero(0, 1) - std_zero(0, 2.0, 3.0));
        const double e11 = std::abs(bessel_j_zero(1, 1) - std_zero(1, 3.0, 4.5));
        std::uint64_t st = kDefaultSeed + 1;
        double wr = 0.0, rc = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double nu = 1.0 + 10.0 * uniform01(st);
            const double x = 0.2 + 40.0 * uniform01(st);
            const auto z = bessel_jy(nu, x);
            const double scale = std::max(1.0, std::abs(z.j * z.yp) + std::abs(z.jp * z.y));
            wr = std::max(wr, std::abs(z.j * z.yp - z.jp * z.y - 2.0 / (kPi * x)) / scale);
            const double rhs = 2.0 * nu / x * z.j;
            rc = std::max(rc, std::abs(bessel_j(nu - 1, x) + bessel_j(nu + 1, x) - rhs) / std::max(1.0, std::abs(rhs)));
        }
        const bool ok = e01 <= kZeroTol && e11 <= kZeroTol && wr <= kIdentityTol && rc <= kIdentityTol;
        record(8, ok, "Bessel zeros vs bisection <= 1e-10; Wronskian and recurrence <= 1e-10 at 100 points",
               "j01 " + sci(e01) + " j11 " + sci(e11) + " wronskian " + sci(wr) + " recurrence " + sci(rc));
    }

    // 9. Determinism of verify reports.
    {
        const std::string p1 = "acceptance_report_1.json", p2 = "acceptance_report_2.json";
        std::ostringstream out, err;
        const int c1 = run_cli({"verify", "rossby-sphere", "--n", "1", "--m", "2", "--out", p1}, out, err);
        const int c2 = run_cli({"verify", "rossby-sphere", "--n", "1", "--m", "2", "--out", p2}, out, err);
        auto slurp = [](const std::string& p) {
            std::ifstream in(p);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        const std::string a = slurp(p1), b = slurp(p2);
        std::remove(p1.c_str());
        std::remove(p2.c_str());
        const bool ok = c1 == 0 && c2 == 0 && !a.empty() && a == b;
        record(9, ok, "identical verify configurations give byte-identical JSON",
               std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different"));
    }

    std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
