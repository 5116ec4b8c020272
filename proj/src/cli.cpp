#include "eulerwaves/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "eulerwaves/special_functions.hpp"
#include "eulerwaves/tracer.hpp"
#include "eulerwaves/verification.hpp"
#include "json.hpp"

namespace eulerwaves {

namespace {

using J = nlohmann::ordered_json;

const std::vector<std::string> kParamNames = {"n", "m", "j", "k", "d", "sign", "branch", "c", "a", "b", "rho", "sigma"};

struct ParamFlags {
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> opts;

    void attach(CLI::App* app) {
        for (const auto& name : kParamNames)
            opts[name] = app->add_option("--" + name, values[name], "catalogue parameter " + name);
    }
    ParamMap collect() const {
        ParamMap out;
        for (const auto& [name, opt] : opts)
            if (opt->count() > 0) out[name] = values.at(name);
        return out;
    }
};

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (cell.empty() || *end != '\0') throw ArgumentError(std::string(what) + ": bad number '" + cell + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ArgumentError(std::string(what) + ": empty list");
    return out;
}

std::string g16(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

J describe_json(const ExactSolution& s) {
    J j;
    j["key"] = s.key;
    j["title"] = s.title;
    j["usage"] = catalogue_entry(s.key).usage;
    J p = J::object();
    for (const auto& [k, v] : s.params) p[k] = v;
    j["params"] = p;
    j["manifold"] = s.manifold->name();
    j["coords"] = s.manifold->coord_names();
    j["rho"] = s.rho;
    j["sigma"] = s.sigma;
    j["alpha"] = s.eigen.alpha;
    j["lambda"] = s.eigen.lambda;
    j["zeta"] = s.eigen.zeta;
    j["omega"] = s.omega;
    j["alpha_exact"] = s.eigen.alpha_exact ? J(s.eigen.alpha_exact->str()) : J(nullptr);
    j["lambda_exact"] = s.eigen.lambda_exact ? J(s.eigen.lambda_exact->str()) : J(nullptr);
    j["zeta_exact"] = s.eigen.zeta_exact ? J(s.eigen.zeta_exact->str()) : J(nullptr);
    j["omega_exact"] = s.omega_exact ? J(s.omega_exact->str()) : J(nullptr);
    j["classification"] = to_string(s.classification());
    J c = J::array();
    for (const auto& cand : s.candidates)
        c.push_back({{"quantity", cand.quantity}, {"label", cand.label}, {"value", cand.value}, {"adopted", cand.adopted}});
    j["candidates"] = c;
    j["notes"] = s.notes;
    return j;
}

std::string verify_text(const ResidualReport& r) {
    std::ostringstream os;
    os << r.key << " (" << r.title << ")\n";
    os << "  alpha = " << g16(r.alpha) << ", lambda = " << (r.lambda_exact ? r.lambda_exact->str() : g16(r.lambda))
       << ", zeta = " << g16(r.zeta) << ", omega = " << (r.omega_exact ? r.omega_exact->str() : g16(r.omega)) << ", "
       << to_string(r.classification) << "\n";
    for (const auto& c : r.checks) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "  %-6s %-18s ratio %.3e  tol %.1e", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                      c.ratio(), c.tol);
        os << buf;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    os << (r.all_pass() ? "all checks passed\n" : "some checks failed\n");
    return os.str();
}

}  // namespace

std::string list_text() {
    std::ostringstream os;
    for (const auto& e : catalogue_entries()) {
        os << e.usage << "\n    " << e.title << "\n";
        for (const auto& p : e.params)
            os << "    --" << p.name << " <" << p.kind << "> default " << p.default_value << ": " << p.help << "\n";
    }
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rotating-wave Euler solutions on Riemannian manifolds", "euler_waves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* list = app.add_subcommand("list", "list catalogue entries and their parameters");

    ParamFlags describe_params;
    std::string describe_key, describe_format = "text";
    auto* describe = app.add_subcommand("describe", "spectral data and classification of one entry");
    describe->add_option("key", describe_key, "catalogue key")->required();
    describe->add_option("--format", describe_format)->check(CLI::IsMember({"text", "json"}));
    describe_params.attach(describe);

    ParamFlags verify_params;
    std::string verify_key, times_s, out_path, verify_format = "json";
    int grid = 0;
    double tol = 0.0;
    std::uint64_t seed = kDefaultSeed;
    bool no_richardson = false;
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("key", verify_key, "catalogue key")->required();
    verify->add_option("--grid", grid, "samples per coordinate")->check(CLI::PositiveNumber);
    verify->add_option("--times", times_s, "comma separated sample times");
    auto* tol_opt = verify->add_option("--tol", tol, "override finite-difference tolerances")->check(CLI::PositiveNumber);
    verify->add_option("--out", out_path, "JSON report path");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_flag("--no-richardson", no_richardson, "skip the half-step pass");
    verify_params.attach(verify);

    auto* eigen = app.add_subcommand("eigen", "spectral solvers");
    eigen->require_subcommand(1);
    std::string eigen_out, eigen_format = "text";
    int en = 0, em = 1, ebranch = 1;
    double enu = 0.5, ea = 2.0 * kPi / 3.0, eb = 2.0 * kPi, ec = -0.3;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", eigen_out, "JSON output path");
        sub->add_option("--format", eigen_format)->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--branch", ebranch, "root index")->check(CLI::PositiveNumber);
    };
    auto* disk_beta = eigen->add_subcommand("disk-beta", "zero m of J_n");
    disk_beta->add_option("--n", en);
    disk_beta->add_option("--m", em)->check(CLI::PositiveNumber);
    add_common(disk_beta);
    auto* ck_beta = eigen->add_subcommand("ck-beta", "solid-cylinder curl eigenvalue");
    ck_beta->add_option("--n", en);
    ck_beta->add_option("--m", em);
    add_common(ck_beta);
    auto* cross = eigen->add_subcommand("crossproduct", "root k of J_nu(ka) Y_nu(kb) - J_nu(kb) Y_nu(ka)");
    cross->add_option("--nu", enu);
    cross->add_option("--a", ea);
    cross->add_option("--b", eb);
    add_common(cross);
    auto* cmetric = eigen->add_subcommand("cmetric", "twisted warped-metric curl eigenvalue by shooting");
    cmetric->add_option("--n", en);
    cmetric->add_option("--m", em);
    cmetric->add_option("--c", ec);
    cmetric->add_option("--a", ea);
    cmetric->add_option("--b", eb);
    add_common(cmetric);

    ParamFlags trace_params;
    std::string trace_key, x0_s, trace_out, trace_format = "csv";
    double t0 = 0.0, t1 = 2.0 * kPi, dt = 0.0, closure_radius = 0.0;
    bool ambient = false;
    auto* trace = app.add_subcommand("trace", "particle trajectory of U_R");
    trace->add_option("key", trace_key, "catalogue key")->required();
    trace->add_option("--x0", x0_s, "start point, comma separated chart coordinates")->required();
    trace->add_option("--t0", t0);
    trace->add_option("--t1", t1);
    trace->add_option("--dt", dt, "step (default 1e-3 of the characteristic period)");
    trace->add_option("--out", trace_out, "output path");
    trace->add_option("--format", trace_format)->check(CLI::IsMember({"csv", "json"}));
    trace->add_option("--closure", closure_radius, "report the first return within this radius");
    trace->add_flag("--ambient", ambient, "integrate in R^4 (rossby-s3 1 0 0 - only)");
    trace_params.attach(trace);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (list->parsed()) {
            out << list_text();
            return kExitPass;
        }
        if (describe->parsed()) {
            const ExactSolution s = make_solution(describe_key, describe_params.collect());
            const J j = describe_json(s);
            if (describe_format == "json") {
                out << j.dump(2) << "\n";
            } else {
                out << s.key << ": " << s.title << "\n";
                out << "  manifold " << s.manifold->name() << ", params";
                for (const auto& [k, v] : s.params) out << " " << k << "=" << v;
                out << "\n  alpha = " << (s.eigen.alpha_exact ? s.eigen.alpha_exact->str() : g16(s.eigen.alpha))
                    << "\n  lambda = " << (s.eigen.lambda_exact ? s.eigen.lambda_exact->str() : g16(s.eigen.lambda))
                    << "\n  zeta = " << g16(s.eigen.zeta)
                    << "\n  omega = " << (s.omega_exact ? s.omega_exact->str() : g16(s.omega))
                    << "\n  classification: " << to_string(s.classification()) << "\n";
                for (const auto& n : s.notes) out << "  note: " << n << "\n";
            }
            return kExitPass;
        }
        if (verify->parsed()) {
            const ExactSolution s = make_solution(verify_key, verify_params.collect());
            VerifyConfig cfg;
            cfg.grid = grid;
            if (!times_s.empty()) cfg.times = parse_list(times_s, "--times");
            if (tol_opt->count() > 0) cfg.tol = tol;
            cfg.seed = seed;
            cfg.richardson = !no_richardson;
            const auto start = std::chrono::steady_clock::now();
            const ResidualReport r = verify_solution(s, cfg);
            const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const std::string json = r.to_json();
            if (!out_path.empty()) write_text(out_path, json);
            if (verify_format == "text")
                out << verify_text(r);
            else if (out_path.empty())
                out << json;
            err << "wall time " << g16(wall) << " s\n";
            return r.all_pass() ? kExitPass : kExitCheckFailure;
        }
        if (eigen->parsed()) {
            J j;
            std::string text;
            if (disk_beta->parsed()) {
                const double beta = bessel_j_zero(std::abs(en), em);
                j = {{"problem", "disk-beta"}, {"n", en}, {"m", em}, {"beta", beta}, {"alpha", beta * beta}};
                text = "beta = " + g16(beta) + "\n";
            } else if (ck_beta->parsed()) {
                const DispersionRoot r = ck_dispersion_root(en, em, ebranch);
                j = {{"problem", "ck-beta"}, {"n", en},        {"m", em},
                     {"branch", ebranch},    {"beta", r.beta}, {"alpha", r.alpha}, {"residual", r.residual}};
                text = "beta = " + g16(r.beta) + ", alpha = " + g16(r.alpha) + "\n";
            } else if (cross->parsed()) {
                const CrossRoot r = crossproduct_root(enu, ea, eb, ebranch);
                j = {{"problem", "crossproduct"}, {"nu", enu}, {"a", ea},           {"b", eb},
                     {"branch", ebranch},         {"k", r.k},  {"residual", r.residual}};
                text = "k = " + g16(r.k) + "\n";
            } else {
                WarpedProfile prof{linear_warp(), ec, ea, eb, "r"};
                check_profile(prof);
                std::vector<Interval> pos;
                for (const auto& br : scan_cmetric_brackets(prof, en, em))
                    if (br.lo > 0.0) pos.push_back(br);
                std::sort(pos.begin(), pos.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
                if (static_cast<int>(pos.size()) < ebranch)
                    throw BracketError("cmetric: branch " + std::to_string(ebranch) + " not found in the alpha scan");
                const CMetricMode mode = solve_cmetric_mode(prof, en, em, pos[static_cast<std::size_t>(ebranch - 1)]);
                j = {{"problem", "cmetric"}, {"n", en},          {"m", em},           {"c", ec},
                     {"a", ea},              {"b", eb},          {"branch", ebranch}, {"alpha", mode.alpha},
                     {"boundary_residual", mode.boundary_residual}};
                text = "alpha = " + g16(mode.alpha) + "\n";
                if (en == 0) {
                    const TwistedClosedForm cf = twisted_n0_mode(ec, ea, eb, em, ebranch);
                    j["alpha_closed_form"] = cf.alpha;
                    j["nu"] = cf.nu;
                    j["k"] = cf.k;
                    text += "closed form alpha = " + g16(cf.alpha) + " (nu = " + g16(cf.nu) + ", k = " + g16(cf.k) + ")\n";
                }
            }
            j["schema"] = 1;
            j["version"] = kVersion;
            const std::string json = j.dump(2) + "\n";
            if (!eigen_out.empty()) write_text(eigen_out, json);
            out << (eigen_format == "json" ? json : text);
            return kExitPass;
        }
        if (trace->parsed()) {
            const ExactSolution s = make_solution(trace_key, trace_params.collect());
            const auto xs = parse_list(x0_s, "--x0");
            const double step = dt > 0.0 ? dt : default_dt(s);
            Trajectory tr;
            if (ambient) {
                if (xs.size() != 4) throw ArgumentError("--x0 needs four coordinates with --ambient");
                tr = integrate_s3_ambient(s, {xs[0], xs[1], xs[2], xs[3]}, t0, t1, step);
            } else {
                if (static_cast<int>(xs.size()) != s.manifold->dim())
                    throw ArgumentError("--x0 needs " + std::to_string(s.manifold->dim()) + " coordinates");
                Point p;
                for (std::size_t i = 0; i < xs.size(); ++i) p[static_cast<int>(i)] = xs[i];
                tr = integrate_trajectory(s, p, t0, t1, step);
            }
            std::string text;
            if (trace_format == "csv") {
                text = tr.to_csv();
            } else {
                J j;
                j["schema"] = 1;
                j["version"] = kVersion;
                j["solution"] = s.key;
                j["coords"] = tr.coord_names;
                j["dt"] = tr.dt;
                j["status"] = to_string(tr.status);
                J rows = J::array();
                for (std::size_t i = 0; i < tr.size(); ++i) {
                    J row = J::array({tr.t[i]});
                    for (std::size_t k = 0; k < tr.coord_names.size(); ++k)
                        row.push_back(tr.is_ambient() ? tr.ambient[i][k] : tr.x[i][static_cast<int>(k)]);
                    rows.push_back(row);
                }
                j["samples"] = rows;
                text = j.dump(2) + "\n";
            }
            if (trace_out.empty())
                out << text;
            else
                write_text(trace_out, text);
            if (closure_radius > 0.0) {
                const auto c = closure_test(tr, ambient ? nullptr : s.manifold.get(), closure_radius);
                if (c)
                    err << "closure (heuristic): return after t = " << g16(c->period) << " at distance "
                        << g16(c->distance) << "\n";
                else
                    err << "closure (heuristic): no return within radius " << g16(closure_radius) << "\n";
            }
            err << "status: " << to_string(tr.status) << "\n";
            return kExitPass;
        }
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverError;
    }
    return kExitUsage;
}

}  // namespace eulerwaves
