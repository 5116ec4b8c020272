#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eulerwaves/catalogue.hpp"
#include "eulerwaves/cli.hpp"
#include "eulerwaves/errors.hpp"
#include "eulerwaves/special_functions.hpp"
#include "eulerwaves/spectral.hpp"
#include "eulerwaves/tracer.hpp"
#include "eulerwaves/verification.hpp"

namespace py = pybind11;
using namespace eulerwaves;

namespace {

ParamMap to_params(const py::dict& d) {
    ParamMap out;
    for (const auto& [k, v] : d) {
        std::string value;
        if (py::isinstance<py::bool_>(v)) throw ArgumentError("boolean parameter values are not accepted");
        if (py::isinstance<py::float_>(v)) {
            std::ostringstream os;
            os.precision(17);
            os << v.cast<double>();
            value = os.str();
        } else {
            value = py::str(v).cast<std::string>();
        }
        out[py::str(k).cast<std::string>()] = value;
    }
    return out;
}

Point to_point(const std::vector<double>& x, int dim) {
    if (static_cast<int>(x.size()) != dim)
        throw ArgumentError("point needs " + std::to_string(dim) + " coordinates, got " + std::to_string(x.size()));
    Point p;
    for (int i = 0; i < dim; ++i) p[i] = x[static_cast<std::size_t>(i)];
    return p;
}

std::vector<double> from_vector(const Vector& v, int dim) { return {v.c.begin(), v.c.begin() + dim}; }

py::object rational_or_none(const std::optional<Rational>& r) {
    if (!r) return py::none();
    return py::str(r->str());
}

py::dict describe(const std::string& key, const py::dict& params) {
    const auto s = make_solution(key, to_params(params));
    py::dict d;
    d["key"] = s.key;
    d["title"] = s.title;
    py::dict p;
    for (const auto& [k, v] : s.params) p[py::str(k)] = v;
    d["params"] = p;
    d["manifold"] = s.manifold->name();
    d["coords"] = s.manifold->coord_names();
    d["dim"] = s.manifold->dim();
    d["rho"] = s.rho;
    d["sigma"] = s.sigma;
    d["alpha"] = s.eigen.alpha;
    d["lambda"] = s.eigen.lambda;
    d["zeta"] = s.eigen.zeta;
    d["omega"] = s.omega;
    d["alpha_exact"] = rational_or_none(s.eigen.alpha_exact);
    d["lambda_exact"] = rational_or_none(s.eigen.lambda_exact);
    d["zeta_exact"] = rational_or_none(s.eigen.zeta_exact);
    d["omega_exact"] = rational_or_none(s.omega_exact);
    d["classification"] = to_string(s.classification());
    return d;
}

std::string verify(const std::string& key, const py::dict& params, int grid, std::vector<double> times,
                   std::optional<double> tol, std::uint64_t seed, bool richardson) {
    const auto s = make_solution(key, to_params(params));
    VerifyConfig cfg;
    cfg.grid = grid;
    cfg.times = std::move(times);
    cfg.tol = tol;
    cfg.seed = seed;
    cfg.richardson = richardson;
    py::gil_scoped_release release;
    return verify_solution(s, cfg).to_json();
}

py::dict field(const std::string& key, const py::dict& params, double t, const std::vector<double>& x) {
    const auto s = make_solution(key, to_params(params));
    const int dim = s.manifold->dim();
    const Point p = to_point(x, dim);
    s.manifold->require_regular(p, "field");
    py::dict d;
    d["U_R"] = from_vector(s.real_field(t, p), dim);
    d["U_I"] = from_vector(s.linearized_field(t, p), dim);
    return d;
}

py::dict trace(const std::string& key, const py::dict& params, const std::vector<double>& x0, double t0, double t1,
               std::optional<double> dt, bool ambient) {
    const auto s = make_solution(key, to_params(params));
    const double step = dt ? *dt : default_dt(s);
    Trajectory tr;
    {
        py::gil_scoped_release release;
        if (ambient) {
            if (x0.size() != 4) throw ArgumentError("ambient start point needs 4 coordinates");
            tr = integrate_s3_ambient(s, {x0[0], x0[1], x0[2], x0[3]}, t0, t1, step);
        } else {
            tr = integrate_trajectory(s, to_point(x0, s.manifold->dim()), t0, t1, step);
        }
    }
    py::dict d;
    d["coords"] = tr.coord_names;
    d["t"] = tr.t;
    std::vector<std::vector<double>> xs;
    const int dim = ambient ? 4 : s.manifold->dim();
    for (std::size_t i = 0; i < tr.size(); ++i) {
        std::vector<double> row;
        for (int k = 0; k < dim; ++k)
            row.push_back(ambient ? tr.ambient[i][static_cast<std::size_t>(k)] : tr.x[i][k]);
        xs.push_back(std::move(row));
    }
    d["x"] = xs;
    d["status"] = to_string(tr.status);
    d["csv"] = tr.to_csv();
    return d;
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_eulerwaves, m) {
    m.doc() = "Exact non-stationary Euler solutions on Riemannian manifolds";
    m.attr("__version__") = kVersion;
    m.attr("DEFAULT_SEED") = kDefaultSeed;

    py::register_exception<Error>(m, "EulerWavesError", PyExc_RuntimeError);
    // Registered later, so tried first.
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ArgumentError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("catalogue", [] {
        py::list out;
        for (const auto& e : catalogue_entries()) {
            py::dict d;
            d["key"] = e.key;
            d["title"] = e.title;
            d["usage"] = e.usage;
            py::list ps;
            for (const auto& p : e.params) {
                py::dict q;
                q["name"] = p.name;
                q["kind"] = p.kind;
                q["default"] = p.default_value;
                q["help"] = p.help;
                ps.append(q);
            }
            d["params"] = ps;
            out.append(d);
        }
        return out;
    });
    m.def("list_text", &list_text);
    m.def("describe", &describe, py::arg("key"), py::arg("params") = py::dict());
    m.def("verify_json", &verify, py::arg("key"), py::arg("params") = py::dict(), py::arg("grid") = 0,
          py::arg("times") = std::vector<double>{}, py::arg("tol") = py::none(), py::arg("seed") = kDefaultSeed,
          py::arg("richardson") = true);
    m.def("field", &field, py::arg("key"), py::arg("params"), py::arg("t"), py::arg("x"));
    m.def("trace", &trace, py::arg("key"), py::arg("params"), py::arg("x0"), py::arg("t0") = 0.0,
          py::arg("t1") = 1.0, py::arg("dt") = py::none(), py::arg("ambient") = false);
    m.def("run_cli", &cli, py::arg("args"));

    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
    m.def("bessel_y", &bessel_y, py::arg("nu"), py::arg("x"));
    m.def("bessel_j_zero", &bessel_j_zero, py::arg("nu"), py::arg("m"));
    m.def("assoc_legendre", &assoc_legendre, py::arg("n"), py::arg("m"), py::arg("x"));
    m.def("jacobi_poly", &jacobi_poly, py::arg("d"), py::arg("q"), py::arg("p"), py::arg("x"));
    m.def(
        "ck_beta", [](int n, int m, int branch) { return ck_dispersion_root(n, m, branch).beta; }, py::arg("n"),
        py::arg("m"), py::arg("branch") = 1);
    m.def(
        "crossproduct_root", [](double nu, double a, double b, int branch) { return crossproduct_root(nu, a, b, branch).k; },
        py::arg("nu"), py::arg("a"), py::arg("b"), py::arg("branch") = 1);
    m.def(
        "twisted_alpha",
        [](double c, double a, double b, int m, int branch) { return twisted_n0_mode(c, a, b, m, branch).alpha; },
        py::arg("c"), py::arg("a"), py::arg("b"), py::arg("m"), py::arg("branch") = 1);
    m.def(
        "hyperbolic_beta", [](int n, double r_max, int branch) { return hyperbolic_radial_mode(n, r_max, branch).beta; },
        py::arg("n"), py::arg("r_max") = 1.0, py::arg("branch") = 1);
}
