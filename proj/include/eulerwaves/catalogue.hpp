#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerwaves/charts.hpp"
#include "eulerwaves/manifold.hpp"
#include "eulerwaves/spectral.hpp"
#include "eulerwaves/types.hpp"

namespace eulerwaves {

/// Real and imaginary parts of a complex eigenfield z = v + i w with
/// A z = alpha z, [u0, z] = i zeta z and K z = -i lambda z.
struct ComplexEigenfield {
    TimeVaryingField v;
    TimeVaryingField w;
    /// (v, w) evaluated together; shares work such as Bessel evaluations.
    std::function<std::pair<Vector, Vector>(const Point&)> pair;
    double alpha = 0.0;
    double lambda = 0.0;
    double zeta = 0.0;
    std::optional<Rational> alpha_exact;
    std::optional<Rational> lambda_exact;
    std::optional<Rational> zeta_exact;
    std::optional<StreamFunction> stream_v;
    std::optional<StreamFunction> stream_w;
};

enum class Classification { Stationary, MovingFrameTrivial, Genuine };

std::string to_string(Classification c);

/// Competing value of a spectral quantity, kept so verification can record which one holds.
struct SpectralCandidate {
    std::string quantity;  ///< "alpha" or "lambda"
    std::string label;     ///< where the candidate comes from
    double value = 0.0;
    bool adopted = false;
};

struct ExactSolution {
    std::string key;
    std::string title;
    std::vector<std::pair<std::string, std::string>> params;
    ManifoldPtr manifold;
    TimeVaryingField u0;
    std::optional<StreamFunction> stream_u0;
    ComplexEigenfield eigen;
    double rho = 1.0;
    double sigma = 0.0;
    double omega = 0.0;
    std::optional<Rational> omega_exact;
    std::vector<SpectralCandidate> candidates;
    std::vector<std::string> notes;

    double phase(double t) const { return sigma + omega * t; }

    /// U_R = u0 + rho cos(sigma + omega t) v - rho sin(sigma + omega t) w.
    Vector real_field(double t, const Point& p) const;
    Vector real_field_dt(double t, const Point& p) const;
    /// U_I = rho sin(sigma + omega t) v + rho cos(sigma + omega t) w.
    Vector linearized_field(double t, const Point& p) const;
    Vector linearized_field_dt(double t, const Point& p) const;

    TimeVaryingField real() const;
    TimeVaryingField linearized() const;
    /// Stream functions of U_R and U_I (2D entries only).
    std::optional<StreamFunction> real_stream() const;
    std::optional<StreamFunction> linearized_stream() const;

    Classification classification() const;
    bool stationary() const { return classification() == Classification::Stationary; }
    /// Copy with new amplitude and phase.
    ExactSolution with_amplitude(double rho, double sigma) const;
    /// Copy with omega replaced (used by power tests).
    ExactSolution with_omega(double omega) const;
};

/// Classification from the spectral data alone: stationary iff lambda == zeta,
/// moving-frame-trivial iff lambda == 0 != zeta.
Classification stationarity_classifier(const ExactSolution& s);

ExactSolution kelvin_torus(int n, int m);
ExactSolution kelvin_disk(int n, int m);
ExactSolution rossby_sphere(int n, int m);
ExactSolution kelvin_hyperbolic(int n, int m);
ExactSolution rossby_s3(int j, int k, int d, int sign);
ExactSolution ck_cylinder(int n, int m, int branch = 1);

struct TwistedParams {
    int m = 1;
    int n = 0;
    double c = -0.3;
    double a = 2.0 * kPi / 3.0;
    double b = 2.0 * kPi;
    int branch = 1;
};
ExactSolution twisted_annulus(const TwistedParams& p = {});

/// Complex Laplacian eigenfunction data for the curl-eigenfield construction:
/// value and chart partials of f at a point.
struct ComplexScalarSample {
    std::complex<double> f;
    std::array<std::complex<double>, kMaxDim> df;
};
using ComplexScalarFn = std::function<ComplexScalarSample(const Point&)>;

/// z = alpha^2 f X + alpha grad f x X + i n grad f with alpha = eps +/- sqrt(eps^2 + delta^2),
/// lambda = 2 n eps / alpha, zeta = n. `scale` multiplies z.
ComplexEigenfield build_ck_eigenfield(ManifoldPtr m, const VectorFieldFn& x, const ComplexScalarFn& f,
                                      double eps, double delta2, int n, int sign, double scale = 1.0);

/// Ambient R^4 field of the (1,0,0,-) S^3 solution at a point on the unit sphere.
std::array<double, 4> embed_s3_to_r4(const ExactSolution& s, double t, const std::array<double, 4>& x);
/// Same polynomial field without the on-sphere check (for integrators whose stages leave the sphere).
std::array<double, 4> s3_ambient_field(double rho, double phase, const std::array<double, 4>& x);

// Registry used by the CLI and bindings.

struct ParamSpec {
    std::string name;
    std::string kind;  ///< "int" or "real"
    std::string default_value;
    std::string help;
};

struct CatalogueEntry {
    std::string key;
    std::string title;
    std::string usage;
    std::vector<ParamSpec> params;
};

const std::vector<CatalogueEntry>& catalogue_entries();
const CatalogueEntry& catalogue_entry(const std::string& key);

using ParamMap = std::map<std::string, std::string>;
/// Builds a catalogue solution; unknown parameter names raise ArgumentError.
ExactSolution make_solution(const std::string& key, const ParamMap& params);

}  // namespace eulerwaves
