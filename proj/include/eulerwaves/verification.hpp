#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eulerwaves/catalogue.hpp"
#include "eulerwaves/quadrature.hpp"

namespace eulerwaves {

inline constexpr std::uint64_t kDefaultSeed = 0x45554C52ULL;
inline constexpr const char* kVersion = "0.1.0";

struct VerifyConfig {
    int grid = 0;                    ///< samples per coordinate; 0 picks 24 (2D) or 12 (3D)
    std::vector<double> times;       ///< empty picks {0, 0.7, 1.9, 2 pi/|omega|}
    std::optional<double> tol;       ///< overrides every finite-difference tolerance
    std::uint64_t seed = kDefaultSeed;
    int random_samples = 16;         ///< seeded extra interior points
    bool richardson = true;          ///< repeat FD checks at h/2
    DiffScheme scheme;
};

struct CheckResult {
    std::string name;
    double sup = 0.0;
    double mean = 0.0;
    double normalizer = 1.0;
    double tol = 0.0;
    bool pass = false;
    int samples = 0;
    /// Relative residual at half step, if a Richardson pass ran.
    std::optional<double> sup_half;
    std::string detail;

    double ratio() const { return sup / normalizer; }
};

struct CandidateOutcome {
    SpectralCandidate candidate;
    std::string check;
    double ratio = 0.0;
    bool pass = false;
};

struct ResidualReport {
    std::string key;
    std::string title;
    std::vector<std::pair<std::string, std::string>> params;
    int dim = 2;
    int grid = 0;
    int points = 0;
    std::vector<double> times;
    std::uint64_t seed = kDefaultSeed;
    double step_factor = 0.0;
    std::optional<double> tol_override;
    bool richardson = true;
    double alpha = 0.0, lambda = 0.0, zeta = 0.0, omega = 0.0;
    std::optional<Rational> alpha_exact, lambda_exact, zeta_exact, omega_exact;
    double rho = 0.0, sigma = 0.0;
    Classification classification = Classification::Genuine;
    std::vector<CheckResult> checks;
    std::vector<CandidateOutcome> candidates;
    std::vector<std::string> notes;

    bool all_pass() const;
    /// Deterministic JSON text (no timing data).
    std::string to_json() const;
};

/// Cell-centered samples, shrunk away from singular loci and from boundaries by the FD reach,
/// plus `random_samples` seeded points.
std::vector<Point> interior_samples(const ChartedManifold& m, const VerifyConfig& cfg);
/// Samples on each declared boundary component.
std::vector<Point> boundary_samples(const ChartedManifold& m, const VerifyConfig& cfg);
std::vector<double> default_times(const ExactSolution& s);

/// A v = alpha v, [u0, v] = -zeta w, [v, A u0] = lambda A w (and the w partners).
std::vector<CheckResult> check_eigen_relations(const ExactSolution& s, const VerifyConfig& cfg = {});
CheckResult euler_residual_2d(const ExactSolution& s, const VerifyConfig& cfg = {});
CheckResult euler_residual_3d(const ExactSolution& s, const VerifyConfig& cfg = {});
CheckResult euler_residual(const ExactSolution& s, const VerifyConfig& cfg = {});
CheckResult linearized_residual(const ExactSolution& s, const VerifyConfig& cfg = {});
CheckResult conservation_check(const ExactSolution& s, const VerifyConfig& cfg = {});
/// Divergence at interior samples and g(U, nu) at boundary samples.
std::vector<CheckResult> constraint_check(const ExactSolution& s, const VerifyConfig& cfg = {});
/// Classification from (lambda, zeta) against a finite-difference time derivative of U_R.
CheckResult stationarity_check(const ExactSolution& s, const VerifyConfig& cfg = {});
/// Runs the eigen relation that each candidate affects with the candidate value substituted.
std::vector<CandidateOutcome> resolve_candidates(const ExactSolution& s, const VerifyConfig& cfg = {});

ResidualReport verify_solution(const ExactSolution& s, const VerifyConfig& cfg = {});

// Flat-torus Fourier fields with exact inverse Laplacian.

struct FourierMode {
    int kx = 0;
    int ky = 0;
    double c = 0.0;  ///< coefficient of cos(kx x + ky y)
    double s = 0.0;  ///< coefficient of sin(kx x + ky y)
};

/// u = skew gradient of psi = sum of modes; psi must have no constant mode.
struct FourierField {
    std::vector<FourierMode> modes;

    double stream(const Point& p) const;
    Vector field(const Point& p) const;
    /// Row j holds d_j u.
    std::array<Vector, kMaxDim> jacobian(const Point& p) const;
    /// Field of the inverse positive Laplacian (mode-wise division by |k|^2).
    FourierField inverse_laplacian() const;
};

FourierField random_fourier_field(std::uint64_t& state, int modes = 3, int kmax = 3);
/// [x, y] with analytic Jacobians.
Vector fourier_bracket(const FourierField& x, const FourierField& y, const Point& p);

/// <A^{-1} u, [v, u]> by quadrature; verdict |value| <= tol * |A^{-1}u| |[v,u]|.
CheckResult skew_adjoint_quadrature(const ChartedManifold& m, const FourierField& u, const FourierField& v,
                                    double tol = 1e-8, const QuadratureOptions& opts = {});
/// <A^{-1} u, [v, w]> + <A^{-1} w, [v, u]> by quadrature.
CheckResult skew_adjoint_trilinear(const ChartedManifold& m, const FourierField& u, const FourierField& v,
                                   const FourierField& w, double tol = 1e-8, const QuadratureOptions& opts = {});

/// Uniform double in [0, 1) from a splitmix64 state.
double uniform01(std::uint64_t& state);

}  // namespace eulerwaves
