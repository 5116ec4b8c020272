#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerwaves/catalogue.hpp"

namespace eulerwaves {

enum class TraceStatus { Completed, ExitedDomain, HitSingularMargin };

std::string to_string(TraceStatus s);

struct Trajectory {
    std::string key;
    std::vector<std::string> coord_names;
    double dt = 0.0;
    std::vector<double> t;
    /// Chart points (or R^4 points stored in the first four slots of `ambient`).
    std::vector<Point> x;
    std::vector<std::array<double, 4>> ambient;
    TraceStatus status = TraceStatus::Completed;

    bool is_ambient() const { return !ambient.empty(); }
    std::size_t size() const { return t.size(); }
    /// Header `t,<coords>`, 17 significant digits, trailing `# status:` comment.
    std::string to_csv() const;
};

Trajectory parse_trajectory_csv(const std::string& text);

/// 2 pi / max(1, |omega|) * 1e-3.
double default_dt(const ExactSolution& s);

/// Fixed-step RK4 for dx/dt = U_R(t, x) in chart coordinates. Periodic coordinates are wrapped
/// after every step; leaving the chart or entering a singular margin stops the run.
Trajectory integrate_trajectory(const ExactSolution& s, const Point& x0, double t0, double t1, double dt);

/// RK4 in R^4 for the (1,0,0,-) three-sphere solution via its ambient polynomial field.
Trajectory integrate_s3_ambient(const ExactSolution& s, const std::array<double, 4>& x0, double t0, double t1,
                                double dt);

struct ClosureEstimate {
    double period = 0.0;
    double distance = 0.0;
};

/// Heuristic first-return detector: after the path leaves the ball of `radius` around the start
/// (chart metric at the start point, or Euclidean for ambient traces), reports the closest sample
/// of the first re-entry. Exploratory only.
std::optional<ClosureEstimate> closure_test(const Trajectory& traj, const ChartedManifold* m, double radius);

}  // namespace eulerwaves
