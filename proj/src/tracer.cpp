#include "eulerwaves/tracer.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace eulerwaves {

std::string to_string(TraceStatus s) {
    switch (s) {
        case TraceStatus::Completed:
            return "completed";
        case TraceStatus::ExitedDomain:
            return "exited-domain";
        case TraceStatus::HitSingularMargin:
            return "hit-singular-margin";
    }
    return "unknown";
}

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int step_count(double t0, double t1, double dt) {
    if (!(dt > 0.0)) throw ArgumentError("trajectory: dt must be positive");
    if (!(t1 >= t0)) throw ArgumentError("trajectory: need t1 >= t0");
    return static_cast<int>(std::ceil((t1 - t0) / dt - 1e-9));
}

}  // namespace

std::string Trajectory::to_csv() const {
    std::ostringstream os;
    os << "t";
    for (const auto& c : coord_names) os << ',' << c;
    os << '\n';
    const std::size_t d = coord_names.size();
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << g17(t[i]);
        for (std::size_t k = 0; k < d; ++k) os << ',' << g17(is_ambient() ? ambient[i][k] : x[i][static_cast<int>(k)]);
        os << '\n';
    }
    os << "# status: " << to_string(status) << '\n';
    return os.str();
}

Trajectory parse_trajectory_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Trajectory tr;
    if (!std::getline(is, line)) throw ArgumentError("trajectory csv: empty input");
    {
        std::istringstream hs(line);
        std::string cell;
        std::getline(hs, cell, ',');
        if (cell != "t") throw ArgumentError("trajectory csv: header must start with t");
        while (std::getline(hs, cell, ',')) tr.coord_names.push_back(cell);
    }
    const bool ambient = tr.coord_names.size() == 4;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string tag = "# status: ";
            if (line.rfind(tag, 0) == 0) {
                const std::string st = line.substr(tag.size());
                if (st == "completed")
                    tr.status = TraceStatus::Completed;
                else if (st == "exited-domain")
                    tr.status = TraceStatus::ExitedDomain;
                else if (st == "hit-singular-margin")
                    tr.status = TraceStatus::HitSingularMargin;
                else
                    throw ArgumentError("trajectory csv: unknown status '" + st + "'");
            }
            continue;
        }
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() != tr.coord_names.size() + 1) throw ArgumentError("trajectory csv: ragged row");
        tr.t.push_back(vals[0]);
        if (ambient) {
            tr.ambient.push_back({vals[1], vals[2], vals[3], vals[4]});
        } else {
            Point p;
            for (std::size_t k = 1; k < vals.size(); ++k) p[static_cast<int>(k - 1)] = vals[k];
            tr.x.push_back(p);
        }
    }
    if (tr.t.size() > 1) tr.dt = tr.t[1] - tr.t[0];
    return tr;
}

double default_dt(const ExactSolution& s) { return 1e-3 * 2.0 * kPi / std::max(1.0, std::abs(s.omega)); }

Trajectory integrate_trajectory(const ExactSolution& s, const Point& x0, double t0, double t1, double dt) {
    const ChartedManifold& m = *s.manifold;
    m.require_regular(x0, "integrate_trajectory start point");
    const int steps = step_count(t0, t1, dt);
    Trajectory tr;
    tr.key = s.key;
    tr.coord_names = m.coord_names();
    tr.dt = dt;
    tr.t.push_back(t0);
    tr.x.push_back(m.wrap(x0));
    Point x = tr.x.back();
    const int d = m.dim();
    // Stage points may cross a periodic seam; only non-periodic coordinates can leave the chart.
    auto stage_ok = [&](const Point& p) {
        for (int i = 0; i < d; ++i) {
            if (m.periodic(i)) continue;
            if (p[i] < m.range(i).lo || p[i] > m.range(i).hi) return false;
        }
        return true;
    };
    for (int k = 0; k < steps; ++k) {
        const double t = tr.t.back();
        const double h = std::min(dt, t1 - t);
        auto f = [&](double tt, const Point& p) { return s.real_field(tt, m.wrap(p)); };
        auto shift = [&](const Point& p, const Vector& v, double a) {
            Point q = p;
            for (int i = 0; i < d; ++i) q[i] += a * v[i];
            return q;
        };
        const Vector k1 = f(t, x);
        const Point p2 = shift(x, k1, 0.5 * h);
        if (!stage_ok(p2)) { tr.status = TraceStatus::ExitedDomain; break; }
        const Vector k2 = f(t + 0.5 * h, p2);
        const Point p3 = shift(x, k2, 0.5 * h);
        if (!stage_ok(p3)) { tr.status = TraceStatus::ExitedDomain; break; }
        const Vector k3 = f(t + 0.5 * h, p3);
        const Point p4 = shift(x, k3, h);
        if (!stage_ok(p4)) { tr.status = TraceStatus::ExitedDomain; break; }
        const Vector k4 = f(t + h, p4);
        Point next = x;
        for (int i = 0; i < d; ++i) next[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (!stage_ok(next)) { tr.status = TraceStatus::ExitedDomain; break; }
        next = m.wrap(next);
        if (m.singular_distance(next) < m.singular_margin()) {
            tr.status = TraceStatus::HitSingularMargin;
            break;
        }
        x = next;
        tr.t.push_back(k + 1 == steps ? t1 : t0 + (k + 1) * dt);
        tr.x.push_back(x);
    }
    return tr;
}

Trajectory integrate_s3_ambient(const ExactSolution& s, const std::array<double, 4>& x0, double t0, double t1,
                                double dt) {
    // Validates the solution and the start point.
    embed_s3_to_r4(s, t0, x0);
    const int steps = step_count(t0, t1, dt);
    Trajectory tr;
    tr.key = s.key;
    tr.coord_names = {"x1", "x2", "x3", "x4"};
    tr.dt = dt;
    tr.t.push_back(t0);
    tr.ambient.push_back(x0);
    std::array<double, 4> x = x0;
    auto f = [&](double t, const std::array<double, 4>& p) { return s3_ambient_field(s.rho, s.phase(t), p); };
    auto shift = [](const std::array<double, 4>& p, const std::array<double, 4>& v, double a) {
        std::array<double, 4> q = p;
        for (std::size_t i = 0; i < 4; ++i) q[i] += a * v[i];
        return q;
    };
    for (int k = 0; k < steps; ++k) {
        const double t = tr.t.back();
        const double h = std::min(dt, t1 - t);
        const auto k1 = f(t, x);
        const auto k2 = f(t + 0.5 * h, shift(x, k1, 0.5 * h));
        const auto k3 = f(t + 0.5 * h, shift(x, k2, 0.5 * h));
        const auto k4 = f(t + h, shift(x, k3, h));
        for (std::size_t i = 0; i < 4; ++i) x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        tr.t.push_back(k + 1 == steps ? t1 : t0 + (k + 1) * dt);
        tr.ambient.push_back(x);
    }
    return tr;
}

std::optional<ClosureEstimate> closure_test(const Trajectory& traj, const ChartedManifold* m, double radius) {
    if (traj.size() < 2) return std::nullopt;
    std::function<double(std::size_t)> dist;
    if (traj.is_ambient()) {
        dist = [&traj](std::size_t i) {
            double s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double d = traj.ambient[i][k] - traj.ambient[0][k];
                s += d * d;
            }
            return std::sqrt(s);
        };
    } else {
        if (!m) throw ArgumentError("closure_test: chart trajectory needs its manifold");
        const Point x0 = traj.x[0];
        const Matrix g = m->metric(x0);
        dist = [&traj, m, x0, g](std::size_t i) {
            Vector d;
            for (int k = 0; k < m->dim(); ++k) {
                double dk = traj.x[i][k] - x0[k];
                if (m->periodic(k)) {
                    const double w = m->range(k).width();
                    dk -= w * std::round(dk / w);
                }
                d[k] = dk;
            }
            double s = 0.0;
            for (int a = 0; a < m->dim(); ++a)
                for (int b = 0; b < m->dim(); ++b) s += g[a][b] * d[a] * d[b];
            return std::sqrt(std::max(0.0, s));
        };
    }
    bool left = false;
    std::optional<ClosureEstimate> best;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        const double di = dist(i);
        if (!left) {
            left = di > radius;
            continue;
        }
        if (di <= radius) {
            if (!best || di < best->distance) best = ClosureEstimate{traj.t[i] - traj.t[0], di};
        } else if (best) {
            break;
        }
    }
    return best;
}

}  // namespace eulerwaves
