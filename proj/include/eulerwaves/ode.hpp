#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "eulerwaves/errors.hpp"

namespace eulerwaves {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-14;
    double max_step = 0.0;  ///< 0 means unbounded
    long max_steps = 2000000;
};

/// Adaptive Dormand-Prince 5(4) integrator for small fixed-size systems.
template <std::size_t N>
class DormandPrince {
public:
    using State = std::array<double, N>;
    using Rhs = std::function<State(double, const State&)>;

    DormandPrince(Rhs rhs, OdeOptions opts) : rhs_(std::move(rhs)), opts_(opts) {}

    /// Integrates from (t0, y0) and returns the state at each requested time.
    /// Requested times must be monotone in the direction of integration;
    /// the integrator lands exactly on each of them.
    std::vector<State> solve(double t0, const State& y0, const std::vector<double>& times) {
        std::vector<State> out;
        out.reserve(times.size());
        double t = t0;
        State y = y0;
        double h = 0.0;
        for (const double target : times) {
            advance(t, y, target, h);
            out.push_back(y);
        }
        return out;
    }

    State solve_to(double t0, const State& y0, double t1) { return solve(t0, y0, {t1}).back(); }

    long steps_taken() const { return steps_; }

private:
    void advance(double& t, State& y, double target, double& h) {
        const double span = target - t;
        if (span == 0.0) return;
        const double dir = span > 0 ? 1.0 : -1.0;
        if (h == 0.0 || h * dir <= 0.0) h = dir * std::min(std::abs(span), initial_step(t, y, dir));
        State k1 = rhs_(t, y);
        while ((target - t) * dir > 0.0) {
            if (++steps_ > opts_.max_steps) throw ProfileError("ODE integration exceeded the step budget");
            double hs = h;
            if (opts_.max_step > 0.0) hs = dir * std::min(std::abs(hs), opts_.max_step);
            bool last = false;
            if ((t + hs - target) * dir >= 0.0) {
                hs = target - t;
                last = true;
            }
            State ynew, k7;
            const double err = trial(t, y, k1, hs, ynew, k7);
            if (!std::isfinite(err)) throw ProfileError("ODE integration produced a non-finite state");
            if (err <= 1.0) {
                t = last ? target : t + hs;
                y = ynew;
                k1 = k7;
                const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
                if (!last) h = hs * fac;
            } else {
                const double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
                h = hs * fac;
                if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
                    throw ProfileError("ODE step size underflow near t = " + std::to_string(t));
            }
        }
    }

    double initial_step(double t, const State& y, double dir) {
        const State f = rhs_(t, y);
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            ny = std::max(ny, std::abs(y[i]));
            nf = std::max(nf, std::abs(f[i]));
        }
        double h = (nf > 0.0) ? 0.01 * std::max(ny, opts_.atol) / nf : 1e-3;
        (void)dir;
        return std::clamp(h, 1e-10, 0.1);
    }

    double trial(double t, const State& y, const State& k1, double h, State& ynew, State& k7) {
        auto comb = [&](std::initializer_list<std::pair<double, const State*>> terms) {
            State s = y;
            for (const auto& [c, k] : terms)
                for (std::size_t i = 0; i < N; ++i) s[i] += h * c * (*k)[i];
            return s;
        };
        const State k2 = rhs_(t + h / 5.0, comb({{1.0 / 5.0, &k1}}));
        const State k3 = rhs_(t + 3.0 * h / 10.0, comb({{3.0 / 40.0, &k1}, {9.0 / 40.0, &k2}}));
        const State k4 =
            rhs_(t + 4.0 * h / 5.0, comb({{44.0 / 45.0, &k1}, {-56.0 / 15.0, &k2}, {32.0 / 9.0, &k3}}));
        const State k5 = rhs_(t + 8.0 * h / 9.0, comb({{19372.0 / 6561.0, &k1},
                                                        {-25360.0 / 2187.0, &k2},
                                                        {64448.0 / 6561.0, &k3},
                                                        {-212.0 / 729.0, &k4}}));
        const State k6 = rhs_(t + h, comb({{9017.0 / 3168.0, &k1},
                                           {-355.0 / 33.0, &k2},
                                           {46732.0 / 5247.0, &k3},
                                           {49.0 / 176.0, &k4},
                                           {-5103.0 / 18656.0, &k5}}));
        ynew = comb({{35.0 / 384.0, &k1},
                     {500.0 / 1113.0, &k3},
                     {125.0 / 192.0, &k4},
                     {-2187.0 / 6784.0, &k5},
                     {11.0 / 84.0, &k6}});
        k7 = rhs_(t + h, ynew);
        constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                         e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
        double acc = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opts_.atol + opts_.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            acc += (e / sc) * (e / sc);
        }
        return std::sqrt(acc / static_cast<double>(N));
    }

    Rhs rhs_;
    OdeOptions opts_;
    long steps_ = 0;
};

/// Piecewise quintic Hermite interpolant of a scalar from values and first two
/// derivatives on a node grid. The interpolant is C2.
class QuinticHermite {
public:
    QuinticHermite() = default;
    QuinticHermite(std::vector<double> x, std::vector<double> y, std::vector<double> dy, std::vector<double> d2y);

    /// Value, first and second derivative at r (clamped to the node range).
    std::array<double, 3> eval(double r) const;
    double operator()(double r) const { return eval(r)[0]; }
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, dy_, d2y_;
};

}  // namespace eulerwaves
