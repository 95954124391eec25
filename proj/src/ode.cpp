#include "madelung/ode.hpp"

#include <algorithm>
#include <cmath>

#include "madelung/error.hpp"

namespace madelung::ode {

namespace {

// Dormand & Prince (1980) tableau with Hairer's dense-output weights.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (std::size_t i = 0; i < out.size(); ++i) {
        double acc = 0.0;
        for (const auto& [a, k] : terms) acc += a * (*k)[i];
        out[i] += h * acc;
    }
    return out;
}

double error_norm(const State& err, const State& y0, const State& y1, const Tolerances& tol) {
    double acc = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sc = tol.abs + tol.rel * std::max(std::abs(y0[i]), std::abs(y1[i]));
        const double r = err[i] / sc;
        acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(err.size()));
}

double initial_step(const Rhs& rhs, double t0, const State& y0, const State& f0, const Tolerances& tol) {
    double dy0 = 0.0, df0 = 0.0;
    for (std::size_t i = 0; i < y0.size(); ++i) {
        const double sc = tol.abs + tol.rel * std::abs(y0[i]);
        dy0 += (y0[i] / sc) * (y0[i] / sc);
        df0 += (f0[i] / sc) * (f0[i] / sc);
    }
    dy0 = std::sqrt(dy0 / 2.0);
    df0 = std::sqrt(df0 / 2.0);
    double h0 = (dy0 < 1e-5 || df0 < 1e-5) ? 1e-6 : 0.01 * dy0 / df0;
    if (tol.max_step > 0.0) h0 = std::min(h0, tol.max_step);
    const State y1 = axpy(y0, h0, {{1.0, &f0}});
    const State f1 = rhs(t0 + h0, y1);
    double d2 = 0.0;
    for (std::size_t i = 0; i < y0.size(); ++i) {
        const double sc = tol.abs + tol.rel * std::abs(y0[i]);
        d2 += ((f1[i] - f0[i]) / sc) * ((f1[i] - f0[i]) / sc);
    }
    d2 = std::sqrt(d2 / 2.0) / h0;
    const double dmax = std::max(df0, d2);
    const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 1.0 / 5.0);
    double h = std::min(100.0 * h0, h1);
    if (tol.max_step > 0.0) h = std::min(h, tol.max_step);
    return h;
}

}  // namespace

State DenseSolution::evaluate(double t) const {
    if (segments_.empty()) throw SolverError("dense solution is empty");
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double v, const Segment& s) { return v < s.t0; });
    const Segment& s = it == segments_.begin() ? segments_.front() : *std::prev(it);
    const double theta = (t - s.t0) / s.h;
    const double theta1 = 1.0 - theta;
    State y{};
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = s.c[0][i] + theta * (s.c[1][i] + theta1 * (s.c[2][i] + theta * (s.c[3][i] + theta1 * s.c[4][i])));
    return y;
}

IntegrationResult integrate(const Rhs& rhs, double t0, const State& y0, double t_max, const Tolerances& tol,
                            const EventFn& event, double event_tol) {
    IntegrationResult result;
    State y = y0;
    double t = t0;
    State k1 = rhs(t, y);
    double h = initial_step(rhs, t, y, k1, tol);
    double g_prev = event ? event(y) : 1.0;
    double err_prev = 1e-4;

    while (t < t_max) {
        if (result.accepted + result.rejected >= tol.max_steps)
            throw SolverError("maximum number of steps exceeded", {{"t", t}, {"steps", double(tol.max_steps)}});
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw SolverError("step size underflow", {{"t", t}, {"h", h}, {"y", y[0]}, {"dy", y[1]}});
        h = std::min(h, t_max - t);

        const State k2 = rhs(t + c2 * h, axpy(y, h, {{a21, &k1}}));
        const State k3 = rhs(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 = rhs(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State y1 = axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
        const State k7 = rhs(t + h, y1);
        State err{};
        for (std::size_t i = 0; i < err.size(); ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

        bool finite = true;
        for (double v : y1) finite = finite && std::isfinite(v);
        const double en = finite ? error_norm(err, y, y1, tol) : HUGE_VAL;

        if (en > 1.0) {
            ++result.rejected;
            const double shrink = finite ? std::max(0.2, 0.9 * std::pow(en, -0.2)) : 0.25;
            h *= shrink;
            continue;
        }

        DenseSolution::Segment seg{t, h, {}};
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double ydiff = y1[i] - y[i];
            const double bspl = h * k1[i] - ydiff;
            seg.c[0][i] = y[i];
            seg.c[1][i] = ydiff;
            seg.c[2][i] = bspl;
            seg.c[3][i] = ydiff - h * k7[i] - bspl;
            seg.c[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        }
        result.solution.append(seg);
        ++result.accepted;

        // PI step-size control.
        const double en_safe = std::max(en, 1e-10);
        double factor = 0.9 * std::pow(en_safe, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
        factor = std::clamp(factor, 0.2, 5.0);
        err_prev = std::max(en, 1e-4);

        const double t_new = t + h;
        if (event) {
            const double g = event(y1);
            if (g_prev > 0.0 && g <= 0.0) {
                double lo = t;
                double hi = t_new;
                State y_hi = y1;
                double g_hi = g;
                for (int it = 0; it < 200; ++it) {
                    if (std::abs(g_hi) <= event_tol) break;
                    const double mid = 0.5 * (lo + hi);
                    if (mid <= lo || mid >= hi) break;
                    const State ym = result.solution.evaluate(mid);
                    const double gm = event(ym);
                    if (gm > 0.0) {
                        lo = mid;
                    } else {
                        hi = mid;
                        y_hi = ym;
                        g_hi = gm;
                    }
                }
                result.event_found = true;
                result.t_event = hi;
                result.y_event = y_hi;
                result.solution.truncate(hi);
                return result;
            }
            g_prev = g;
        }

        t = t_new;
        y = y1;
        k1 = k7;
        h *= factor;
        if (tol.max_step > 0.0) h = std::min(h, tol.max_step);
    }
    return result;
}

}  // namespace madelung::ode
