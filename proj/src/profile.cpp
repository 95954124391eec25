#include "madelung/profile.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <thread>

#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/units.hpp"

namespace madelung {

namespace {

constexpr double kEventTolerance = 1e-12;  // |w| at the located zero, relative to w(0) = 1

ode::Tolerances to_tolerances(const StepControl& s) {
    ode::Tolerances t;
    t.rel = s.rel;
    t.abs = s.abs;
    t.max_step = s.max_step;
    return t;
}

// With U >= U0 > 0 everywhere the local wave number of w exceeds sqrt(2mU0)/hbar,
// so the first zero lies before pi/2 over that wave number.
double support_bound(double U0) { return 0.5 * std::numbers::pi * kHbar / std::sqrt(2.0 * kMass * U0); }

}  // namespace

void validate(const ProfileParams& p) {
    if (!(p.T > 0.0) || !std::isfinite(p.T)) throw ParameterError("T must be positive and finite", {{"T", p.T}});
    if (!(p.U0 > 0.0) || !std::isfinite(p.U0)) throw ParameterError("U0 must be positive and finite", {{"U0", p.U0}});
    if (!(p.step.rel > 0.0) || !(p.step.abs > 0.0) || p.step.max_step < 0.0)
        throw ParameterError("step control tolerances must be positive");
    if (p.n_points < 5) throw SizingError("profile grid needs at least 5 points", {{"n_points", double(p.n_points)}});
}

ProfileSolution::ProfileSolution(ProfileParams params, std::shared_ptr<const ode::DenseSolution> trajectory,
                                 double half_length)
    : params_(params),
      trajectory_(std::move(trajectory)),
      L_m_(half_length),
      grid_(SpatialGrid::symmetric(half_length, params.n_points)),
      U_(grid_, std::vector<double>(grid_.size(), 0.0)),
      R_(U_),
      rho_(U_) {
    const std::size_t n = grid_.size();
    const double T = params_.T;
    const double U0 = params_.U0;

    std::vector<double> w(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const std::size_t mirror = n - 1 - i;
        if (mirror < i) {
            w[i] = w[mirror];
            continue;
        }
        const double v = scaled_amplitude(grid_.point(i));
        if (!(v > 0.0))
            throw SolverError("amplitude vanished inside the support",
                              {{"q", grid_.point(i)}, {"w", v}, {"T", T}, {"U0", U0}});
        w[i] = v;
    }

    std::vector<double> w2(n);
    for (std::size_t i = 0; i < n; ++i) w2[i] = w[i] * w[i];
    norm_ = trapezoid(w2, grid_.spacing());

    std::vector<double> U(n, HUGE_VAL);
    std::vector<double> R(n, 0.0);
    std::vector<double> rho(n, 0.0);
    std::vector<double> U_rho(n, 0.0);
    const double sqrt_norm = std::sqrt(norm_);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        U[i] = U0 - 2.0 * T * std::log(w[i]);
        R[i] = w[i] / sqrt_norm;
        rho[i] = w2[i] / norm_;
        U_rho[i] = U[i] * rho[i];
    }
    U_ = RealField(grid_, std::move(U), 0, true);
    R_ = RealField(grid_, std::move(R));
    rho_ = RealField(grid_, std::move(rho));

    // rho = exp(-U/T)/Z and exp(-U/T) = exp(-U0/T) w^2.
    log_Z_ = -U0 / T + std::log(norm_);
    Z_ = std::exp(log_Z_);
    U_bar_ = trapezoid(U_rho, grid_.spacing());
    entropy_ = shannon_entropy(rho_);
}

double ProfileSolution::scaled_amplitude(double q) const {
    const double a = std::abs(q);
    if (a >= L_m_) return 0.0;
    return trajectory_->evaluate(a)[0];
}

double ProfileSolution::density_at(double q) const {
    const double w = scaled_amplitude(q);
    return w > 0.0 ? w * w / norm_ : 0.0;
}

double ProfileSolution::potential_at(double q) const {
    const double w = scaled_amplitude(q);
    return w > 0.0 ? params_.U0 - 2.0 * params_.T * std::log(w) : HUGE_VAL;
}

ProfileSolution solve_profile(const ProfileParams& params) {
    validate(params);
    const double T = params.T;
    const double U0 = params.U0;
    const double log_coeff = 4.0 * kMass * T / (kHbar * kHbar);
    const double lin_coeff = 2.0 * kMass * U0 / (kHbar * kHbar);

    const ode::Rhs rhs = [=](double, const ode::State& y) -> ode::State {
        const double w = y[0];
        const double source = w == 0.0 ? 0.0 : w * (log_coeff * std::log(std::abs(w)) - lin_coeff);
        return {y[1], source};
    };
    const ode::EventFn crossing = [](const ode::State& y) { return y[0]; };

    const double q_max = 2.0 * support_bound(U0) + 1.0;
    auto run = ode::integrate(rhs, 0.0, {1.0, 0.0}, q_max, to_tolerances(params.step), crossing, kEventTolerance);
    if (!run.event_found)
        throw SolverError("no amplitude zero crossing before the support bound",
                          {{"T", T}, {"U0", U0}, {"q_end", run.solution.t_end()}});
    if (std::abs(run.y_event[0]) > kEventTolerance)
        throw SolverError("zero crossing could not be localized to tolerance",
                          {{"T", T}, {"U0", U0}, {"w", run.y_event[0]}});

    auto trajectory = std::make_shared<const ode::DenseSolution>(std::move(run.solution));
    return ProfileSolution(params, std::move(trajectory), run.t_event);
}

double DirectPotential::potential_at(double q) const {
    const double a = std::abs(q);
    if (a > q_cap_) throw ParameterError("direct potential evaluated beyond its cap", {{"q", q}, {"q_cap", q_cap_}});
    return trajectory_.evaluate(a)[0];
}

DirectPotential solve_potential_direct(const ProfileParams& params, double cap, double q_stop) {
    validate(params);
    if (!(cap > params.U0)) throw ParameterError("blow-up cap must exceed U0", {{"cap", cap}, {"U0", params.U0}});
    const double T = params.T;
    const double lin = 4.0 * kMass * T / (kHbar * kHbar);
    const ode::Rhs rhs = [=](double, const ode::State& y) -> ode::State {
        return {y[1], y[1] * y[1] / (2.0 * T) + lin * y[0]};
    };
    const ode::EventFn below_cap = [cap](const ode::State& y) { return cap - y[0]; };

    auto tol = to_tolerances(params.step);
    const double q_max = q_stop > 0.0 ? q_stop : 2.0 * support_bound(params.U0) + 1.0;
    auto run = ode::integrate(rhs, 0.0, {params.U0, 0.0}, q_max, tol, below_cap, 1e-9 * cap);
    if (!run.event_found && !(q_stop > 0.0))
        throw SolverError("direct potential never reached its cap", {{"T", T}, {"U0", params.U0}, {"cap", cap}});
    const double q_cap = run.event_found ? run.t_event : q_max;
    return DirectPotential(std::move(run.solution), q_cap, cap);
}

MaskedField recover_potential(const RealField& rho, double floor_ratio) {
    const std::size_t n = rho.size();
    std::vector<double> R(n);
    double R_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rho[i] < 0.0) throw DomainError("density has a negative sample", {{"index", double(i)}, {"value", rho[i]}});
        R[i] = std::sqrt(rho[i]);
        R_max = std::max(R_max, R[i]);
    }
    if (!(R_max > 0.0)) throw DegenerateError("amplitude is zero everywhere");

    const RealField amplitude(rho.grid(), R);
    const RealField curvature = derivative(amplitude, 2);
    const double floor = floor_ratio * R_max;
    const double coeff = -kHbar * kHbar / (2.0 * kMass);

    std::vector<double> U(n, 0.0);
    std::vector<bool> valid(n, false);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (R[i] <= floor || R[i - 1] <= floor || R[i + 1] <= floor) continue;
        U[i] = coeff * curvature[i] / R[i];
        valid[i] = true;
    }
    MaskedField out{RealField(rho.grid(), std::move(U)), std::move(valid)};
    if (out.valid_count() == 0) throw DegenerateError("amplitude is below the floor at every interior sample");
    return out;
}

SweepRecord to_record(const ProfileSolution& sol) {
    return {sol.params().T, sol.half_length(), sol.average_potential(), sol.entropy(), sol.Z()};
}

std::vector<SweepRecord> sweep_temperature(std::span<const double> T_values, double U0, const StepControl& step,
                                           std::size_t n_points) {
    for (double T : T_values)
        if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("sweep temperatures must be positive", {{"T", T}});
    if (!(U0 > 0.0)) throw ParameterError("U0 must be positive", {{"U0", U0}});

    auto solve_one = [&](double T) {
        ProfileParams p;
        p.T = T;
        p.U0 = U0;
        p.step = step;
        p.n_points = n_points;
        try {
            return to_record(solve_profile(p));
        } catch (const Error& e) {
            auto diag = e.diagnostics();
            diag.emplace_back("T", T);
            throw SolverError("profile solve failed at T=" + std::to_string(T) + ": " + e.what(), std::move(diag));
        }
    };

    std::vector<SweepRecord> out;
    out.reserve(T_values.size());
    const std::size_t batch = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < T_values.size(); start += batch) {
        const std::size_t stop = std::min(T_values.size(), start + batch);
        std::vector<std::future<SweepRecord>> pending;
        for (std::size_t i = start; i < stop; ++i)
            pending.push_back(std::async(std::launch::async, solve_one, T_values[i]));
        for (auto& f : pending) out.push_back(f.get());
    }
    return out;
}

}  // namespace madelung

namespace madelung {

RouteComparison compare_with_direct(const ProfileSolution& sol, double limit_factor, double cap_factor) {
    const double U0 = sol.params().U0;
    const auto& grid = sol.grid();
    const auto U = sol.potential().values();
    double q_reach = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i)
        if (U[i] < limit_factor * U0) q_reach = std::max(q_reach, std::abs(grid.point(i)));
    const DirectPotential direct = solve_potential_direct(sol.params(), cap_factor * U0, q_reach);
    RouteComparison out;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        if (!(U[i] < limit_factor * U0)) continue;
        const double q = grid.point(i);
        if (std::abs(q) > direct.q_cap())
            throw SolverError("direct route stopped before the comparison region", {{"q", q}, {"q_cap", direct.q_cap()}});
        const double rel = std::abs(direct.potential_at(q) - U[i]) / std::abs(U[i]);
        out.max_relative_difference = std::max(out.max_relative_difference, rel);
        ++out.points_compared;
    }
    return out;
}

ShapeDiagnostics shape_diagnostics(const ProfileSolution& sol) {
    const auto U = sol.potential().values();
    const auto R = sol.amplitude().values();
    const std::size_t n = U.size();
    ShapeDiagnostics d;
    d.min_potential = HUGE_VAL;
    d.min_potential_curvature = HUGE_VAL;
    d.max_amplitude_curvature = -HUGE_VAL;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d.min_potential = std::min(d.min_potential, U[i]);
        d.max_amplitude_curvature = std::max(d.max_amplitude_curvature, (R[i + 1] - 2.0 * R[i]) + R[i - 1]);
        d.evenness_error = std::max(d.evenness_error, std::abs(U[i] - U[n - 1 - i]));
        const double gibbs = -sol.params().T * (sol.log_Z() + std::log(sol.density()[i]));
        d.gibbs_error = std::max(d.gibbs_error, std::abs(gibbs - U[i]) / U[i]);
    }
    for (std::size_t i = 2; i + 2 < n; ++i)
        d.min_potential_curvature = std::min(d.min_potential_curvature, (U[i + 1] - 2.0 * U[i]) + U[i - 1]);
    d.normalization_error = std::abs(integrate(sol.density()) - 1.0);
    d.boundary_amplitude = std::max(std::abs(R[0]), std::abs(R[n - 1]));
    return d;
}

}  // namespace madelung
