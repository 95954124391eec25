#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "madelung/grid.hpp"
#include "madelung/ode.hpp"

namespace madelung {

struct StepControl {
    double rel = 1e-10;
    double abs = 1e-12;
    double max_step = 0.05;
};

// Gibbs self-trapping problem at Lagrange parameter T with U(0) = U0 and
// U'(0) = 0 (the initial slope is not a free parameter).
struct ProfileParams {
    double T = 1.0;
    double U0 = 1.0;
    StepControl step{};
    std::size_t n_points = 4097;
};

void validate(const ProfileParams& params);

// Self-trapped profile on [-L_m, L_m].
//
// Internally the solver integrates w(q) = exp(-(U(q) - U0) / (2T)), which obeys
//   w'' = (4 m T / hbar^2) w ln w - (2 m U0 / hbar^2) w,   w(0) = 1, w'(0) = 0,
// and is regular where U blows up; L_m is the first zero of w. The amplitude R
// is proportional to w, so rho = w^2 / ∫w^2 and U = U0 - 2T ln w.
class ProfileSolution {
public:
    ProfileSolution(ProfileParams params, std::shared_ptr<const ode::DenseSolution> trajectory, double half_length);

    const ProfileParams& params() const noexcept { return params_; }
    const SpatialGrid& grid() const noexcept { return grid_; }
    double half_length() const noexcept { return L_m_; }

    // U carries infinite walls at ±L_m.
    const RealField& potential() const noexcept { return U_; }
    const RealField& amplitude() const noexcept { return R_; }
    const RealField& density() const noexcept { return rho_; }

    double Z() const noexcept { return Z_; }
    double log_Z() const noexcept { return log_Z_; }
    double average_potential() const noexcept { return U_bar_; }
    double entropy() const noexcept { return entropy_; }

    // Off-grid evaluation through the solver's dense output; zero outside the support.
    double density_at(double q) const;
    // +inf at and beyond ±L_m.
    double potential_at(double q) const;

private:
    double scaled_amplitude(double q) const;

    ProfileParams params_;
    std::shared_ptr<const ode::DenseSolution> trajectory_;
    double L_m_;
    SpatialGrid grid_;
    RealField U_;
    RealField R_;
    RealField rho_;
    double norm_ = 1.0;  // ∫w^2 dq
    double Z_ = 0.0;
    double log_Z_ = 0.0;
    double U_bar_ = 0.0;
    double entropy_ = 0.0;
};

ProfileSolution solve_profile(const ProfileParams& params);

// Direct integration of U'' = (1/2T)(U')^2 + (4mT/hbar^2) U from U(0)=U0,
// U'(0)=0, stopped once U exceeds cap. Kept as an independent route for
// cross-checking the regularized solver.
class DirectPotential {
public:
    DirectPotential(ode::DenseSolution trajectory, double q_cap, double cap)
        : trajectory_(std::move(trajectory)), q_cap_(q_cap), cap_(cap) {}

    double q_cap() const noexcept { return q_cap_; }
    double cap() const noexcept { return cap_; }
    // Valid for |q| <= q_cap.
    double potential_at(double q) const;

private:
    ode::DenseSolution trajectory_;
    double q_cap_;
    double cap_;
};

// A positive q_stop ends the run there when the cap lies beyond it; near the
// wall U grows only like -2T ln(L - q), so at small T the cap may sit closer to
// L than double precision resolves.
DirectPotential solve_potential_direct(const ProfileParams& params, double cap, double q_stop = 0.0);

// Largest relative difference between the regularized solution and the direct
// route, over grid points with U < limit_factor * U0. The direct route is capped
// at cap_factor * U0.
struct RouteComparison {
    double max_relative_difference = 0.0;
    std::size_t points_compared = 0;
};

RouteComparison compare_with_direct(const ProfileSolution& sol, double limit_factor = 10.0, double cap_factor = 20.0);

// Discrete shape properties of a profile, on samples whose stencils avoid the walls.
struct ShapeDiagnostics {
    double min_potential = 0.0;         // min interior U
    double min_potential_curvature = 0.0;  // min second difference of U
    double max_amplitude_curvature = 0.0;  // max second difference of R
    double normalization_error = 0.0;   // |∫rho - 1|
    double boundary_amplitude = 0.0;    // max(|R(-L_m)|, |R(L_m)|)
    double evenness_error = 0.0;        // max |U(q) - U(-q)|
    double gibbs_error = 0.0;           // max |-T ln(Z rho) - U| / U
};

ShapeDiagnostics shape_diagnostics(const ProfileSolution& sol);

// U = -(hbar^2/2m) R''/R with R = sqrt(rho), on samples where R exceeds
// floor_ratio * max R and the stencil is interior. Throws DegenerateError when
// no sample survives.
MaskedField recover_potential(const RealField& rho, double floor_ratio = 1e-8);

struct SweepRecord {
    double T;
    double L_m;
    double U_bar;
    double entropy;
    double Z;
};

SweepRecord to_record(const ProfileSolution& sol);

// One independent solve per T, collected in input order. Per-T failures are
// rethrown as SolverError naming the failing T.
std::vector<SweepRecord> sweep_temperature(std::span<const double> T_values, double U0, const StepControl& step = {},
                                           std::size_t n_points = 4097);

// Constrained variational test of the maximum-entropy property.
struct StationarityReport {
    double epsilon = 0.0;
    std::vector<double> delta_h;        // H[rho + eps d] - H[rho]
    std::vector<double> delta_h_half;   // same at eps / 2
    std::vector<double> first_order;    // Richardson estimate of dH/d eps at 0
    std::vector<double> ratio;          // delta_h / delta_h_half, ~4 for a quadratic residual
    std::size_t redraws = 0;

    double max_delta_h() const;
    double max_abs_first_order() const;
    double min_ratio() const;
    double max_ratio() const;
};

StationarityReport maxent_stationarity_check(const ProfileSolution& sol, std::size_t n_perturbations,
                                             double epsilon = 1e-3, std::uint64_t seed = 42);

// H[rho + eps * delta] - H[rho] on the solution grid.
double entropy_change(const ProfileSolution& sol, std::span<const double> delta, double epsilon);

}  // namespace madelung
