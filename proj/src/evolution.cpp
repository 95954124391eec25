#include "madelung/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/observables.hpp"
#include "madelung/simd/kernels.hpp"
#include "madelung/units.hpp"

namespace madelung {

namespace {

constexpr double kWallZone = 0.05;  // outer fraction of the grid watched for leakage

double wall_probability(const std::vector<std::complex<double>>& psi, double h) {
    const std::size_t n = psi.size();
    const auto zone = static_cast<std::size_t>(kWallZone * static_cast<double>(n));
    double p = 0.0;
    for (std::size_t i = 0; i < zone; ++i) p += std::norm(psi[i]) + std::norm(psi[n - 1 - i]);
    return p * h;
}

}  // namespace

CrankNicolson::CrankNicolson(const SpatialGrid& grid, double dt)
    : n_(grid.size()), dt_(dt), r_(0.0), c_prime_(grid.size()), inv_denom_(grid.size()), rhs_(grid.size()) {
    if (!(dt > 0.0)) throw ParameterError("time step must be positive", {{"dt", dt}});
    const double h = grid.spacing();
    r_ = kHbar * dt / (4.0 * kMass * h * h);
    // (1 + i dt H / 2 hbar) with H = -(hbar^2/2m) D2: diagonal 1 + 2 i r, off-diagonal -i r.
    diag_ = {1.0, 2.0 * r_};
    off_ = {0.0, -r_};
    // Unknowns are the interior samples 1..n-2; the ends are pinned to zero.
    c_prime_[1] = off_ / diag_;
    inv_denom_[1] = 1.0 / diag_;
    for (std::size_t i = 2; i + 1 < n_; ++i) {
        const std::complex<double> denom = diag_ - off_ * c_prime_[i - 1];
        inv_denom_[i] = 1.0 / denom;
        c_prime_[i] = off_ * inv_denom_[i];
    }
}

void CrankNicolson::step(std::vector<std::complex<double>>& psi) {
    if (psi.size() != n_) throw SizingError("state length does not match the propagator");
    simd::active().cn_explicit(reinterpret_cast<const double*>(psi.data()), reinterpret_cast<double*>(rhs_.data()),
                               n_, r_);
    // Forward sweep then back substitution (Thomas algorithm).
    rhs_[1] *= inv_denom_[1];
    for (std::size_t i = 2; i + 1 < n_; ++i) rhs_[i] = (rhs_[i] - off_ * rhs_[i - 1]) * inv_denom_[i];
    psi[n_ - 2] = rhs_[n_ - 2];
    for (std::size_t i = n_ - 2; i-- > 1;) psi[i] = rhs_[i] - c_prime_[i] * psi[i + 1];
    psi[0] = 0.0;
    psi[n_ - 1] = 0.0;
}

EvolutionResult evolve(const ComplexField& psi0, const EvolutionConfig& config) {
    const SpatialGrid& grid = config.grid;
    if (!(psi0.grid() == grid)) throw ParameterError("initial state is not on the configured grid");
    if (!(config.t_final > 0.0)) throw ParameterError("t_final must be positive", {{"t_final", config.t_final}});
    if (config.snapshot_stride == 0) throw ParameterError("snapshot stride must be at least 1");
    if (!(config.wall_leak_limit > 0.0)) throw ParameterError("wall leak limit must be positive");
    if (config.reference) {
        const auto& ref = *config.reference;
        const double L0 = ref.limit.L0;
        const auto [lo0, hi0] = ref.support(0.0);
        const auto [lo1, hi1] = ref.support(config.t_final);
        const double lo = std::min(lo0, lo1) - L0;
        const double hi = std::max(hi0, hi1) + L0;
        if (!grid.contains(lo, hi))
            throw ParameterError("embedding grid must contain the moving support with a margin of L0",
                                 {{"needed_lo", lo}, {"needed_hi", hi}, {"q_min", grid.q_min()}, {"q_max", grid.q_max()}});
    }
    const double initial_norm = integrate(abs_squared(psi0));
    if (std::abs(initial_norm - 1.0) > 1e-8)
        throw PreconditionError("initial state is not normalized", {{"norm", initial_norm}});

    const auto steps = static_cast<std::size_t>(std::llround(config.t_final / config.dt));
    if (steps == 0) throw ParameterError("t_final is shorter than one time step");
    const double dt = config.t_final / static_cast<double>(steps);

    CrankNicolson stepper(grid, dt);
    std::vector<std::complex<double>> psi = psi0.to_vector();
    psi.front() = 0.0;
    psi.back() = 0.0;

    EvolutionResult result;
    std::size_t used = 0;
    std::size_t support_total = 0;
    auto record = [&](double t) {
        ComplexField field(grid, psi);
        const RealField rho = abs_squared(field);
        ShapeReport& rep = result.report;
        rep.times.push_back(t);
        rep.norm_drift.push_back(std::abs(integrate(rho) - 1.0));
        const auto vals = rho.values();
        const auto peak = static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
        rep.peak_position.push_back(grid.point(peak));
        rep.energy.push_back(discrete_energy(field));
        rep.momentum.push_back(momentum_average(field));
        rep.position_spread.push_back(position_statistics(field).spread);
        rep.wall_probability.push_back(wall_probability(psi, grid.spacing()));
        if (config.reference) {
            const auto& ref = *config.reference;
            const auto [lo, hi] = ref.support(t);
            std::vector<std::size_t> inside;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double q = grid.point(i);
                if (q > lo && q < hi) inside.push_back(i);
            }
            double err = 0.0;
            const std::size_t cut = config.edge_exclusion;
            if (inside.size() > 2 * cut) {
                for (std::size_t k = cut; k + cut < inside.size(); ++k) {
                    const std::size_t i = inside[k];
                    err = std::max(err, std::abs(rho[i] - ref.limit.density_at(grid.point(i) - ref.center(t))));
                }
                used += inside.size() - 2 * cut;
            }
            support_total += inside.size();
            rep.shape_error.push_back(err);
            rep.peak_offset.push_back(grid.point(peak) - ref.center(t));
        }
        result.snapshots.push_back({t, std::move(field)});
    };

    record(0.0);
    for (std::size_t s = 1; s <= steps; ++s) {
        stepper.step(psi);
        const double t = static_cast<double>(s) * dt;
        if (s % config.snapshot_stride == 0 || s == steps) {
            if (wall_probability(psi, grid.spacing()) > config.wall_leak_limit) {
                record(t);
                result.aborted = true;
                result.t_reached = t;
                break;
            }
            record(t);
        }
        result.t_reached = t;
    }
    if (support_total > 0)
        result.report.interior_fraction = static_cast<double>(used) / static_cast<double>(support_total);
    return result;
}

ComplexField gaussian_packet(const SpatialGrid& grid, double center, double sigma, double wave_number) {
    if (!(sigma > 0.0)) throw ParameterError("Gaussian width must be positive", {{"sigma", sigma}});
    const double amp = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    return sample_complex(grid, [&](double q) {
        const double x = q - center;
        return amp * std::exp(std::complex<double>(-x * x / (4.0 * sigma * sigma), wave_number * q));
    });
}

double gaussian_width(double sigma0, double t) {
    const double tau = kHbar * t / (2.0 * kMass * sigma0 * sigma0);
    return sigma0 * std::sqrt(1.0 + tau * tau);
}

}  // namespace madelung
