#include "madelung/packet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/units.hpp"

namespace madelung {

namespace {

constexpr double kPointsPerWavelength = 16.0;
constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

double MovingPacket::momentum() const noexcept { return kMass * v_c; }

double MovingPacket::kinetic_energy() const noexcept { return 0.5 * kMass * v_c * v_c; }

double MovingPacket::energy() const noexcept { return limit.U_bar0 + kinetic_energy(); }

std::pair<double, double> MovingPacket::support(double t) const noexcept {
    return {center(t) - limit.L0, center(t) + limit.L0};
}

std::complex<double> MovingPacket::value(double q, double t) const {
    const double x = q - center(t);
    if (std::abs(x) >= limit.L0) return {0.0, 0.0};
    const double phase = (momentum() * q + xi(t)) / kHbar;
    return limit.A0 * std::cos(limit.k0 * x) * std::exp(kI * phase);
}

std::complex<double> MovingPacket::time_derivative(double q, double t) const {
    const double x = q - center(t);
    if (std::abs(x) >= limit.L0) return {0.0, 0.0};
    const double phase = (momentum() * q + xi(t)) / kHbar;
    const double c = limit.A0 * std::cos(limit.k0 * x);
    const double dc_dt = limit.A0 * limit.k0 * v_c * std::sin(limit.k0 * x);
    return (dc_dt - kI * (energy() / kHbar) * c) * std::exp(kI * phase);
}

double MovingPacket::shortest_wavelength() const noexcept {
    return 2.0 * std::numbers::pi / (limit.k0 + std::abs(momentum()) / kHbar);
}

MovingPacket make_moving_packet(const ZeroTLimit& limit, double v_c) {
    if (!std::isfinite(v_c)) throw ParameterError("v_c must be finite", {{"v_c", v_c}});
    return {limit, v_c};
}

ComplexField build_packet(const MovingPacket& packet, const SpatialGrid& grid, double t) {
    const auto [lo, hi] = packet.support(t);
    if (!grid.contains(lo, hi))
        throw ParameterError("grid does not contain the packet support",
                             {{"support_lo", lo}, {"support_hi", hi}, {"q_min", grid.q_min()}, {"q_max", grid.q_max()}});
    return sample_complex(grid, [&](double q) { return packet.value(q, t); });
}

SpatialGrid aligned_embedding_grid(const MovingPacket& packet, double t_final, std::size_t n_points, double margin) {
    if (n_points < 16) throw SizingError("embedding grid needs at least 16 points", {{"n_points", double(n_points)}});
    if (!(margin >= 0.0) || !(t_final >= 0.0)) throw ParameterError("margin and t_final must be non-negative");
    const double L0 = packet.limit.L0;
    const double travel = std::abs(packet.v_c) * t_final;
    const double span = travel + 2.0 * (L0 + margin);
    const auto per_L0 = static_cast<std::size_t>(std::floor(static_cast<double>(n_points - 3) * L0 / span));
    if (per_L0 < 1) throw SizingError("too few points to resolve the support", {{"n_points", double(n_points)}});
    const double h = L0 / static_cast<double>(per_L0);
    const double behind = std::ceil((L0 + margin) / h - 1e-9);
    const double q_min = packet.v_c >= 0.0 ? -behind * h : -(static_cast<double>(n_points - 1) - behind) * h;
    return SpatialGrid(q_min, q_min + static_cast<double>(n_points - 1) * h, n_points);
}

ResidualReport schrodinger_residual(const MovingPacket& packet, const SpatialGrid& grid, double t) {
    const double h = grid.spacing();
    const double per_wavelength = packet.shortest_wavelength() / h;
    if (per_wavelength < kPointsPerWavelength)
        throw ResolutionError("grid under-resolves the packet", {{"points_per_wavelength", per_wavelength}});

    const ComplexField psi = build_packet(packet, grid, t);
    const ComplexField psi_qq = derivative(psi, 2);
    const auto [lo, hi] = packet.support(t);
    const std::size_t n = grid.size();
    const double c2 = kHbar * kHbar / (2.0 * kMass);

    std::vector<double> r(n, 0.0);
    std::vector<bool> interior(n, false);
    ResidualReport rep{RealField(grid, std::vector<double>(n, 0.0)), {}, 0.0, 0.0};
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double q = grid.point(i);
        const std::complex<double> res = kI * kHbar * packet.time_derivative(q, t) + c2 * psi_qq[i];
        r[i] = std::abs(res);
        const bool inside = grid.point(i - 1) > lo && grid.point(i + 1) < hi;
        interior[i] = inside;
        if (inside) rep.interior_max = std::max(rep.interior_max, r[i]);
        else rep.edge_max = std::max(rep.edge_max, r[i]);
    }
    rep.residual = RealField(grid, std::move(r), 1);
    rep.interior = std::move(interior);
    return rep;
}

ContinuityReport continuity_check(std::span<const RealField> rho, double dt, double v_c, double t0) {
    if (rho.size() < 3) throw ParameterError("continuity check needs at least 3 snapshots");
    if (!(dt > 0.0)) throw ParameterError("dt must be positive", {{"dt", dt}});
    const SpatialGrid& grid = rho.front().grid();
    for (const auto& r : rho)
        if (!(r.grid() == grid)) throw ParameterError("snapshots are on different grids");

    const std::size_t n = grid.size();
    ContinuityReport rep;
    for (std::size_t k = 1; k + 1 < rho.size(); ++k) {
        const RealField drho = derivative(rho[k], 1);
        double peak = 0.0;
        for (const auto* r : {&rho[k - 1], &rho[k], &rho[k + 1]})
            for (double v : r->values()) peak = std::max(peak, v);
        const double floor = 1e-12 * peak;
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            bool inside = true;
            for (const auto* r : {&rho[k - 1], &rho[k], &rho[k + 1]})
                inside = inside && (*r)[i - 1] > floor && (*r)[i] > floor && (*r)[i + 1] > floor;
            if (!inside) continue;
            const double dt_rho = (rho[k + 1][i] - rho[k - 1][i]) / (2.0 * dt);
            worst = std::max(worst, std::abs(dt_rho + v_c * drho[i]));
        }
        rep.times.push_back(t0 + static_cast<double>(k) * dt);
        rep.max_residual.push_back(worst);
        rep.overall_max = std::max(rep.overall_max, worst);
    }
    return rep;
}

}  // namespace madelung
