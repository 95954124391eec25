#include "madelung/zero_temperature.hpp"

#include <cmath>
#include <numbers>

#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/units.hpp"

namespace madelung {

namespace {

void require_support_grid(const ZeroTLimit& limit, const SpatialGrid& grid) {
    const double tol = 1e-12 * limit.L0;
    if (std::abs(grid.q_min() + limit.L0) > tol || std::abs(grid.q_max() - limit.L0) > tol)
        throw ParameterError("grid must span exactly [-L0, L0]",
                             {{"q_min", grid.q_min()}, {"q_max", grid.q_max()}, {"L0", limit.L0}});
}

}  // namespace

double ZeroTLimit::amplitude_at(double q) const {
    if (std::abs(q) >= L0) return 0.0;
    return A0 * std::cos(k0 * q);
}

double ZeroTLimit::density_at(double q) const {
    const double r = amplitude_at(q);
    return r * r;
}

ZeroTLimit zero_t_from_ubar(double U_bar0) {
    if (!(U_bar0 > 0.0) || !std::isfinite(U_bar0))
        throw ParameterError("U_bar0 must be positive and finite", {{"U_bar0", U_bar0}});
    const double k0 = std::sqrt(2.0 * kMass * U_bar0) / kHbar;
    const double L0 = 0.5 * std::numbers::pi / k0;
    return {U_bar0, k0, L0, 1.0 / std::sqrt(L0)};
}

RealField amplitude_profile(const ZeroTLimit& limit, const SpatialGrid& grid) {
    require_support_grid(limit, grid);
    const std::size_t n = grid.size();
    std::vector<double> R(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) R[i] = limit.A0 * std::cos(limit.k0 * grid.point(i));
    return RealField(grid, std::move(R));
}

RealField density_profile(const ZeroTLimit& limit, const SpatialGrid& grid) {
    const RealField R = amplitude_profile(limit, grid);
    std::vector<double> rho(R.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = R[i] * R[i];
    return RealField(grid, std::move(rho));
}

RealField box_potential(const ZeroTLimit& limit, const SpatialGrid& grid) {
    require_support_grid(limit, grid);
    std::vector<double> U(grid.size(), limit.U_bar0);
    U.front() = HUGE_VAL;
    U.back() = HUGE_VAL;
    return RealField(grid, std::move(U), 0, true);
}

double box_average_potential(const ZeroTLimit& limit, const SpatialGrid& grid) {
    const RealField U = box_potential(limit, grid);
    const RealField rho = density_profile(limit, grid);
    std::vector<double> integrand(grid.size(), 0.0);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) integrand[i] = U[i] * rho[i];
    return trapezoid(integrand, grid.spacing());
}

}  // namespace madelung
