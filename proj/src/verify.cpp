#include "madelung/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "madelung/calculus.hpp"
#include "madelung/observables.hpp"
#include "madelung/packet.hpp"
#include "madelung/profile.hpp"
#include "madelung/zero_temperature.hpp"

namespace madelung {

namespace {

CheckResult at_most(std::string name, double value, double threshold) {
    return {std::move(name), value <= threshold, value, threshold, "<="};
}

CheckResult at_least(std::string name, double value, double threshold) {
    return {std::move(name), value >= threshold, value, threshold, ">="};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    std::vector<CheckResult> out;

    ProfileParams p;
    const ProfileSolution sol = solve_profile(p);
    const ShapeDiagnostics shape = shape_diagnostics(sol);
    out.push_back(at_least("profile.potential_positive", shape.min_potential, 0.0));
    out.push_back(at_least("profile.potential_convex", shape.min_potential_curvature, 0.0));
    out.push_back(at_most("profile.amplitude_concave", shape.max_amplitude_curvature, 0.0));
    out.push_back(at_most("profile.normalization", shape.normalization_error, 1e-8));
    out.push_back(at_most("profile.boundary_amplitude", shape.boundary_amplitude, 1e-10));
    out.push_back(at_most("profile.direct_route", compare_with_direct(sol).max_relative_difference, 1e-6));

    ProfileParams cold;
    cold.T = 0.05;
    const double L0 = std::numbers::pi / (2.0 * std::numbers::sqrt2);
    out.push_back(at_most("profile.zero_t_support", std::abs(solve_profile(cold).half_length() - L0) / L0, 0.02));

    const StationarityReport st = maxent_stationarity_check(sol, 50, 1e-3, seed);
    out.push_back(at_most("maxent.entropy_change", st.max_delta_h(), 1e-10));
    out.push_back(at_least("maxent.min_ratio", st.min_ratio(), 3.5));
    out.push_back(at_most("maxent.max_ratio", st.max_ratio(), 4.5));

    const ZeroTLimit limit = zero_t_from_ubar(1.0);
    out.push_back(at_most("zerot.k0", std::abs(limit.k0 - std::numbers::sqrt2), 1e-15));
    out.push_back(at_most("zerot.k0_L0", std::abs(limit.k0 * limit.L0 - 0.5 * std::numbers::pi), 1e-15));
    const SpatialGrid box = SpatialGrid::symmetric(limit.L0, 4097);
    out.push_back(at_most("zerot.normalization", std::abs(integrate(density_profile(limit, box)) - 1.0), 1e-10));

    const MovingPacket packet = make_moving_packet(limit, 2.0);
    const ComplexField psi = build_packet(packet, box, 0.0);
    const EnergyDecomposition e = energy_decomposition(psi);
    out.push_back(at_most("packet.energy", std::abs(e.E_total - 3.0), 1e-8));
    out.push_back(at_most("packet.momentum", std::abs(momentum_average(psi) - 2.0), 1e-8));
    out.push_back(at_most("packet.kinetic_vs_momentum", std::abs(e.K_bar - 2.0), 1e-10));
    out.push_back(at_most("packet.cross_terms", e.cross_magnitude(), 1e-8));

    double prev = 0.0;
    double worst_ratio = HUGE_VAL;
    for (std::size_t n : {513u, 1025u, 2049u}) {
        const SpatialGrid g(-1.5, 1.5, n);
        const double r = schrodinger_residual(packet, g, 0.1).interior_max;
        if (prev > 0.0) worst_ratio = std::min(worst_ratio, prev / r);
        prev = r;
    }
    out.push_back(at_least("packet.residual_order", worst_ratio, 3.5));
    return out;
}

}  // namespace madelung
