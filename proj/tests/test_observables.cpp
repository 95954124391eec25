#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "madelung/error.hpp"
#include "madelung/evolution.hpp"
#include "madelung/observables.hpp"
#include "madelung/packet.hpp"
#include "madelung/zero_temperature.hpp"

using namespace madelung;

TEST_SUITE("observables") {

TEST_CASE("moving packet energy splits into internal and translational parts") {
    const auto limit = zero_t_from_ubar(1.0);
    const auto g = SpatialGrid::symmetric(limit.L0, 4097);
    const auto psi = build_packet(make_moving_packet(limit, 2.0), g, 0.0);
    const auto e = energy_decomposition(psi);
    CHECK(std::abs(e.E_total - 3.0) <= 1e-8);
    CHECK(std::abs(e.U_bar - 1.0) <= 1e-8);
    const double p = momentum_average(psi);
    CHECK(std::abs(p - 2.0) <= 1e-8);
    CHECK(std::abs(e.K_bar - 0.5 * p * p) <= 1e-10);
    CHECK(e.cross_magnitude() <= 1e-8);
    CHECK(std::abs(e.polar_sum() - std::complex<double>(e.E_total, e.E_total_imag)) < 1e-6);
    CHECK(std::abs(momentum_expectation(psi).imag()) < 1e-10);
}

TEST_CASE("stationary packet") {
    const auto limit = zero_t_from_ubar(1.0);
    const auto g = SpatialGrid::symmetric(limit.L0, 4097);
    const auto psi = build_packet(make_moving_packet(limit, 0.0), g, 0.8);
    const auto e = energy_decomposition(psi);
    CHECK(std::abs(e.E_total - 1.0) <= 1e-8);
    CHECK(std::abs(e.U_bar - 1.0) <= 1e-8);
    CHECK(std::abs(e.K_bar) <= 1e-12);
    CHECK(std::abs(momentum_average(psi)) <= 1e-12);
}

TEST_CASE("energy is the same at any time along the analytic packet") {
    const auto limit = zero_t_from_ubar(0.8);
    const auto packet = make_moving_packet(limit, -1.5);
    const SpatialGrid g = aligned_embedding_grid(packet, 1.0, 6001, 1.0);
    const double e0 = energy_decomposition(build_packet(packet, g, 0.0)).E_total;
    // Times at which the support edges sit on nodes.
    const double h = g.spacing();
    for (double t : {200.0 * h / 1.5, 600.0 * h / 1.5}) CHECK(energy_decomposition(build_packet(packet, g, t)).E_total == doctest::Approx(e0).epsilon(1e-6));
    // The edge kink leaves an O(h) error in the kinetic term.
    CHECK(e0 == doctest::Approx(0.8 + 0.5 * 1.5 * 1.5).epsilon(2e-4));
}

TEST_CASE("momentum of random plane-wave boosts") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const SpatialGrid g(-12.0, 12.0, 4001);
    for (int i = 0; i < 8; ++i) {
        const double k = u(rng);
        const auto psi = gaussian_packet(g, 0.0, 1.0, k);
        CHECK(momentum_average(psi) == doctest::Approx(k).epsilon(1e-8));
        const auto stats = position_statistics(psi);
        CHECK(std::abs(stats.mean) < 1e-10);
        CHECK(stats.spread == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("discrete energy of a gaussian approaches the continuum value") {
    // <H> = (1 / (8 sigma^2) + k^2 / 2) for the normalized Gaussian.
    const SpatialGrid g(-12.0, 12.0, 8001);
    const auto psi = gaussian_packet(g, 0.5, 0.7, 1.2);
    CHECK(discrete_energy(psi) == doctest::Approx(1.0 / (8 * 0.49) + 0.72).epsilon(1e-4));
}

TEST_CASE("input checks") {
    const SpatialGrid g(-1.0, 1.0, 101);
    const auto unnormalized = sample_complex(g, [](double) { return std::complex<double>(1.0, 0.0); });
    CHECK_THROWS_AS(energy_decomposition(unnormalized), PreconditionError);
    // Normalized but almost all amplitude sits below the polar floor.
    const auto spike = sample_complex(g, [&](double q) {
        return std::abs(q) < 0.005 ? std::complex<double>(std::sqrt(1.0 / g.spacing()), 0.0) : std::complex<double>(1e-20, 0.0);
    });
    CHECK_THROWS_AS(energy_decomposition(spike), DegenerateError);
}

}
