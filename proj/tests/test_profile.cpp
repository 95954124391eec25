#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/profile.hpp"

using namespace madelung;

namespace {

const ProfileSolution& reference_solution() {
    static const ProfileSolution sol = solve_profile(ProfileParams{});
    return sol;
}

}  // namespace

TEST_SUITE("profile") {

TEST_CASE("half length matches the RK4 fixture") {
    CHECK(std::abs(reference_solution().half_length() - fixture::kHalfLengthT1) <= fixture::kHalfLengthDigitsTol);
}

TEST_CASE("reference profile shape") {
    const auto& sol = reference_solution();
    const auto d = shape_diagnostics(sol);
    CHECK(d.min_potential >= 1.0 - 1e-12);
    CHECK(d.min_potential_curvature > 0.0);
    CHECK(d.max_amplitude_curvature < 0.0);
    CHECK(d.normalization_error <= 1e-8);
    CHECK(d.boundary_amplitude <= 1e-10);
    CHECK(d.evenness_error == 0.0);
    CHECK(d.gibbs_error < 1e-9);

    const auto& U = sol.potential();
    CHECK(U.infinite_walls());
    CHECK(std::isinf(U[0]));
    CHECK(std::isinf(U[U.size() - 1]));
    CHECK(U[U.size() / 2] == doctest::Approx(1.0).epsilon(1e-14));
    // Bell-shaped: density rises to the center and falls after it.
    const auto& rho = sol.density();
    for (std::size_t i = 1; i <= rho.size() / 2; ++i) CHECK(rho[i] >= rho[i - 1]);
}

TEST_CASE("shape invariants over random parameters") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> logT(std::log(0.1), std::log(8.0));
    std::uniform_real_distribution<double> logU(std::log(0.3), std::log(3.0));
    for (int trial = 0; trial < 12; ++trial) {
        ProfileParams p;
        p.T = std::exp(logT(rng));
        p.U0 = std::exp(logU(rng));
        p.n_points = 1025;
        CAPTURE(p.T);
        CAPTURE(p.U0);
        const auto sol = solve_profile(p);
        const auto d = shape_diagnostics(sol);
        CHECK(d.min_potential >= p.U0 * (1.0 - 1e-12));
        CHECK(d.min_potential_curvature > 0.0);
        CHECK(d.max_amplitude_curvature < 0.0);
        CHECK(d.normalization_error <= 1e-8);
        CHECK(d.boundary_amplitude <= 1e-10);
        CHECK(d.gibbs_error < 1e-8);
        CHECK(sol.log_Z() == doctest::Approx(std::log(sol.Z())).epsilon(1e-12));
        CHECK(sol.average_potential() > p.U0);
        CHECK(sol.entropy() == doctest::Approx(shannon_entropy(sol.density())).epsilon(1e-14));
    }
}

TEST_CASE("gibbs identity ties entropy, mean potential and Z") {
    // H = ln Z + U_bar / T for rho = exp(-U/T) / Z.
    const auto& sol = reference_solution();
    const double T = sol.params().T;
    CHECK(sol.entropy() == doctest::Approx(sol.log_Z() + sol.average_potential() / T).epsilon(1e-7));
}

TEST_CASE("off-grid evaluation") {
    const auto& sol = reference_solution();
    const double L = sol.half_length();
    CHECK(sol.density_at(0.0) == doctest::Approx(sol.density()[sol.density().size() / 2]).epsilon(1e-12));
    CHECK(sol.density_at(0.3) == doctest::Approx(sol.density_at(-0.3)).epsilon(1e-14));
    CHECK(sol.density_at(1.01 * L) == 0.0);
    CHECK(std::isinf(sol.potential_at(L)));
    CHECK(std::isinf(sol.potential_at(-2.0 * L)));
    CHECK(sol.potential_at(0.5 * L) > 1.0);
}

TEST_CASE("regularized and direct routes agree") {
    for (double T : {0.1, 1.0, 5.0}) {
        for (double U0 : {0.5, 1.0, 2.0}) {
            ProfileParams p;
            p.T = T;
            p.U0 = U0;
            const auto cmp = compare_with_direct(solve_profile(p));
            CAPTURE(T);
            CAPTURE(U0);
            CHECK(cmp.points_compared > 100);
            CHECK(cmp.max_relative_difference <= 1e-6);
        }
    }
}

TEST_CASE("direct route input checks") {
    CHECK_THROWS_AS(solve_potential_direct(ProfileParams{}, 0.5), ParameterError);
    const auto direct = solve_potential_direct(ProfileParams{}, 20.0);
    CHECK(direct.potential_at(0.0) == 1.0);
    CHECK(direct.potential_at(direct.q_cap()) == doctest::Approx(20.0).epsilon(1e-9));
    CHECK_THROWS_AS(direct.potential_at(direct.q_cap() * 1.1), ParameterError);
}

TEST_CASE("parameter validation") {
    ProfileParams p;
    p.T = 0.0;
    CHECK_THROWS_AS(solve_profile(p), ParameterError);
    p.T = 1.0;
    p.U0 = -1.0;
    CHECK_THROWS_AS(solve_profile(p), ParameterError);
    p.U0 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(solve_profile(p), ParameterError);
    p.U0 = 1.0;
    p.n_points = 4;
    CHECK_THROWS_AS(solve_profile(p), SizingError);
}

TEST_CASE("potential recovered from the density round trips") {
    ProfileParams p;
    p.n_points = 1025;
    const auto sol = solve_profile(p);
    const auto rec = recover_potential(sol.density());
    const double h = sol.grid().spacing();
    const double L = sol.half_length();
    std::size_t compared = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.grid().size(); ++i) {
        const double q = sol.grid().point(i);
        if (std::abs(q) > 0.9 * L || !rec.valid[i]) continue;
        ++compared;
        const double U = sol.potential()[i];
        worst = std::max(worst, std::abs(rec.field[i] - U) / U);
    }
    CHECK(compared > 800);
    CHECK(worst <= 10.0 * h * h);
}

TEST_CASE("recovering from a box density gives a flat bottom") {
    const double k0 = 1.3;
    const double L0 = std::numbers::pi / (2.0 * k0);
    const auto g = SpatialGrid::symmetric(L0, 2001);
    const auto rho = sample_real(g, [&](double q) {
        const double c = std::cos(k0 * q);
        return c * c / L0;
    });
    const auto rec = recover_potential(rho);
    const double h = g.spacing();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (rec.valid[i] && std::abs(g.point(i)) < 0.95 * L0)
            CHECK(std::abs(rec.field[i] - 0.5 * k0 * k0) <= 10.0 * h * h);
}

TEST_CASE("recovering from a uniform density gives zero") {
    const SpatialGrid g(-1.0, 1.0, 101);
    const auto rec = recover_potential(sample_real(g, [](double) { return 0.5; }));
    CHECK(rec.valid_count() > 90);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(rec.field[i]) < 1e-9);
}

TEST_CASE("recovery rejects degenerate input") {
    const SpatialGrid g(-1.0, 1.0, 11);
    CHECK_THROWS_AS(recover_potential(sample_real(g, [](double) { return 0.0; })), DegenerateError);
    CHECK_THROWS_AS(recover_potential(sample_real(g, [](double q) { return q > 0.9 ? 1.0 : 0.0; })), DegenerateError);
    CHECK_THROWS_AS(recover_potential(sample_real(g, [](double q) { return q - 0.5; })), DomainError);
}

}

TEST_SUITE("sweep") {

TEST_CASE("half length decreases and mean potential increases with T") {
    const std::vector<double> T{0.05, 0.5, 1.0, 2.0, 5.0, 10.0};
    const auto recs = sweep_temperature(T, 1.0);
    REQUIRE(recs.size() == T.size());
    for (std::size_t i = 0; i < T.size(); ++i) CHECK(recs[i].T == T[i]);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        CHECK(recs[i].L_m < recs[i - 1].L_m);
        CHECK(recs[i].U_bar > recs[i - 1].U_bar);
    }
    // At high T the mean potential grows about linearly, so increments do not shrink.
    CHECK(recs[5].U_bar - recs[4].U_bar > recs[3].U_bar - recs[2].U_bar);
}

TEST_CASE("low temperature approaches the box") {
    const std::vector<double> T{0.2, 0.1, 0.05};
    const auto recs = sweep_temperature(T, 1.0);
    const double L0 = std::numbers::pi / (2.0 * std::sqrt(2.0));
    double prev_gap = std::numeric_limits<double>::infinity();
    double prev_ubar_gap = std::numeric_limits<double>::infinity();
    for (const auto& r : recs) {
        const double gap = std::abs(r.L_m - L0);
        const double ubar_gap = std::abs(r.U_bar - 1.0);
        CHECK(gap < prev_gap);
        CHECK(ubar_gap < prev_ubar_gap);
        prev_gap = gap;
        prev_ubar_gap = ubar_gap;
    }
    CHECK(std::abs(recs.back().L_m - L0) / L0 < 0.02);
}

TEST_CASE("sweep records equal single solves") {
    const std::vector<double> T{0.7, 3.0};
    const auto recs = sweep_temperature(T, 1.5);
    for (std::size_t i = 0; i < T.size(); ++i) {
        ProfileParams p;
        p.T = T[i];
        p.U0 = 1.5;
        const auto one = to_record(solve_profile(p));
        CHECK(recs[i].L_m == one.L_m);
        CHECK(recs[i].U_bar == one.U_bar);
        CHECK(recs[i].entropy == one.entropy);
        CHECK(recs[i].Z == one.Z);
    }
}

TEST_CASE("sweep input errors") {
    const std::vector<double> bad{1.0, -1.0};
    CHECK_THROWS_AS(sweep_temperature(bad, 1.0), ParameterError);
    const std::vector<double> ok{1.0};
    CHECK_THROWS_AS(sweep_temperature(ok, 0.0), ParameterError);
}

}
