#include <doctest.h>

#include <cmath>
#include <numbers>

#include "madelung/error.hpp"
#include "madelung/ode.hpp"

using namespace madelung;

TEST_SUITE("ode") {

TEST_CASE("harmonic oscillator endpoint and dense output") {
    const ode::Rhs rhs = [](double, const ode::State& y) { return ode::State{y[1], -y[0]}; };
    const auto res = ode::integrate(rhs, 0.0, {1.0, 0.0}, 10.0, ode::Tolerances{});
    CHECK_FALSE(res.event_found);
    CHECK(res.solution.t_end() == 10.0);
    CHECK(res.accepted > 0);
    for (double t = 0.0; t <= 10.0; t += 0.173) {
        const auto y = res.solution.evaluate(t);
        CHECK(std::abs(y[0] - std::cos(t)) < 1e-8);
        CHECK(std::abs(y[1] + std::sin(t)) < 1e-8);
    }
}

TEST_CASE("dense output interpolates between accepted steps") {
    const ode::Rhs rhs = [](double t, const ode::State& y) { return ode::State{y[1], std::exp(-t)}; };
    ode::Tolerances tol;
    tol.max_step = 0.5;
    const auto res = ode::integrate(rhs, 0.0, {1.0, -1.0}, 3.0, tol);
    // y = exp(-t) solves y'' = exp(-t) with these data.
    for (double t = 0.01; t < 3.0; t += 0.0371) CHECK(std::abs(res.solution.evaluate(t)[0] - std::exp(-t)) < 1e-9);
}

TEST_CASE("event fires at the first downward crossing") {
    const ode::Rhs rhs = [](double, const ode::State& y) { return ode::State{y[1], -y[0]}; };
    const ode::EventFn ev = [](const ode::State& y) { return y[0]; };
    const auto res = ode::integrate(rhs, 0.0, {1.0, 0.0}, 20.0, ode::Tolerances{}, ev, 1e-13);
    REQUIRE(res.event_found);
    CHECK(std::abs(res.t_event - 0.5 * std::numbers::pi) < 1e-9);
    CHECK(std::abs(res.y_event[0]) <= 1e-13);
    CHECK(res.solution.t_end() == doctest::Approx(res.t_event));
}

TEST_CASE("step budget exhaustion is a solver error") {
    const ode::Rhs rhs = [](double, const ode::State& y) { return ode::State{y[1], -y[0]}; };
    ode::Tolerances tol;
    tol.max_steps = 5;
    tol.max_step = 0.01;
    CHECK_THROWS_AS(ode::integrate(rhs, 0.0, {1.0, 0.0}, 10.0, tol), SolverError);
}

TEST_CASE("finite-time blow-up is reported, not looped on") {
    // y' = y^2 leaves every bounded set at t = 1.
    const ode::Rhs rhs = [](double, const ode::State& y) { return ode::State{y[0] * y[0], 0.0}; };
    CHECK_THROWS_AS(ode::integrate(rhs, 0.0, {1.0, 0.0}, 2.0, ode::Tolerances{}), SolverError);
}

}
