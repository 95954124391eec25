#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace madelung::ode {

// Second-order scalar problems written as first-order systems (y, y').
using State = std::array<double, 2>;
using Rhs = std::function<State(double t, const State& y)>;
// Event function; integration stops at the first sign change from > 0 to <= 0.
using EventFn = std::function<double(const State& y)>;

struct Tolerances {
    double rel = 1e-10;
    double abs = 1e-12;
    double max_step = 0.0;  // 0: unbounded
    std::size_t max_steps = 2'000'000;
};

// Piecewise quartic continuous extension of an accepted Dormand-Prince run.
class DenseSolution {
public:
    struct Segment {
        double t0;
        double h;
        std::array<State, 5> c;
    };

    DenseSolution() = default;

    double t_begin() const noexcept { return segments_.empty() ? 0.0 : segments_.front().t0; }
    double t_end() const noexcept { return t_end_; }
    std::size_t segment_count() const noexcept { return segments_.size(); }

    // Valid for t in [t_begin, t_end].
    State evaluate(double t) const;

    void append(const Segment& s) { segments_.push_back(s); t_end_ = s.t0 + s.h; }
    void truncate(double t_end) { t_end_ = t_end; }
    const Segment& last() const { return segments_.back(); }

private:
    std::vector<Segment> segments_;
    double t_end_ = 0.0;
};

struct IntegrationResult {
    DenseSolution solution;
    bool event_found = false;
    double t_event = 0.0;
    State y_event{};
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

// Adaptive Dormand-Prince 5(4) from (t0, y0) until t_max or the event fires.
// The event time is refined by bisection on the dense output until
// |event(y)| <= event_tol or the bracket collapses to rounding.
// Throws SolverError on step-size underflow or when max_steps is exceeded.
IntegrationResult integrate(const Rhs& rhs, double t0, const State& y0, double t_max, const Tolerances& tol,
                            const EventFn& event = {}, double event_tol = 0.0);

}  // namespace madelung::ode
