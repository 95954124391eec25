#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "madelung/calculus.hpp"
#include "madelung/error.hpp"
#include "madelung/profile.hpp"

namespace madelung {

namespace {

constexpr std::size_t kPolynomialDegree = 4;
constexpr std::size_t kMaxRedraws = 32;

// -[f(rho + eps d) - f(rho)] with f(x) = x ln x, written so that the first-order
// part is exactly -eps d ln rho.
double entropy_density_change(double rho, double d, double eps) {
    if (d == 0.0) return 0.0;
    const double x = eps * d;
    if (rho <= 0.0) return x > 0.0 ? -x * std::log(x) : 0.0;
    return -(x * std::log(rho) + (rho + x) * std::log1p(x / rho));
}

}  // namespace

double entropy_change(const ProfileSolution& sol, std::span<const double> delta, double epsilon) {
    const auto rho = sol.density().values();
    if (delta.size() != rho.size())
        throw SizingError("perturbation length does not match the solution grid",
                          {{"delta", double(delta.size())}, {"n_points", double(rho.size())}});
    std::vector<double> integrand(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i] + epsilon * delta[i] < 0.0)
            throw DomainError("perturbed density is negative", {{"index", double(i)}});
        integrand[i] = entropy_density_change(rho[i], delta[i], epsilon);
    }
    return trapezoid(integrand, sol.grid().spacing());
}

double StationarityReport::max_delta_h() const {
    return delta_h.empty() ? 0.0 : *std::max_element(delta_h.begin(), delta_h.end());
}

double StationarityReport::max_abs_first_order() const {
    double m = 0.0;
    for (double a : first_order) m = std::max(m, std::abs(a));
    return m;
}

double StationarityReport::min_ratio() const {
    return ratio.empty() ? 0.0 : *std::min_element(ratio.begin(), ratio.end());
}

double StationarityReport::max_ratio() const {
    return ratio.empty() ? 0.0 : *std::max_element(ratio.begin(), ratio.end());
}

// Perturbations are random quartics in q/L_m times the window (1 - (q/L_m)^2)^2,
// which vanishes at the support edge at the same rate as rho. Each draw is
// projected onto {∫d = 0, ∫U d = 0} along span{rho, U rho} and scaled so that
// max |d / rho| = 1, which keeps rho + eps d >= 0 for eps < 1.
StationarityReport maxent_stationarity_check(const ProfileSolution& sol, std::size_t n_perturbations, double epsilon,
                                             std::uint64_t seed) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw ParameterError("epsilon must lie in (0, 1)", {{"epsilon", epsilon}});

    const auto& grid = sol.grid();
    const std::size_t n = grid.size();
    const double h = grid.spacing();
    const auto rho = sol.density().values();
    const auto U = sol.potential().values();
    const double L = sol.half_length();

    std::vector<double> g_rho(n, 0.0), g_Urho(n, 0.0), g_U2rho(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        g_rho[i] = rho[i];
        g_Urho[i] = U[i] * rho[i];
        g_U2rho[i] = U[i] * U[i] * rho[i];
    }
    const double m00 = trapezoid(g_rho, h);
    const double m01 = trapezoid(g_Urho, h);
    const double m11 = trapezoid(g_U2rho, h);
    const double det = m00 * m11 - m01 * m01;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    StationarityReport report;
    report.epsilon = epsilon;
    std::vector<double> d(n), Ud(n);

    for (std::size_t k = 0; k < n_perturbations; ++k) {
        bool accepted = false;
        for (std::size_t attempt = 0; attempt < kMaxRedraws && !accepted; ++attempt) {
            if (attempt > 0) ++report.redraws;
            std::array<double, kPolynomialDegree + 1> c{};
            for (double& ci : c) ci = normal(rng);

            if (!(std::abs(det) > 1e-12 * std::abs(m00 * m11))) continue;

            std::fill(d.begin(), d.end(), 0.0);
            for (std::size_t i = 1; i + 1 < n; ++i) {
                const double x = grid.point(i) / L;
                double p = 0.0;
                for (std::size_t j = c.size(); j-- > 0;) p = p * x + c[j];
                const double window = (1.0 - x * x) * (1.0 - x * x);
                d[i] = p * window;
            }
            double raw_scale = 0.0;
            for (double v : d) raw_scale = std::max(raw_scale, std::abs(v));

            for (std::size_t i = 0; i < n; ++i) Ud[i] = i == 0 || i + 1 == n ? 0.0 : U[i] * d[i];
            const double b0 = trapezoid(d, h);
            const double b1 = trapezoid(Ud, h);
            const double alpha = (b0 * m11 - b1 * m01) / det;
            const double beta = (m00 * b1 - m01 * b0) / det;
            double ratio_max = 0.0;
            double projected_scale = 0.0;
            for (std::size_t i = 1; i + 1 < n; ++i) {
                d[i] -= alpha * g_rho[i] + beta * g_Urho[i];
                projected_scale = std::max(projected_scale, std::abs(d[i]));
                if (rho[i] > 0.0) ratio_max = std::max(ratio_max, std::abs(d[i]) / rho[i]);
            }
            if (!(projected_scale > 1e-8 * raw_scale) || !(ratio_max > 0.0) || !std::isfinite(ratio_max)) continue;
            for (double& v : d) v /= ratio_max;

            const double full = entropy_change(sol, d, epsilon);
            const double half = entropy_change(sol, d, 0.5 * epsilon);
            report.delta_h.push_back(full);
            report.delta_h_half.push_back(half);
            report.first_order.push_back((4.0 * half - full) / epsilon);
            report.ratio.push_back(full / half);
            accepted = true;
        }
        if (!accepted)
            throw DegenerateError("could not draw a perturbation satisfying both constraints",
                                  {{"perturbation", double(k)}, {"det", det}});
    }
    return report;
}

}  // namespace madelung
