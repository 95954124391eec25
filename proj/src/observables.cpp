#include "madelung/observables.hpp"

#include <algorithm>
#include <cmath>

#include "madelung/error.hpp"
#include "madelung/units.hpp"

namespace madelung {

namespace {

constexpr double kAmplitudeFloor = 1e-12;
constexpr std::complex<double> kI{0.0, 1.0};

void require_normalized(const ComplexField& psi, double tol) {
    const double norm = integrate(abs_squared(psi));
    if (std::abs(norm - 1.0) > tol) throw PreconditionError("wave function is not normalized", {{"norm", norm}});
}

}  // namespace

EnergyDecomposition energy_decomposition(const ComplexField& psi, StencilOrder stencil) {
    require_normalized(psi, 1e-6);
    const SpatialGrid& grid = psi.grid();
    const std::size_t n = grid.size();
    const double h = grid.spacing();
    const double hb2m = kHbar * kHbar / (2.0 * kMass);

    const ComplexField dpsi = derivative(psi, 1, stencil);
    const ComplexField d2psi = derivative(psi, 2, stencil);

    EnergyDecomposition out;
    {
        std::vector<double> re(n), im(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::complex<double> v = std::conj(psi[i]) * (-hb2m) * d2psi[i];
            re[i] = v.real();
            im[i] = v.imag();
        }
        out.E_total = trapezoid(re, h);
        out.E_total_imag = trapezoid(im, h);
    }

    std::vector<double> R(n);
    double R_max = 0.0;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) {
        R[i] = std::abs(psi[i]);
        R_max = std::max(R_max, R[i]);
        if (R[i] > 0.0) ++support;
    }
    const double floor = kAmplitudeFloor * R_max;
    std::vector<bool> live(n);
    std::size_t floored = 0;
    for (std::size_t i = 0; i < n; ++i) {
        live[i] = R[i] >= floor && R[i] > 0.0;
        if (R[i] > 0.0 && !live[i]) ++floored;
    }
    if (support == 0 || 2 * floored > support)
        throw DegenerateError("amplitude below the polar floor over most of the support",
                              {{"floored", double(floored)}, {"support", double(support)}});

    // S' = hbar Im(psi* psi') / R^2, well defined wherever R is above the floor.
    std::vector<double> dS(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        if (live[i]) dS[i] = kHbar * std::imag(std::conj(psi[i]) * dpsi[i]) / (R[i] * R[i]);

    const RealField amp(grid, R);
    const RealField dR = derivative(amp, 1, stencil);
    const RealField d2R = derivative(amp, 2, stencil);
    const RealField d2S = derivative(RealField(grid, dS), 1, stencil);

    std::vector<double> t_u(n, 0.0), t_k(n, 0.0), t_g(n, 0.0), t_c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i]) continue;
        t_u[i] = -hb2m * R[i] * d2R[i];
        t_k[i] = R[i] * R[i] * dS[i] * dS[i] / (2.0 * kMass);
        t_g[i] = R[i] * dR[i] * dS[i];
        t_c[i] = R[i] * R[i] * d2S[i];
    }
    out.U_bar = trapezoid(t_u, h);
    out.K_bar = trapezoid(t_k, h);
    out.cross_gradient = -kI * (kHbar / kMass) * trapezoid(t_g, h);
    out.cross_curvature = -kI * (kHbar / (2.0 * kMass)) * trapezoid(t_c, h);
    return out;
}

std::complex<double> momentum_expectation(const ComplexField& psi, StencilOrder stencil) {
    const ComplexField dpsi = derivative(psi, 1, stencil);
    const std::size_t n = psi.size();
    std::vector<std::complex<double>> integrand(n);
    for (std::size_t i = 0; i < n; ++i) integrand[i] = std::conj(psi[i]) * (-kI * kHbar) * dpsi[i];
    return integrate(ComplexField(psi.grid(), std::move(integrand)));
}

double momentum_average(const ComplexField& psi, StencilOrder stencil) {
    return momentum_expectation(psi, stencil).real();
}

double discrete_energy(const ComplexField& psi) {
    // Summation by parts of -(hbar^2/2m) h sum psi_i* D2 psi_i with zero ends.
    const std::size_t n = psi.size();
    const double h = psi.grid().spacing();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) acc += std::norm(psi[i + 1] - psi[i]);
    return kHbar * kHbar / (2.0 * kMass) * acc / h;
}

PositionStatistics position_statistics(const ComplexField& psi) {
    const SpatialGrid& grid = psi.grid();
    const std::size_t n = grid.size();
    std::vector<double> w(n), wq(n), wq2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double q = grid.point(i);
        w[i] = std::norm(psi[i]);
        wq[i] = w[i] * q;
        wq2[i] = w[i] * q * q;
    }
    const double h = grid.spacing();
    const double m0 = trapezoid(w, h);
    const double mean = trapezoid(wq, h) / m0;
    const double var = trapezoid(wq2, h) / m0 - mean * mean;
    return {mean, std::sqrt(std::max(var, 0.0))};
}

}  // namespace madelung
