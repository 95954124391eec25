#pragma once

#include <complex>

#include "madelung/calculus.hpp"
#include "madelung/grid.hpp"

namespace madelung {

// Terms of <E> = ∫ psi* (-hbar^2/2m) psi'' dq in polar form psi = R exp(iS/hbar):
//   quantum potential   -(hbar^2/2m) ∫ R R''
//   Madelung kinetic     (1/2m) ∫ R^2 (S')^2
//   gradient cross      -(i hbar/m) ∫ R R' S'
//   curvature cross     -(i hbar/2m) ∫ R^2 S''
// Samples with R < 1e-12 max R are skipped in the polar terms.
struct EnergyDecomposition {
    double E_total = 0.0;               // real part of the direct quadrature
    double E_total_imag = 0.0;
    double U_bar = 0.0;
    double K_bar = 0.0;
    std::complex<double> cross_gradient{};
    std::complex<double> cross_curvature{};

    double cross_magnitude() const noexcept { return std::abs(cross_gradient) + std::abs(cross_curvature); }
    std::complex<double> polar_sum() const noexcept { return U_bar + K_bar + cross_gradient + cross_curvature; }
};

// Throws DegenerateError when more than half of the support (|psi| > 0) falls
// below the amplitude floor, PreconditionError when psi is not normalized within 1e-6.
EnergyDecomposition energy_decomposition(const ComplexField& psi, StencilOrder stencil = StencilOrder::fourth);

// <p> = ∫ psi* (-i hbar) psi' dq. The imaginary part is a boundary term and
// should vanish for compactly supported states.
std::complex<double> momentum_expectation(const ComplexField& psi, StencilOrder stencil = StencilOrder::fourth);
double momentum_average(const ComplexField& psi, StencilOrder stencil = StencilOrder::fourth);

// h sum_i psi_i* (H_h psi)_i with the 3-point Laplacian: the quantity the
// Crank-Nicolson stepper conserves.
double discrete_energy(const ComplexField& psi);

struct PositionStatistics {
    double mean;
    double spread;
};

PositionStatistics position_statistics(const ComplexField& psi);

}  // namespace madelung
