#pragma once

#include <complex>
#include <span>

#include "madelung/grid.hpp"

namespace madelung {

enum class StencilOrder { second = 2, fourth = 4 };

// Central differences in the interior, one-sided stencils of the same order at
// the ends. The result's edge_zone marks the one-sided samples.
RealField derivative(const RealField& f, int order, StencilOrder stencil = StencilOrder::second);
ComplexField derivative(const ComplexField& f, int order, StencilOrder stencil = StencilOrder::second);

// Composite trapezoid rule.
double integrate(const RealField& f);
std::complex<double> integrate(const ComplexField& f);
double trapezoid(std::span<const double> values, double spacing);

// -∫ rho ln rho with 0 ln 0 = 0. Requires rho >= 0 and ∫rho within 1e-6 of 1.
double shannon_entropy(const RealField& rho);

}  // namespace madelung
