#pragma once

#include "madelung/grid.hpp"

namespace madelung {

// T -> 0 limit: a flat box of depth U_bar0 on [-L0, L0] holding the nodeless
// mode R0(q) = A0 cos(k0 q).
struct ZeroTLimit {
    double U_bar0;
    double k0;  // sqrt(2 m U_bar0) / hbar
    double L0;  // pi / (2 k0)
    double A0;  // 1 / sqrt(L0)

    double amplitude_at(double q) const;
    double density_at(double q) const;
};

ZeroTLimit zero_t_from_ubar(double U_bar0);

// Grid must span exactly [-L0, L0] (relative tolerance 1e-12).
RealField amplitude_profile(const ZeroTLimit& limit, const SpatialGrid& grid);
RealField density_profile(const ZeroTLimit& limit, const SpatialGrid& grid);

// U_bar0 on the open interval, infinite walls at ±L0.
RealField box_potential(const ZeroTLimit& limit, const SpatialGrid& grid);

// Average of the box potential against rho0 over the open support.
double box_average_potential(const ZeroTLimit& limit, const SpatialGrid& grid);

}  // namespace madelung
