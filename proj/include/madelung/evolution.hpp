#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "madelung/grid.hpp"
#include "madelung/packet.hpp"

namespace madelung {

// Crank-Nicolson propagator for i hbar psi_t = -(hbar^2/2m) psi_qq with the
// 3-point Laplacian and psi = 0 at both grid ends (reflecting walls). The
// update is unitary in the discrete norm h sum |psi_i|^2, which equals the
// trapezoid integral because the end samples stay zero.
class CrankNicolson {
public:
    CrankNicolson(const SpatialGrid& grid, double dt);

    double dt() const noexcept { return dt_; }
    void step(std::vector<std::complex<double>>& psi);

private:
    std::size_t n_;
    double dt_;
    double r_;  // hbar dt / (4 m h^2)
    std::complex<double> diag_;
    std::complex<double> off_;
    std::vector<std::complex<double>> c_prime_;  // forward-sweep factors of the implicit matrix
    std::vector<std::complex<double>> inv_denom_;
    std::vector<std::complex<double>> rhs_;
};

struct EvolutionConfig {
    SpatialGrid grid;
    double dt = 1e-4;
    double t_final = 1.0;
    std::size_t snapshot_stride = 100;  // steps between snapshots; the final time is always recorded
    // When set, the support of this packet (plus one L0) must stay inside the
    // grid, and the shape report compares against its translated density.
    std::optional<MovingPacket> reference;
    std::size_t edge_exclusion = 5;  // support samples dropped at each side for shape_error
    // Abort once more than this probability sits in the outer 5% of the grid
    // at either end, where wall reflections would contaminate the run.
    double wall_leak_limit = 1e-3;
};

struct Snapshot {
    double t;
    ComplexField psi;
};

struct ShapeReport {
    std::vector<double> times;
    std::vector<double> shape_error;        // max interior |rho_num - rho0(q - v_c t)|, reference runs only
    std::vector<double> norm_drift;         // |∫rho_num - 1|
    std::vector<double> peak_position;      // argmax of rho_num on the grid
    std::vector<double> peak_offset;        // peak_position - v_c t, reference runs only
    std::vector<double> energy;             // discrete <H> with the stepper's stencil
    std::vector<double> momentum;           // <p> with 4th-order differences
    std::vector<double> position_spread;    // sqrt(<q^2> - <q>^2)
    std::vector<double> wall_probability;   // probability in the outer 5% at both ends
    double interior_fraction = 0.0;         // share of support samples used for shape_error
};

struct EvolutionResult {
    std::vector<Snapshot> snapshots;
    ShapeReport report;
    bool aborted = false;   // probability reached the walls; snapshots are partial
    double t_reached = 0.0;
};

// Throws ParameterError when the config cannot hold the reference support, and
// PreconditionError when psi0 is not normalized within 1e-8.
EvolutionResult evolve(const ComplexField& psi0, const EvolutionConfig& config);

// Normalized Gaussian (2 pi sigma^2)^(-1/4) exp(-(q - q0)^2 / (4 sigma^2) + i k q).
ComplexField gaussian_packet(const SpatialGrid& grid, double center, double sigma, double wave_number);

// Free-particle spreading law sigma(t) = sigma0 sqrt(1 + (hbar t / (2 m sigma0^2))^2).
double gaussian_width(double sigma0, double t);

}  // namespace madelung
