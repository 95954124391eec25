#include "madelung/calculus.hpp"

#include <array>
#include <cmath>
#include <string>

#include "madelung/error.hpp"
#include "madelung/simd/kernels.hpp"

namespace madelung {

namespace {

template <typename T>
constexpr std::size_t kLanes = sizeof(T) / sizeof(double);

// One-sided stencil weights for the first `rows` samples; the mirrored end uses
// the same weights with sign (-1)^order.
struct EdgeStencil {
    std::size_t rows;
    std::size_t width;
    std::array<std::array<double, 6>, 2> w;
    double denom;
};

EdgeStencil edge_stencil(int order, StencilOrder stencil) {
    if (stencil == StencilOrder::second) {
        if (order == 1) return {1, 3, {{{-3.0, 4.0, -1.0}}}, 2.0};
        return {1, 4, {{{2.0, -5.0, 4.0, -1.0}}}, 1.0};
    }
    if (order == 1)
        return {2, 5, {{{-25.0, 48.0, -36.0, 16.0, -3.0}, {-3.0, -10.0, 18.0, -6.0, 1.0}}}, 12.0};
    return {2, 6, {{{45.0, -154.0, 214.0, -156.0, 61.0, -10.0}, {10.0, -15.0, -4.0, 14.0, -6.0, 1.0}}}, 12.0};
}

template <typename T>
Field<T> differentiate(const Field<T>& f, int order, StencilOrder stencil) {
    if (order != 1 && order != 2) throw ParameterError("derivative order must be 1 or 2", {{"order", double(order)}});
    const std::size_t n = f.size();
    const std::size_t min_points = stencil == StencilOrder::fourth ? 7 : (order == 2 ? 5 : 3);
    if (n < min_points)
        throw SizingError("grid too small for the requested derivative stencil",
                          {{"n_points", double(n)}, {"required", double(min_points)}});
    if (f.infinite_walls()) throw DomainError("cannot differentiate a field with infinite walls");

    const double h = f.grid().spacing();
    const double hp = order == 1 ? h : h * h;
    std::vector<T> out(n);
    const auto& k = simd::active();
    const auto* x = reinterpret_cast<const double*>(f.values().data());
    auto* y = reinterpret_cast<double*>(out.data());
    const std::size_t flat = n * kLanes<T>;
    const std::size_t s = kLanes<T>;
    if (stencil == StencilOrder::second) {
        if (order == 1) k.central_first(x, y, flat, s, 1.0 / (2.0 * h));
        else k.central_second(x, y, flat, s, 1.0 / (h * h));
    } else {
        if (order == 1) k.central_first4(x, y, flat, s, 1.0 / (12.0 * h));
        else k.central_second4(x, y, flat, s, 1.0 / (12.0 * h * h));
    }

    const EdgeStencil e = edge_stencil(order, stencil);
    const double mirror = order == 1 ? -1.0 : 1.0;
    const auto v = f.values();
    for (std::size_t r = 0; r < e.rows; ++r) {
        T lo{};
        T hi{};
        for (std::size_t j = 0; j < e.width; ++j) {
            lo += e.w[r][j] * v[j];
            hi += e.w[r][j] * v[n - 1 - j];
        }
        out[r] = lo / (e.denom * hp);
        out[n - 1 - r] = mirror * hi / (e.denom * hp);
    }
    return Field<T>(f.grid(), std::move(out), e.rows);
}

}  // namespace

RealField derivative(const RealField& f, int order, StencilOrder stencil) { return differentiate(f, order, stencil); }

ComplexField derivative(const ComplexField& f, int order, StencilOrder stencil) {
    return differentiate(f, order, stencil);
}

double trapezoid(std::span<const double> values, double spacing) {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const double inner = simd::active().sum(values.data(), n);
    return spacing * (inner - 0.5 * (values[0] + values[n - 1]));
}

double integrate(const RealField& f) {
    if (f.infinite_walls()) throw DomainError("cannot integrate a field with infinite walls");
    return trapezoid(f.values(), f.grid().spacing());
}

std::complex<double> integrate(const ComplexField& f) {
    const std::size_t n = f.size();
    std::vector<double> re(n);
    std::vector<double> im(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = f[i].real();
        im[i] = f[i].imag();
    }
    const double h = f.grid().spacing();
    return {trapezoid(re, h), trapezoid(im, h)};
}

double shannon_entropy(const RealField& rho) {
    const std::size_t n = rho.size();
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = rho[i];
        if (p < 0.0)
            throw DomainError("density has a negative sample at index " + std::to_string(i),
                              {{"index", double(i)}, {"value", p}});
        integrand[i] = p > 0.0 ? -p * std::log(p) : 0.0;
    }
    const double mass = integrate(rho);
    if (std::abs(mass - 1.0) > 1e-6)
        throw PreconditionError("density is not normalized", {{"integral", mass}});
    return trapezoid(integrand, rho.grid().spacing());
}

}  // namespace madelung
