#include "kernels_impl.hpp"

namespace madelung::simd::detail {

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void central_first_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    for (std::size_t i = s; i + s < n; ++i) out[i] = (x[i + s] - x[i - s]) * scale;
}

void central_second_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    for (std::size_t i = s; i + s < n; ++i) out[i] = ((x[i + s] - 2.0 * x[i]) + x[i - s]) * scale;
}

void central_first4_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    const std::size_t s2 = 2 * s;
    for (std::size_t i = s2; i + s2 < n; ++i)
        out[i] = ((x[i - s2] - x[i + s2]) + 8.0 * (x[i + s] - x[i - s])) * scale;
}

void central_second4_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    const std::size_t s2 = 2 * s;
    for (std::size_t i = s2; i + s2 < n; ++i)
        out[i] = ((16.0 * (x[i + s] + x[i - s]) - (x[i + s2] + x[i - s2])) - 30.0 * x[i]) * scale;
}

void cn_explicit_scalar(const double* psi, double* out, std::size_t m, double r) {
    for (std::size_t j = 1; j + 1 < m; ++j) {
        const std::size_t k = 2 * j;
        const double lap_re = (psi[k + 2] - 2.0 * psi[k]) + psi[k - 2];
        const double lap_im = (psi[k + 3] - 2.0 * psi[k + 1]) + psi[k - 1];
        out[k] = psi[k] + lap_im * (-r);
        out[k + 1] = psi[k + 1] + lap_re * r;
    }
}

}  // namespace madelung::simd::detail
