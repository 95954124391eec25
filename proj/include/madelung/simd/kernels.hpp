#pragma once

#include <cstddef>

// Data-parallel inner loops behind the finite-difference, quadrature and
// Crank-Nicolson code. Each kernel has a scalar reference and, on x86-64, an
// AVX2 variant; the variant is chosen once at startup from CPUID and can be
// forced with MADELUNG_SIMD=scalar|avx2.
//
// Elementwise kernels perform the same IEEE operations in the same order in
// every variant, so their results are bit-identical. Reductions (sum, dot)
// reassociate and agree only to rounding.
namespace madelung::simd {

struct KernelTable {
    const char* name;

    double (*sum)(const double* x, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);

    // out[i] = (x[i+s] - x[i-s]) * scale, for i in [s, n - s)
    void (*central_first)(const double* x, double* out, std::size_t n, std::size_t s, double scale);
    // out[i] = ((x[i+s] - 2 x[i]) + x[i-s]) * scale, for i in [s, n - s)
    void (*central_second)(const double* x, double* out, std::size_t n, std::size_t s, double scale);
    // out[i] = ((x[i-2s] - x[i+2s]) + 8 (x[i+s] - x[i-s])) * scale, for i in [2s, n - 2s)
    void (*central_first4)(const double* x, double* out, std::size_t n, std::size_t s, double scale);
    // out[i] = (16 (x[i+s] + x[i-s]) - (x[i+2s] + x[i-2s]) - 30 x[i]) * scale, for i in [2s, n - 2s)
    void (*central_second4)(const double* x, double* out, std::size_t n, std::size_t s, double scale);

    // Explicit half of a Crank-Nicolson step on interleaved complex samples
    // (re, im, re, im, ...), m complex points:
    //   out[j] = psi[j] + i r (psi[j+1] - 2 psi[j] + psi[j-1]),  j in [1, m-1)
    void (*cn_explicit)(const double* psi, double* out, std::size_t m, double r);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

// Table selected for this process.
const KernelTable& active() noexcept;

}  // namespace madelung::simd
