#pragma once

#include <cstddef>

namespace madelung::simd::detail {

double sum_scalar(const double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
void central_first_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void central_second_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void central_first4_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void central_second4_scalar(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void cn_explicit_scalar(const double* psi, double* out, std::size_t m, double r);

#if defined(MADELUNG_HAVE_AVX2)
double sum_avx2(const double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
void central_first_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void central_second_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void central_first4_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void central_second4_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale);
void cn_explicit_avx2(const double* psi, double* out, std::size_t m, double r);
#endif

}  // namespace madelung::simd::detail
