// Compiled with -mavx2 only; no FMA so that elementwise results match the
// scalar reference bit for bit.
#include <immintrin.h>

#include "kernels_impl.hpp"

namespace madelung::simd::detail {

namespace {

inline double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

double sum_avx2(const double* x, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
        a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + i + 4));
    }
    double acc = horizontal_sum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        a1 = _mm256_add_pd(a1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    }
    double acc = horizontal_sum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void central_first_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    if (n < 2 * s + 1) return;
    const __m256d vs = _mm256_set1_pd(scale);
    const std::size_t end = n - s;
    std::size_t i = s;
    for (; i + 4 <= end; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i + s), _mm256_loadu_pd(x + i - s));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
    }
    for (; i < end; ++i) out[i] = (x[i + s] - x[i - s]) * scale;
}

void central_second_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    if (n < 2 * s + 1) return;
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d two = _mm256_set1_pd(2.0);
    const std::size_t end = n - s;
    std::size_t i = s;
    for (; i + 4 <= end; i += 4) {
        const __m256d c = _mm256_mul_pd(two, _mm256_loadu_pd(x + i));
        const __m256d d = _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + s), c), _mm256_loadu_pd(x + i - s));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
    }
    for (; i < end; ++i) out[i] = ((x[i + s] - 2.0 * x[i]) + x[i - s]) * scale;
}

void central_first4_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    const std::size_t s2 = 2 * s;
    if (n < 2 * s2 + 1) return;
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d eight = _mm256_set1_pd(8.0);
    const std::size_t end = n - s2;
    std::size_t i = s2;
    for (; i + 4 <= end; i += 4) {
        const __m256d outer = _mm256_sub_pd(_mm256_loadu_pd(x + i - s2), _mm256_loadu_pd(x + i + s2));
        const __m256d inner = _mm256_sub_pd(_mm256_loadu_pd(x + i + s), _mm256_loadu_pd(x + i - s));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_add_pd(outer, _mm256_mul_pd(eight, inner)), vs));
    }
    for (; i < end; ++i) out[i] = ((x[i - s2] - x[i + s2]) + 8.0 * (x[i + s] - x[i - s])) * scale;
}

void central_second4_avx2(const double* x, double* out, std::size_t n, std::size_t s, double scale) {
    const std::size_t s2 = 2 * s;
    if (n < 2 * s2 + 1) return;
    const __m256d vs = _mm256_set1_pd(scale);
    const __m256d sixteen = _mm256_set1_pd(16.0);
    const __m256d thirty = _mm256_set1_pd(30.0);
    const std::size_t end = n - s2;
    std::size_t i = s2;
    for (; i + 4 <= end; i += 4) {
        const __m256d near = _mm256_add_pd(_mm256_loadu_pd(x + i + s), _mm256_loadu_pd(x + i - s));
        const __m256d far = _mm256_add_pd(_mm256_loadu_pd(x + i + s2), _mm256_loadu_pd(x + i - s2));
        const __m256d t = _mm256_sub_pd(_mm256_mul_pd(sixteen, near), far);
        const __m256d d = _mm256_sub_pd(t, _mm256_mul_pd(thirty, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(d, vs));
    }
    for (; i < end; ++i)
        out[i] = ((16.0 * (x[i + s] + x[i - s]) - (x[i + s2] + x[i - s2])) - 30.0 * x[i]) * scale;
}

void cn_explicit_avx2(const double* psi, double* out, std::size_t m, double r) {
    if (m < 3) return;
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d rr = _mm256_setr_pd(-r, r, -r, r);
    const std::size_t end = m - 1;
    std::size_t j = 1;
    for (; j + 2 <= end; j += 2) {
        const std::size_t k = 2 * j;
        const __m256d cur = _mm256_loadu_pd(psi + k);
        const __m256d lap = _mm256_add_pd(_mm256_sub_pd(_mm256_loadu_pd(psi + k + 2), _mm256_mul_pd(two, cur)),
                                          _mm256_loadu_pd(psi + k - 2));
        const __m256d swapped = _mm256_permute_pd(lap, 0b0101);
        _mm256_storeu_pd(out + k, _mm256_add_pd(cur, _mm256_mul_pd(swapped, rr)));
    }
    for (; j < end; ++j) {
        const std::size_t k = 2 * j;
        const double lap_re = (psi[k + 2] - 2.0 * psi[k]) + psi[k - 2];
        const double lap_im = (psi[k + 3] - 2.0 * psi[k + 1]) + psi[k - 1];
        out[k] = psi[k] + lap_im * (-r);
        out[k + 1] = psi[k + 1] + lap_re * r;
    }
}

}  // namespace madelung::simd::detail
