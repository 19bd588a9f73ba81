#include "tda/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2 variants. Two 4-lane registers give the same eight accumulators as
// the scalar reference; multiplication and addition stay separate (no FMA)
// and the final reduction pairs lane j with lane j+4, matching the scalar
// path operation for operation. Built with -mavx2 -ffp-contract=off.

namespace tda::kernels::detail {

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        a1 = _mm256_add_pd(a1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i] * y[i];
    alignas(32) double c[4];
    _mm256_store_pd(c, _mm256_add_pd(a0, a1));
    return ((c[0] + c[1]) + (c[2] + c[3])) + tail;
}

double squared_distance_avx2(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4));
        a0 = _mm256_add_pd(a0, _mm256_mul_pd(d0, d0));
        a1 = _mm256_add_pd(a1, _mm256_mul_pd(d1, d1));
    }
    double tail = 0.0;
    for (; i < n; ++i) {
        const double d = x[i] - y[i];
        tail += d * d;
    }
    alignas(32) double c[4];
    _mm256_store_pd(c, _mm256_add_pd(a0, a1));
    return ((c[0] + c[1]) + (c[2] + c[3])) + tail;
}

} // namespace tda::kernels::detail

#endif
