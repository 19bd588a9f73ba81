#include "tda/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

// NEON variants. Four 2-lane registers hold the same eight accumulators as
// the scalar reference; no vfma, and the reduction pairs lane j with lane
// j+4 just like the scalar and AVX2 paths. Built with -ffp-contract=off.

namespace tda::kernels::detail {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t a0 = vdupq_n_f64(0.0);
    float64x2_t a1 = vdupq_n_f64(0.0);
    float64x2_t a2 = vdupq_n_f64(0.0);
    float64x2_t a3 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = vaddq_f64(a0, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
        a1 = vaddq_f64(a1, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
        a2 = vaddq_f64(a2, vmulq_f64(vld1q_f64(x + i + 4), vld1q_f64(y + i + 4)));
        a3 = vaddq_f64(a3, vmulq_f64(vld1q_f64(x + i + 6), vld1q_f64(y + i + 6)));
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i] * y[i];
    // lanes: a0={acc0,acc1} a1={acc2,acc3} a2={acc4,acc5} a3={acc6,acc7}
    const float64x2_t c01 = vaddq_f64(a0, a2); // {c0, c1}
    const float64x2_t c23 = vaddq_f64(a1, a3); // {c2, c3}
    const double c0 = vgetq_lane_f64(c01, 0);
    const double c1 = vgetq_lane_f64(c01, 1);
    const double c2 = vgetq_lane_f64(c23, 0);
    const double c3 = vgetq_lane_f64(c23, 1);
    return ((c0 + c1) + (c2 + c3)) + tail;
}

double squared_distance_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t a0 = vdupq_n_f64(0.0);
    float64x2_t a1 = vdupq_n_f64(0.0);
    float64x2_t a2 = vdupq_n_f64(0.0);
    float64x2_t a3 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const float64x2_t d0 = vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
        const float64x2_t d1 = vsubq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
        const float64x2_t d2 = vsubq_f64(vld1q_f64(x + i + 4), vld1q_f64(y + i + 4));
        const float64x2_t d3 = vsubq_f64(vld1q_f64(x + i + 6), vld1q_f64(y + i + 6));
        a0 = vaddq_f64(a0, vmulq_f64(d0, d0));
        a1 = vaddq_f64(a1, vmulq_f64(d1, d1));
        a2 = vaddq_f64(a2, vmulq_f64(d2, d2));
        a3 = vaddq_f64(a3, vmulq_f64(d3, d3));
    }
    double tail = 0.0;
    for (; i < n; ++i) {
        const double d = x[i] - y[i];
        tail += d * d;
    }
    const float64x2_t c01 = vaddq_f64(a0, a2);
    const float64x2_t c23 = vaddq_f64(a1, a3);
    const double c0 = vgetq_lane_f64(c01, 0);
    const double c1 = vgetq_lane_f64(c01, 1);
    const double c2 = vgetq_lane_f64(c23, 0);
    const double c3 = vgetq_lane_f64(c23, 1);
    return ((c0 + c1) + (c2 + c3)) + tail;
}

} // namespace tda::kernels::detail

#endif
