#include "tda/kernels.hpp"

// Reference kernels. Eight independent accumulators, tail handled
// separately, then a fixed pairwise reduction; the SIMD variants replay
// exactly this arithmetic, which is what makes bit-identical equivalence
// testable. This translation unit is built with -ffp-contract=off.

namespace tda::kernels::detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    double acc4 = 0.0, acc5 = 0.0, acc6 = 0.0, acc7 = 0.0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 += x[i + 0] * y[i + 0];
        acc1 += x[i + 1] * y[i + 1];
        acc2 += x[i + 2] * y[i + 2];
        acc3 += x[i + 3] * y[i + 3];
        acc4 += x[i + 4] * y[i + 4];
        acc5 += x[i + 5] * y[i + 5];
        acc6 += x[i + 6] * y[i + 6];
        acc7 += x[i + 7] * y[i + 7];
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i] * y[i];
    const double c0 = acc0 + acc4;
    const double c1 = acc1 + acc5;
    const double c2 = acc2 + acc6;
    const double c3 = acc3 + acc7;
    return ((c0 + c1) + (c2 + c3)) + tail;
}

double squared_distance_scalar(const double* x, const double* y, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    double acc4 = 0.0, acc5 = 0.0, acc6 = 0.0, acc7 = 0.0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const double d0 = x[i + 0] - y[i + 0];
        const double d1 = x[i + 1] - y[i + 1];
        const double d2 = x[i + 2] - y[i + 2];
        const double d3 = x[i + 3] - y[i + 3];
        const double d4 = x[i + 4] - y[i + 4];
        const double d5 = x[i + 5] - y[i + 5];
        const double d6 = x[i + 6] - y[i + 6];
        const double d7 = x[i + 7] - y[i + 7];
        acc0 += d0 * d0;
        acc1 += d1 * d1;
        acc2 += d2 * d2;
        acc3 += d3 * d3;
        acc4 += d4 * d4;
        acc5 += d5 * d5;
        acc6 += d6 * d6;
        acc7 += d7 * d7;
    }
    double tail = 0.0;
    for (; i < n; ++i) {
        const double d = x[i] - y[i];
        tail += d * d;
    }
    const double c0 = acc0 + acc4;
    const double c1 = acc1 + acc5;
    const double c2 = acc2 + acc6;
    const double c3 = acc3 + acc7;
    return ((c0 + c1) + (c2 + c3)) + tail;
}

} // namespace tda::kernels::detail
