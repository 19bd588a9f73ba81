#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by the distance and embedding code.
//
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at startup.  All variants
// use the same blocked accumulation and reduction order and are compiled
// without FP contraction, so their results are bit-identical to the scalar
// reference; the equivalence tests assert exact equality.

namespace tda::kernels {

enum class Backend { scalar, avx2, neon };

// Backend chosen at startup from CPU features; the TDA_KERNELS environment
// variable (scalar|avx2|neon|auto) overrides detection.
Backend active_backend();

// Returns false (and leaves the selection unchanged) if the requested
// backend is not available on this machine. Not thread-safe against
// concurrent kernel calls; intended for startup and tests.
bool set_backend(Backend b);

std::string_view backend_name(Backend b);

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

// sum_i (x[i] - y[i])^2
double squared_distance(const double* x, const double* y, std::size_t n);

double squared_norm(const double* x, std::size_t n);

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
double squared_distance_scalar(const double* x, const double* y, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2();
double dot_avx2(const double* x, const double* y, std::size_t n);
double squared_distance_avx2(const double* x, const double* y, std::size_t n);
#endif

#if defined(__aarch64__)
double dot_neon(const double* x, const double* y, std::size_t n);
double squared_distance_neon(const double* x, const double* y, std::size_t n);
#endif

} // namespace detail

} // namespace tda::kernels
