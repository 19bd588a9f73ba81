#include "tda/kernels.hpp"

#include <cstdlib>
#include <string>

namespace tda::kernels {

namespace {

using BinaryKernel = double (*)(const double*, const double*, std::size_t);

struct Table {
    Backend backend;
    BinaryKernel dot;
    BinaryKernel squared_distance;
};

bool backend_available(Backend b) {
    switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return detail::cpu_has_avx2();
#else
        return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Table table_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
        return {Backend::avx2, detail::dot_avx2, detail::squared_distance_avx2};
#endif
#if defined(__aarch64__)
    case Backend::neon:
        return {Backend::neon, detail::dot_neon, detail::squared_distance_neon};
#endif
    default:
        return {Backend::scalar, detail::dot_scalar, detail::squared_distance_scalar};
    }
}

Backend detect() {
    if (const char* env = std::getenv("TDA_KERNELS")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
        if (v == "neon" && backend_available(Backend::neon)) return Backend::neon;
        // unknown value or unavailable backend: fall through to detection
    }
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

Table& table() {
    static Table t = table_for(detect());
    return t;
}

} // namespace

Backend active_backend() { return table().backend; }

bool set_backend(Backend b) {
    if (!backend_available(b)) return false;
    table() = table_for(b);
    return true;
}

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "unknown";
}

double dot(const double* x, const double* y, std::size_t n) {
    return table().dot(x, y, n);
}

double squared_distance(const double* x, const double* y, std::size_t n) {
    return table().squared_distance(x, y, n);
}

double squared_norm(const double* x, std::size_t n) {
    return table().dot(x, x, n);
}

} // namespace tda::kernels
