#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "tda/kernels.hpp"

namespace kernels = tda::kernels;
using kernels::Backend;

TEST_CASE("kernel backends agree bit for bit with the scalar reference") {
    std::mt19937_64 rng(7);
    const Backend initial = kernels::active_backend();
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 64u, 100u, 255u, 1024u}) {
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = oracle::uniform(rng, -10.0, 10.0);
        for (auto& v : y) v = oracle::uniform(rng, -10.0, 10.0);
        const double dot_ref = kernels::detail::dot_scalar(x.data(), y.data(), n);
        const double sq_ref = kernels::detail::squared_distance_scalar(x.data(), y.data(), n);
        for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
            if (!kernels::set_backend(b)) continue;
            CHECK(kernels::dot(x.data(), y.data(), n) == dot_ref);
            CHECK(kernels::squared_distance(x.data(), y.data(), n) == sq_ref);
            CHECK(kernels::squared_norm(x.data(), n) ==
                  kernels::detail::dot_scalar(x.data(), x.data(), n));
        }
    }
    kernels::set_backend(initial);
}

TEST_CASE("scalar reference matches a plain accumulation loop closely") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = static_cast<std::size_t>(oracle::uniform_int(rng, 1, 200));
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = oracle::uniform(rng, -1.0, 1.0);
        for (auto& v : y) v = oracle::uniform(rng, -1.0, 1.0);
        double naive = 0.0;
        for (std::size_t i = 0; i < n; ++i) naive += x[i] * y[i];
        CHECK(kernels::detail::dot_scalar(x.data(), y.data(), n) ==
              doctest::Approx(naive).epsilon(1e-13));
    }
}

TEST_CASE("unsupported backends are rejected") {
#if defined(__x86_64__)
    CHECK_FALSE(kernels::set_backend(Backend::neon));
#else
    CHECK_FALSE(kernels::set_backend(Backend::avx2));
#endif
}
