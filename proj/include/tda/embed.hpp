#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tda/metric.hpp"
#include "tda/text.hpp"

namespace tda {

// Low-dimensional lens coordinates, one row per doc/point.
struct Embedding {
    std::size_t dim = 0;
    std::vector<double> coords; // row-major size() x dim
    std::vector<std::string> ids;
    std::string method;
    std::uint64_t seed = 0;

    // Only set by truncated_svd: top-k singular values (nonincreasing) and
    // right singular vectors (row-major k x terms).
    std::vector<double> singular_values;
    std::vector<double> components;

    std::size_t size() const { return ids.size(); }
    std::span<const double> row(std::size_t i) const { return {coords.data() + i * dim, dim}; }
};

// Randomized subspace iteration (oversampling 7 capped at the matrix size,
// 4 power iterations), deterministic for a given seed. Component signs are
// fixed by making the largest-magnitude entry of each right singular vector
// positive (ties: lowest index). Requires 1 <= k <= min(docs, terms).
Embedding truncated_svd(const DocumentTermMatrix& dtm, int k, std::uint64_t seed);

// The 1-d lens given by one coordinate of the cloud.
Embedding coordinate_projection(const PointCloud& cloud, int axis);

} // namespace tda
