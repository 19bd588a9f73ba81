#include "tda/metric.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "tda/errors.hpp"
#include "tda/kernels.hpp"

namespace tda {

Metric parse_metric(std::string_view name) {
    if (name == "euclidean") return Metric::euclidean;
    if (name == "cosine") return Metric::cosine;
    throw ConfigError("unknown metric '" + std::string(name) + "' (expected euclidean or cosine)");
}

std::string_view metric_name(Metric m) {
    return m == Metric::euclidean ? "euclidean" : "cosine";
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    PointCloud cloud(rows.empty() ? 0 : rows.front().size());
    for (const auto& r : rows) cloud.add(r);
    return cloud;
}

void PointCloud::add(std::span<const double> coords, std::string id) {
    if (coords.empty()) throw ConfigError("point cloud: point with dimension 0");
    if (ids_.empty() && dim_ == 0) dim_ = coords.size();
    if (coords.size() != dim_)
        throw ConfigError("point cloud: dimension mismatch at row " + std::to_string(ids_.size()) +
                          " (got " + std::to_string(coords.size()) + ", expected " +
                          std::to_string(dim_) + ")");
    if (id.empty()) id = std::to_string(ids_.size());
    data_.insert(data_.end(), coords.begin(), coords.end());
    ids_.push_back(std::move(id));
}

void PointCloud::validate_ids() const {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids_)
        if (!seen.insert(id).second)
            throw ConfigError("point cloud: duplicate id '" + id + "'");
}

DistanceMatrix::DistanceMatrix(std::size_t n, Metric tag)
    : n_(n), tag_(tag), entries_(n * (n - 1) / 2, 0.0) {}

double DistanceMatrix::max_value() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, v);
    return m;
}

DistanceMatrix DistanceMatrix::restrict_to(std::span<const int> indices) const {
    DistanceMatrix sub(indices.size(), tag_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            sub.set(i, j, (*this)(indices[i], indices[j]));
    return sub;
}

DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric) {
    if (cloud.empty()) throw ConfigError("pairwise_distances: empty point cloud");
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();
    DistanceMatrix dm(n, metric);

    if (metric == Metric::euclidean) {
        for (std::size_t i = 0; i < n; ++i) {
            const double* xi = cloud.row(i).data();
            for (std::size_t j = i + 1; j < n; ++j)
                dm.set(i, j, std::sqrt(kernels::squared_distance(xi, cloud.row(j).data(), d)));
        }
        return dm;
    }

    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        norms[i] = std::sqrt(kernels::squared_norm(cloud.row(i).data(), d));
        if (norms[i] == 0.0)
            throw ConfigError("pairwise_distances: cosine metric undefined for zero vector (point '" +
                              cloud.id(i) + "')");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double* xi = cloud.row(i).data();
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sim = kernels::dot(xi, cloud.row(j).data(), d) / (norms[i] * norms[j]);
            dm.set(i, j, std::clamp(1.0 - sim, 0.0, 2.0));
        }
    }
    return dm;
}

} // namespace tda
