#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tda {

enum class Metric { euclidean, cosine };

Metric parse_metric(std::string_view name); // throws ConfigError on unknown name
std::string_view metric_name(Metric m);

// Fixed-dimension point set with opaque per-point ids. Rows are contiguous
// so the distance kernels can run directly over them.
class PointCloud {
public:
    PointCloud() = default;
    explicit PointCloud(std::size_t dim) : dim_(dim) {}

    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    // id defaults to the decimal row index; duplicate ids are rejected later
    // by validate_ids() (called by the CSV loader).
    void add(std::span<const double> coords, std::string id = "");
    void validate_ids() const;

    std::size_t size() const { return ids_.size(); }
    std::size_t dim() const { return dim_; }
    bool empty() const { return ids_.empty(); }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    const std::string& id(std::size_t i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
    std::vector<std::string> ids_;
};

// Symmetric dissimilarity matrix with zero diagonal; the strict upper
// triangle is stored row-wise.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n, Metric tag = Metric::euclidean);

    std::size_t size() const { return n_; }
    Metric metric_tag() const { return tag_; }

    double operator()(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        return entries_[offset(i, j)];
    }
    void set(std::size_t i, std::size_t j, double v) { entries_[offset(i, j)] = v; }

    // Largest entry (the diameter of the underlying cloud); 0 when n <= 1.
    double max_value() const;

    // Restriction to a subset of indices, in the given order.
    DistanceMatrix restrict_to(std::span<const int> indices) const;

private:
    std::size_t offset(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        // row i of the strict upper triangle starts after i rows of
        // decreasing length: i*n - i(i+1)/2
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t n_ = 0;
    Metric tag_ = Metric::euclidean;
    std::vector<double> entries_;
};

// Cosine distance is 1 - (u.v)/(|u||v|), clamped into [0, 2].
// Throws ConfigError on an empty cloud or a zero vector under cosine.
DistanceMatrix pairwise_distances(const PointCloud& cloud, Metric metric);

} // namespace tda
