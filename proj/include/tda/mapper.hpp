#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tda/cluster.hpp"
#include "tda/embed.hpp"
#include "tda/metric.hpp"

namespace tda {

// Overlapping interval cover of the lens range. Bin i on an axis spans
// [min + i*w - o*w/2, min + (i+1)*w + o*w/2] with w = range/resolution;
// membership is half-open except that the last bin absorbs the axis max.
// A zero-range axis collapses to a single bin.
class Cover {
public:
    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
    };
    struct Bin {
        int id = 0;
        std::array<Interval, 2> box{};
        std::array<bool, 2> last_on_axis{};
    };

    int dims() const { return dims_; }
    const std::vector<Bin>& bins() const { return bins_; }
    const std::array<double, 2>& axis_max() const { return axis_max_; }

    bool contains(const Bin& bin, std::span<const double> coords) const;

private:
    friend Cover build_cover(const Embedding&, std::span<const int>, std::span<const double>);

    int dims_ = 1;
    std::array<double, 2> axis_max_{};
    std::vector<Bin> bins_;
};

// resolution >= 1 per axis, 0 <= overlap < 1.
Cover build_cover(const Embedding& lens, std::span<const int> resolution,
                  std::span<const double> overlap);

struct MapperNode {
    int id = 0;
    int bin = 0;
    std::vector<int> members; // row indices, ascending
    std::map<std::string, int> composition;

    std::size_t size() const { return members.size(); }
};

struct MapperEdge {
    int source = 0;
    int target = 0;
    int shared = 0; // common member count, > 0
};

struct MapperGraph {
    std::vector<MapperNode> nodes;
    std::vector<MapperEdge> edges;

    std::size_t component_count() const;
    // edges - nodes + components; 1 for a single cycle
    long cycle_rank() const;
};

// Pull back each cover bin through the lens, cluster its members on the
// original-space metric, one node per cluster, edges between nodes sharing
// members. `labels`, when nonempty, must align with dm rows and fills each
// node's label composition.
MapperGraph build_mapper(const Embedding& lens, const DistanceMatrix& dm, const Cover& cover,
                         const CutRule& cut_rule, const std::vector<std::string>& labels = {});

// Majority label when its share >= both_threshold, else "both".
std::map<int, std::string> assign_node_clusters(const MapperGraph& g, double both_threshold = 0.65);

// Per-cluster label shares: share(cluster, label) = sum of that label's
// counts over the cluster's nodes / sum of node sizes. Empty clusters are
// absent. Requires every node assigned.
struct PurityReport {
    std::map<std::string, std::map<std::string, double>> shares;
    std::map<std::string, std::size_t> sizes;
};

PurityReport cluster_purity(const MapperGraph& g, const std::map<int, std::string>& partition);

// Terms ranked by summed TF-IDF weight over the node's members, ties
// lexicographic, top_k entries.
std::vector<std::pair<std::string, double>> term_summary(const MapperNode& node,
                                                         const DocumentTermMatrix& dtm,
                                                         std::size_t top_k);

} // namespace tda
