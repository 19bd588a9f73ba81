#pragma once

#include <cstddef>
#include <vector>

#include "tda/metric.hpp"

namespace tda {

// Complete-linkage merge tree, scipy-style ids: leaves are 0..n-1 and the
// cluster produced by merge i gets id n+i. Merge distances nondecreasing.
struct Dendrogram {
    struct Merge {
        int left = 0;
        int right = 0;
        double distance = 0.0;
    };

    std::size_t leaf_count = 0;
    std::vector<Merge> merges;
};

// Repeatedly merges the pair of clusters with the smallest maximum
// inter-point distance; ties broken by (smaller id, then other id).
Dendrogram agglomerate(const DistanceMatrix& dm);

struct CutRule {
    enum class Kind { threshold, count, first_gap };

    Kind kind = Kind::first_gap;
    double tau = 0.0;        // threshold
    std::size_t k = 1;       // count
    double gap_factor = 2.0; // first_gap

    static CutRule threshold(double tau);
    static CutRule count(std::size_t k);
    static CutRule first_gap(double factor = 2.0);
};

// Partition of the leaves. Labels are 0-based, ordered by each cluster's
// smallest leaf index. first_gap cuts at the largest ratio between
// consecutive merge distances when it exceeds gap_factor, else one cluster.
std::vector<int> cut(const Dendrogram& dg, const CutRule& rule);

std::size_t cluster_count(const std::vector<int>& assignment);

} // namespace tda
