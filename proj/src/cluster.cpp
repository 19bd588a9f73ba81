#include "tda/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tda/errors.hpp"

namespace tda {

CutRule CutRule::threshold(double tau) { return {Kind::threshold, tau, 1, 2.0}; }
CutRule CutRule::count(std::size_t k) { return {Kind::count, 0.0, k, 2.0}; }
CutRule CutRule::first_gap(double factor) { return {Kind::first_gap, 0.0, 1, factor}; }

Dendrogram agglomerate(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    if (n == 0) throw ConfigError("agglomerate: empty distance matrix");

    Dendrogram dg;
    dg.leaf_count = n;
    if (n == 1) return dg;

    // Active clusters with Lance-Williams complete-linkage updates:
    // d(a+b, c) = max(d(a,c), d(b,c)).
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = dm(i, j);

    int next_id = static_cast<int>(n);
    while (ids.size() > 1) {
        std::size_t best_a = 0, best_b = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < ids.size(); ++a) {
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                const double d = dist[a][b];
                if (d > best) continue;
                const int lo = std::min(ids[a], ids[b]), hi = std::max(ids[a], ids[b]);
                const int cur_lo = std::min(ids[best_a], ids[best_b]);
                const int cur_hi = std::max(ids[best_a], ids[best_b]);
                if (d < best || lo < cur_lo || (lo == cur_lo && hi < cur_hi)) {
                    best = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        dg.merges.push_back({std::min(ids[best_a], ids[best_b]),
                             std::max(ids[best_a], ids[best_b]), best});
        // merge b into a, drop b
        for (std::size_t c = 0; c < ids.size(); ++c) {
            if (c == best_a || c == best_b) continue;
            dist[best_a][c] = dist[c][best_a] = std::max(dist[best_a][c], dist[best_b][c]);
        }
        ids[best_a] = next_id++;
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(best_b));
        dist.erase(dist.begin() + static_cast<std::ptrdiff_t>(best_b));
        for (auto& row : dist) row.erase(row.begin() + static_cast<std::ptrdiff_t>(best_b));
    }
    return dg;
}

namespace {

std::vector<int> apply_merges(const Dendrogram& dg, std::size_t merge_count) {
    const std::size_t n = dg.leaf_count;
    // union-find over leaf + internal ids
    std::vector<int> parent(n + dg.merges.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t m = 0; m < merge_count; ++m) {
        const auto& mg = dg.merges[m];
        const int root = static_cast<int>(n + m);
        parent[find(mg.left)] = root;
        parent[find(mg.right)] = root;
    }
    std::vector<int> assignment(n, -1);
    std::vector<int> label_of_root(parent.size(), -1);
    int next_label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int r = find(static_cast<int>(i));
        if (label_of_root[r] < 0) label_of_root[r] = next_label++;
        assignment[i] = label_of_root[r];
    }
    return assignment;
}

std::size_t first_gap_merge_count(const Dendrogram& dg, double factor) {
    const auto& m = dg.merges;
    if (m.size() < 2) return m.size();
    double best_ratio = 0.0;
    std::size_t best_i = m.size(); // cut position: apply merges [0, best_i)
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        const double lo = m[i].distance, hi = m[i + 1].distance;
        double ratio;
        if (lo == 0.0)
            ratio = hi > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        else
            ratio = hi / lo;
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_i = i + 1;
        }
    }
    return best_ratio > factor ? best_i : m.size();
}

} // namespace

std::vector<int> cut(const Dendrogram& dg, const CutRule& rule) {
    const std::size_t n = dg.leaf_count;
    switch (rule.kind) {
    case CutRule::Kind::threshold: {
        std::size_t m = 0;
        while (m < dg.merges.size() && dg.merges[m].distance <= rule.tau) ++m;
        return apply_merges(dg, m);
    }
    case CutRule::Kind::count: {
        if (rule.k == 0 || rule.k > n)
            throw ConfigError("cut: cluster count " + std::to_string(rule.k) +
                              " out of range for " + std::to_string(n) + " leaves");
        return apply_merges(dg, n - rule.k);
    }
    case CutRule::Kind::first_gap:
        return apply_merges(dg, first_gap_merge_count(dg, rule.gap_factor));
    }
    throw ConfigError("cut: unknown rule");
}

std::size_t cluster_count(const std::vector<int>& assignment) {
    int hi = -1;
    for (int a : assignment) hi = std::max(hi, a);
    return static_cast<std::size_t>(hi + 1);
}

} // namespace tda
