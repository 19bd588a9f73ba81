#include "tda/diagram_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "tda/errors.hpp"

namespace tda {

namespace {

struct FinitePoint {
    double birth, death;
};

double sup_dist(const FinitePoint& x, const FinitePoint& y) {
    return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
}

double diag_dist(const FinitePoint& x) { return (x.death - x.birth) / 2.0; }

struct SplitDiagram {
    std::vector<FinitePoint> finite;
    std::vector<double> infinite_births; // sorted
};

SplitDiagram split(const PersistenceDiagram& d, int dim) {
    SplitDiagram s;
    for (const auto& p : d.points) {
        if (p.dim != dim) continue;
        if (p.is_infinite())
            s.infinite_births.push_back(p.birth);
        else
            s.finite.push_back({p.birth, p.death});
    }
    std::sort(s.infinite_births.begin(), s.infinite_births.end());
    return s;
}

// Hopcroft-Karp maximum bipartite matching.
class BipartiteMatcher {
public:
    BipartiteMatcher(int n_left, int n_right)
        : n_left_(n_left), n_right_(n_right), adj_(n_left) {}

    void add_edge(int u, int v) { adj_[u].push_back(v); }

    int max_matching() {
        match_left_.assign(n_left_, -1);
        match_right_.assign(n_right_, -1);
        int matched = 0;
        while (bfs()) {
            for (int u = 0; u < n_left_; ++u)
                if (match_left_[u] < 0 && dfs(u)) ++matched;
        }
        return matched;
    }

private:
    static constexpr int kUnreached = 1 << 30;

    bool bfs() {
        std::queue<int> q;
        dist_.assign(n_left_, kUnreached);
        for (int u = 0; u < n_left_; ++u)
            if (match_left_[u] < 0) {
                dist_[u] = 0;
                q.push(u);
            }
        bool found = false;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj_[u]) {
                const int w = match_right_[v];
                if (w < 0)
                    found = true;
                else if (dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int v : adj_[u]) {
            const int w = match_right_[v];
            if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kUnreached;
        return false;
    }

    int n_left_, n_right_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_, match_right_, dist_;
};

// Is there a perfect matching using only edges of cost <= lambda on the
// diagonal-augmented graph? Left: A's points then B's diagonal partners;
// right: B's points then A's diagonal partners.
bool feasible_at(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b,
                 double lambda) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    const int n = na + nb;
    BipartiteMatcher m(n, n);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            if (sup_dist(a[i], b[j]) <= lambda) m.add_edge(i, j);
    for (int i = 0; i < na; ++i)
        if (diag_dist(a[i]) <= lambda) m.add_edge(i, nb + i);
    for (int j = 0; j < nb; ++j)
        if (diag_dist(b[j]) <= lambda) m.add_edge(na + j, j);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i) m.add_edge(na + j, nb + i); // diagonal-diagonal, cost 0
    return m.max_matching() == n;
}

double bottleneck_finite(const std::vector<FinitePoint>& a, const std::vector<FinitePoint>& b) {
    if (a.empty() && b.empty()) return 0.0;
    std::vector<double> candidates{0.0};
    for (const auto& x : a) candidates.push_back(diag_dist(x));
    for (const auto& y : b) candidates.push_back(diag_dist(y));
    for (const auto& x : a)
        for (const auto& y : b) candidates.push_back(sup_dist(x, y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // the largest candidate (everything to its diagonal) is always feasible
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible_at(a, b, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

// Minimum-cost perfect matching, O(n^3) shortest augmenting paths with
// potentials. cost is row-major n x n.
double hungarian(const std::vector<double>& cost, int n) {
    if (n == 0) return 0.0;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        minv.assign(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    double total = 0.0;
    for (int j = 1; j <= n; ++j) total += cost[(p[j] - 1) * n + (j - 1)];
    return total;
}

// Total p-power transport cost of the optimal finite-part matching.
double wasserstein_finite_total(const std::vector<FinitePoint>& a,
                                const std::vector<FinitePoint>& b, double p) {
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    const int n = na + nb;
    if (n == 0) return 0.0;
    // row i < na: a[i]; row na+j: diagonal partner of b[j]
    // col j < nb: b[j]; col nb+i: diagonal partner of a[i]
    std::vector<double> cost(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) cost[i * n + j] = std::pow(sup_dist(a[i], b[j]), p);
        const double d = std::pow(diag_dist(a[i]), p);
        for (int j = nb; j < n; ++j) cost[i * n + j] = d;
    }
    for (int j = 0; j < nb; ++j) {
        const double d = std::pow(diag_dist(b[j]), p);
        for (int i = na; i < n; ++i) cost[i * n + j] = d;
    }
    return hungarian(cost, n);
}

} // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim,
                  bool* infinite_mismatch) {
    if (infinite_mismatch) *infinite_mismatch = false;
    const SplitDiagram sa = split(a, dim), sb = split(b, dim);
    if (sa.infinite_births.size() != sb.infinite_births.size()) {
        if (infinite_mismatch) *infinite_mismatch = true;
        return kInfiniteDeath;
    }
    double inf_part = 0.0;
    for (std::size_t i = 0; i < sa.infinite_births.size(); ++i)
        inf_part = std::max(inf_part, std::abs(sa.infinite_births[i] - sb.infinite_births[i]));
    return std::max(inf_part, bottleneck_finite(sa.finite, sb.finite));
}

double wasserstein(const PersistenceDiagram& a, const PersistenceDiagram& b, int dim, double p,
                   bool* infinite_mismatch) {
    if (p < 1.0) throw ConfigError("wasserstein: p must be >= 1");
    if (infinite_mismatch) *infinite_mismatch = false;
    const SplitDiagram sa = split(a, dim), sb = split(b, dim);
    if (sa.infinite_births.size() != sb.infinite_births.size()) {
        if (infinite_mismatch) *infinite_mismatch = true;
        return kInfiniteDeath;
    }
    double total = wasserstein_finite_total(sa.finite, sb.finite, p);
    for (std::size_t i = 0; i < sa.infinite_births.size(); ++i)
        total += std::pow(std::abs(sa.infinite_births[i] - sb.infinite_births[i]), p);
    return std::pow(total, 1.0 / p);
}

PersistenceDiagram drop_one_infinite_bar(const PersistenceDiagram& d, int dim) {
    PersistenceDiagram out = d;
    for (auto it = out.points.begin(); it != out.points.end(); ++it) {
        if (it->dim == dim && it->is_infinite()) {
            out.points.erase(it);
            break;
        }
    }
    return out;
}

} // namespace tda
